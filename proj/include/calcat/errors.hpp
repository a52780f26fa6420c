#pragma once

#include <stdexcept>
#include <string>

namespace calcat {

struct SpaceMismatch : std::runtime_error {
  explicit SpaceMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct MissingCapability : std::runtime_error {
  explicit MissingCapability(const std::string& what) : std::runtime_error(what) {}
};

struct NotGradePreserving : std::runtime_error {
  explicit NotGradePreserving(const std::string& what) : std::runtime_error(what) {}
};

struct NotField : std::runtime_error {
  explicit NotField(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t pos_, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

struct TypeErrorEx : std::runtime_error {
  std::string subterm, expected, found;
  TypeErrorEx(std::string subterm_, std::string expected_, std::string found_)
      : std::runtime_error("type error in `" + subterm_ + "`: expected " + expected_ +
                           ", found " + found_),
        subterm(std::move(subterm_)),
        expected(std::move(expected_)),
        found(std::move(found_)) {}
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace calcat

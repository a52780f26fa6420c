#pragma once

#include <memory>
#include <string>
#include <vector>

namespace calcat {

// Object expressions over a strict symmetric monoidal signature: the unit I,
// named base objects, !(-), and tensor. Tensors are kept flat with unit
// factors dropped, so structural equality decides object equality and
// associators/unitors never appear.
class ObjectExpr {
 public:
  enum class Kind { Unit, Base, Bang, Tensor };

  static ObjectExpr unit();
  static ObjectExpr base(std::string name);
  static ObjectExpr bang(ObjectExpr inner);
  static ObjectExpr tensor(std::vector<ObjectExpr> factors);  // normalizes

  Kind kind() const { return kind_; }
  const std::string& base_name() const { return base_; }
  const ObjectExpr& inner() const { return *inner_; }
  const std::vector<ObjectExpr>& factors() const { return factors_; }

  bool operator==(const ObjectExpr& o) const { return str() == o.str(); }
  bool operator!=(const ObjectExpr& o) const { return !(*this == o); }

  // Canonical text: `I`, `A`, `!A`, `!A*A`, `!(A*B)`, ...
  const std::string& str() const { return text_; }

 private:
  ObjectExpr() = default;
  void render();

  Kind kind_ = Kind::Unit;
  std::string base_;
  std::shared_ptr<const ObjectExpr> inner_;
  std::vector<ObjectExpr> factors_;
  std::string text_;
};

}  // namespace calcat

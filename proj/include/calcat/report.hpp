#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace calcat {

// Run-time bounds; resolved per model by the CLI (degree: sym 4 / rb 3,
// rel uses bag_size for every entry). delta_degree and outer_card bound the
// enumeration of inputs under δ (nested-! spaces, unit-letter padding).
struct RunBounds {
  int degree = 4;
  int delta_degree = 3;
  int outer_card = 3;
  int vars = 3;      // sym variables
  int elements = 3;  // rel elements
  int bag_size = 5;
  uint64_t seed = 0;
  bool parallel = true;
};

struct WitnessReport {
  std::string input, lhs, rhs;
  int grade = 0;
};

struct EquationReport {
  enum class Verdict { Pass, Fail, ExpectedFailConfirmed, Skipped };
  std::string id;
  std::string anchor;
  Verdict verdict = Verdict::Pass;
  std::string detail;  // skip reason / failure context
  std::optional<WitnessReport> witness;
  long inputs = 0;
  double ms = 0.0;
};

const char* verdict_str(EquationReport::Verdict v);

struct Report {
  std::string model;
  std::string suite;
  RunBounds bounds;
  std::vector<EquationReport> results;

  bool all_ok() const;  // no Fail verdicts
};

std::string report_json(const Report& r, bool with_timing);
void report_text(std::ostream& os, const Report& r, bool witness_only, bool with_timing);

}  // namespace calcat

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "calcat/space.hpp"
#include "calcat/vec.hpp"

namespace calcat {

// A basis-indexed lazy linear map: apply is pure, total on the domain basis,
// and extends linearly. Nothing is ever truncated; enumeration bounds apply
// only to which inputs an equality check visits.
struct LinMap {
  SpacePtr dom, cod;
  const Rig* rig = nullptr;
  bool grade_preserving = false;
  std::function<Vec(const BasisPtr&)> apply;
};

LinMap lin_identity(SpacePtr s, const Rig& rig);
LinMap lin_zero(SpacePtr dom, SpacePtr cod, const Rig& rig);
// f then g (throws SpaceMismatch unless cod(f) = dom(g)).
LinMap lin_compose(const LinMap& f, const LinMap& g);
LinMap lin_tensor(const LinMap& f, const LinMap& g);
// Pointwise sum / scale (throws SpaceMismatch on different boundaries).
LinMap lin_add(const LinMap& f, const LinMap& g);
LinMap lin_scale(const Rational& r, const LinMap& f);
// Slot permutation: slot i of the output takes slot perm[i] of the input.
LinMap lin_permute(SpacePtr dom, std::vector<int> perm, const Rig& rig);

Vec apply_vec(const LinMap& f, const Vec& v);

// Finite-table map on an enumerated basis (absent inputs map to zero).
LinMap lin_table(SpacePtr dom, SpacePtr cod, const Rig& rig,
                 std::vector<std::pair<BasisPtr, Vec>> table);

struct EqWitness {
  BasisPtr input;
  Vec lhs, rhs;
};

struct EqVerdict {
  bool equal = true;
  std::optional<EqWitness> witness;  // present iff !equal
  long inputs_checked = 0;
};

// Compares f and g on every domain basis element within the budget, in basis
// order; the witness is the minimal disagreeing input. `parallel` selects the
// OpenMP kernel (identical verdicts to the serial reference by construction).
EqVerdict equal_on(const LinMap& f, const LinMap& g, const EnumBudget& budget, bool parallel);
EqVerdict equal_on_serial(const LinMap& f, const LinMap& g, const EnumBudget& budget);

struct InverseResult {
  bool invertible = false;
  LinMap inverse;                     // valid iff invertible
  int failed_grade = -1;              // grade of the failing block otherwise
  std::optional<BasisPtr> kernel_witness;  // representative basis element
  Vec kernel_vec;                     // full kernel combination (if kernel found)
};

// Inverts a grade-preserving endomap block-by-block up to budget.max_grade
// over a field rig. Throws NotField / NotGradePreserving / SpaceMismatch.
InverseResult invert_blockwise(const LinMap& f, const EnumBudget& budget);

}  // namespace calcat

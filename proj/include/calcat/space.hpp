#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "calcat/basis.hpp"

namespace calcat {

// Enumeration budget: inputs are enumerated up to a total grade, with at most
// `max_zero_letters` letters of grade 0 per multiset/word level (grade-0
// letters — unit monomials, empty bags, unit-object tokens — are the only
// source of infinite grade blocks). Outputs of maps are never truncated.
struct EnumBudget {
  int max_grade = 4;
  int max_zero_letters = 3;
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// Interpretation of an object expression in a model: a graded basis with a
// deterministic enumeration. Closed world of space shapes:
//   Unit    — the monoidal unit; one element of grade 0 (the empty tuple)
//   Atoms   — a base object spanned by named points of grade 1
//   Tensor  — flattened slot list of non-unit factors
//   MSetOf  — free commutative monoid on a letter space (monomials / bags)
//   RBPair  — shuffle word over a monomial space paired with a monomial
//   Empty   — the zero space (no basis elements)
class Space {
 public:
  enum class Kind { Unit, Atoms, Tensor, MSetOf, RBPair, Empty };
  enum class MSetStyle { Monomial, Bag, Braces };

  static SpacePtr unit();
  static SpacePtr atoms(std::vector<std::pair<int, std::string>> named, std::string label);
  static SpacePtr tensor(std::vector<SpacePtr> factors);
  static SpacePtr mset_of(SpacePtr letters, MSetStyle style);
  static SpacePtr rb_pair(SpacePtr mono_space);
  static SpacePtr empty(std::string label);

  Kind kind() const { return kind_; }
  MSetStyle mset_style() const { return style_; }
  const std::vector<SpacePtr>& factors() const { return factors_; }
  const SpacePtr& letters() const { return factors_[0]; }
  const std::vector<std::pair<int, std::string>>& atom_table() const { return atoms_; }

  // Number of tensor slots (Unit: 0, Tensor: #factors, otherwise 1).
  int arity() const;
  const std::string& key() const { return key_; }
  bool same(const Space& o) const { return key_ == o.key_; }

  // All basis elements within the budget, sorted by the basis order.
  std::vector<BasisPtr> enumerate(const EnumBudget& budget) const;

  void print_elem(std::ostream& os, const BasisPtr& b) const;
  std::string elem_str(const BasisPtr& b) const;
  // Parses an element (CLI input syntax); throws ParseError.
  BasisPtr parse_elem(const std::string& text) const;

 private:
  Space(Kind k, MSetStyle st, std::vector<SpacePtr> factors,
        std::vector<std::pair<int, std::string>> atoms, std::string key)
      : kind_(k), style_(st), factors_(std::move(factors)), atoms_(std::move(atoms)),
        key_(std::move(key)) {}

  void enum_into(const EnumBudget& budget, std::vector<BasisPtr>& out) const;
  BasisPtr parse_at(const std::string& s, size_t& pos) const;

  Kind kind_;
  MSetStyle style_;
  std::vector<SpacePtr> factors_;
  std::vector<std::pair<int, std::string>> atoms_;
  std::string key_;
};

}  // namespace calcat

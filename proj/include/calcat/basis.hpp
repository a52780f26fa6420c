#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace calcat {

class Basis;
using BasisPtr = std::shared_ptr<const Basis>;

// A basis element is an immutable tree. Atoms index into a model's atom table
// and carry their grade; composites cache grade and hash. The order is total,
// deterministic, and graded (grade first), so enumeration order and witness
// selection are reproducible.
//
//   Atom   — a named generator point (variable, set element, unit-object token)
//   Tuple  — a tensor tuple (slot list; the empty tuple is the unit token)
//   MSet   — a multiset (monomial over its kid basis / bag); kids sorted
//   Word   — an ordered sequence (shuffle-algebra word); kids as given
class Basis {
 public:
  enum class Tag : uint8_t { Atom = 0, Tuple = 1, MSet = 2, Word = 3 };

  static BasisPtr atom(int32_t id, int32_t grade);
  static BasisPtr tuple(std::vector<BasisPtr> kids);
  static BasisPtr mset(std::vector<BasisPtr> kids);  // sorts its kids
  static BasisPtr word(std::vector<BasisPtr> kids);

  Tag tag() const { return tag_; }
  int32_t atom_id() const { return atom_; }
  int32_t grade() const { return grade_; }
  size_t hash() const { return hash_; }
  const std::vector<BasisPtr>& kids() const { return kids_; }
  size_t size() const { return kids_.size(); }

 private:
  Basis(Tag t, int32_t atom, int32_t grade, size_t hash, std::vector<BasisPtr> kids)
      : tag_(t), atom_(atom), grade_(grade), hash_(hash), kids_(std::move(kids)) {}

  Tag tag_;
  int32_t atom_;
  int32_t grade_;
  size_t hash_;
  std::vector<BasisPtr> kids_;
};

// Graded total order: grade, then tag, then content (atoms by id, composites
// by length then lexicographic recursion). Returns <0, 0, >0.
int basis_cmp(const Basis& a, const Basis& b);
inline int basis_cmp(const BasisPtr& a, const BasisPtr& b) { return basis_cmp(*a, *b); }
inline bool basis_eq(const BasisPtr& a, const BasisPtr& b) {
  return a == b || (a->hash() == b->hash() && basis_cmp(*a, *b) == 0);
}
inline bool basis_lt(const BasisPtr& a, const BasisPtr& b) { return basis_cmp(*a, *b) < 0; }

const BasisPtr& unit_basis();  // the empty tuple

// Multiset helpers (operands must be MSets).
BasisPtr mset_union(const BasisPtr& a, const BasisPtr& b);
BasisPtr mset_insert(const BasisPtr& m, const BasisPtr& letter);
// Removes one copy of the kid at position i.
BasisPtr mset_erase_at(const BasisPtr& m, size_t i);

// Tensor slot packing: a 1-slot value is the element itself, n-slot values are
// flat tuples, a 0-slot value is the unit token.
std::vector<BasisPtr> slots_of(const BasisPtr& b, int arity);
BasisPtr from_slots(std::vector<BasisPtr> slots);

}  // namespace calcat

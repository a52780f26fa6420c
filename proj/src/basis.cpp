#include "calcat/basis.hpp"

#include <algorithm>
#include <cassert>

namespace calcat {

namespace {

size_t mix(size_t h, size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

size_t node_hash(Basis::Tag t, int32_t atom, const std::vector<BasisPtr>& kids) {
  size_t h = static_cast<size_t>(t) * 0x100000001b3ULL;
  h = mix(h, static_cast<size_t>(static_cast<uint32_t>(atom)));
  for (const auto& k : kids) h = mix(h, k->hash());
  return h;
}

int32_t kids_grade(const std::vector<BasisPtr>& kids) {
  int32_t g = 0;
  for (const auto& k : kids) g += k->grade();
  return g;
}

struct BasisMaker : Basis {};

BasisPtr make(Basis::Tag t, int32_t atom, int32_t grade, std::vector<BasisPtr> kids) {
  struct Node : Basis {
    Node(Tag t, int32_t a, int32_t g, size_t h, std::vector<BasisPtr> k)
        : Basis(t, a, g, h, std::move(k)) {}
  };
  size_t h = node_hash(t, atom, kids);
  return std::make_shared<Node>(t, atom, grade, h, std::move(kids));
}

}  // namespace

BasisPtr Basis::atom(int32_t id, int32_t grade) { return make(Tag::Atom, id, grade, {}); }

BasisPtr Basis::tuple(std::vector<BasisPtr> kids) {
  int32_t g = kids_grade(kids);
  return make(Tag::Tuple, -1, g, std::move(kids));
}

BasisPtr Basis::mset(std::vector<BasisPtr> kids) {
  std::sort(kids.begin(), kids.end(), basis_lt);
  int32_t g = kids_grade(kids);
  return make(Tag::MSet, -1, g, std::move(kids));
}

BasisPtr Basis::word(std::vector<BasisPtr> kids) {
  int32_t g = kids_grade(kids);
  return make(Tag::Word, -1, g, std::move(kids));
}

int basis_cmp(const Basis& a, const Basis& b) {
  if (&a == &b) return 0;
  if (a.grade() != b.grade()) return a.grade() < b.grade() ? -1 : 1;
  if (a.tag() != b.tag()) return static_cast<int>(a.tag()) < static_cast<int>(b.tag()) ? -1 : 1;
  if (a.tag() == Basis::Tag::Atom) {
    if (a.atom_id() != b.atom_id()) return a.atom_id() < b.atom_id() ? -1 : 1;
    return 0;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = basis_cmp(*a.kids()[i], *b.kids()[i]);
    if (c != 0) return c;
  }
  return 0;
}

const BasisPtr& unit_basis() {
  static const BasisPtr u = Basis::tuple({});
  return u;
}

BasisPtr mset_union(const BasisPtr& a, const BasisPtr& b) {
  assert(a->tag() == Basis::Tag::MSet && b->tag() == Basis::Tag::MSet);
  std::vector<BasisPtr> kids;
  kids.reserve(a->size() + b->size());
  std::merge(a->kids().begin(), a->kids().end(), b->kids().begin(), b->kids().end(),
             std::back_inserter(kids), basis_lt);
  int32_t g = a->grade() + b->grade();
  (void)g;
  return Basis::mset(std::move(kids));
}

BasisPtr mset_insert(const BasisPtr& m, const BasisPtr& letter) {
  assert(m->tag() == Basis::Tag::MSet);
  std::vector<BasisPtr> kids = m->kids();
  kids.push_back(letter);
  return Basis::mset(std::move(kids));
}

BasisPtr mset_erase_at(const BasisPtr& m, size_t i) {
  assert(m->tag() == Basis::Tag::MSet && i < m->size());
  std::vector<BasisPtr> kids = m->kids();
  kids.erase(kids.begin() + static_cast<ptrdiff_t>(i));
  return Basis::mset(std::move(kids));
}

std::vector<BasisPtr> slots_of(const BasisPtr& b, int arity) {
  if (arity == 1) return {b};
  if (arity == 0) return {};
  assert(b->tag() == Basis::Tag::Tuple && static_cast<int>(b->size()) == arity);
  return b->kids();
}

BasisPtr from_slots(std::vector<BasisPtr> slots) {
  if (slots.size() == 1) return slots[0];
  return Basis::tuple(std::move(slots));
}

}  // namespace calcat

#include "calcat/model.hpp"

#include "calcat/errors.hpp"

namespace calcat {

Morphism m_id(const Model& m, const ObjectExpr& x) {
  return Morphism{x, x, lin_identity(m.space(x), m.rig())};
}

Morphism m_zero(const Model& m, const ObjectExpr& dom, const ObjectExpr& cod) {
  return Morphism{dom, cod, lin_zero(m.space(cod), m.space(dom), m.rig())};
}

Morphism m_seq(const Morphism& f, const Morphism& g) {
  if (f.cod != g.dom)
    throw SpaceMismatch("sequential composite: " + f.cod.str() + " != " + g.dom.str());
  return Morphism{f.dom, g.cod, lin_compose(g.carrier, f.carrier)};
}

Morphism m_par(const Model& m, const Morphism& f, const Morphism& g) {
  (void)m;
  return Morphism{ObjectExpr::tensor({f.dom, g.dom}), ObjectExpr::tensor({f.cod, g.cod}),
                  lin_tensor(f.carrier, g.carrier)};
}

Morphism m_add(const Morphism& f, const Morphism& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw SpaceMismatch("sum boundaries differ: " + f.dom.str() + "->" + f.cod.str() + " vs " +
                        g.dom.str() + "->" + g.cod.str());
  return Morphism{f.dom, f.cod, lin_add(f.carrier, g.carrier)};
}

Morphism m_scale(const Model& m, const Rational& r, const Morphism& f) {
  auto lift = m.rig().from_literal(r);
  if (!lift)
    throw MissingCapability("scalar " + scalar_str(r) + " has no meaning over rig " +
                            m.rig().name());
  return Morphism{f.dom, f.cod, lin_scale(*lift, f.carrier)};
}

Morphism m_perm(const Model& m, const std::vector<ObjectExpr>& factors,
                const std::vector<int>& perm) {
  // paper map: X_0 ⊗ ... ⊗ X_{n-1} -> X_{perm[0]} ⊗ ...; carrier direction is
  // the inverse slot shuffle.
  std::vector<ObjectExpr> cod_factors;
  cod_factors.reserve(perm.size());
  for (int p : perm) cod_factors.push_back(factors[static_cast<size_t>(p)]);
  ObjectExpr dom = ObjectExpr::tensor(factors);
  ObjectExpr cod = ObjectExpr::tensor(cod_factors);

  // slot offsets in dom per factor
  std::vector<int> offset(factors.size() + 1, 0);
  for (size_t i = 0; i < factors.size(); ++i)
    offset[i + 1] = offset[i] + m.space(factors[i])->arity();
  // carrier: ⟦cod⟧ -> ⟦dom⟧. cod slot layout follows perm; dom slot j must be
  // filled from the cod position where factor j landed.
  std::vector<int> land(factors.size());  // factor -> its position in cod
  for (size_t i = 0; i < perm.size(); ++i) land[static_cast<size_t>(perm[i])] = static_cast<int>(i);
  std::vector<int> cod_offset(perm.size() + 1, 0);
  for (size_t i = 0; i < perm.size(); ++i)
    cod_offset[i + 1] = cod_offset[i] + m.space(cod_factors[i])->arity();

  std::vector<int> slot_perm;  // dom slot j takes cod slot slot_perm[j]
  for (size_t j = 0; j < factors.size(); ++j) {
    int at = land[j];
    int a = m.space(factors[j])->arity();
    for (int k = 0; k < a; ++k) slot_perm.push_back(cod_offset[static_cast<size_t>(at)] + k);
  }
  LinMap carrier = lin_permute(m.space(cod), slot_perm, m.rig());
  // lin_permute produced dom=⟦cod⟧ with permuted cod space; identify with ⟦dom⟧
  carrier.cod = m.space(dom);
  return Morphism{dom, cod, std::move(carrier)};
}

Morphism m_sym(const Model& m, const ObjectExpr& x, const ObjectExpr& y) {
  return m_perm(m, {x, y}, {1, 0});
}

EqVerdict morphism_equal(const Morphism& f, const Morphism& g, const EnumBudget& budget,
                         bool parallel) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw SpaceMismatch("equation boundaries differ: " + f.dom.str() + "->" + f.cod.str() +
                        " vs " + g.dom.str() + "->" + g.cod.str());
  return equal_on(f.carrier, g.carrier, budget, parallel);
}

Vec paper_apply(const Morphism& f, const BasisPtr& input, const EnumBudget& budget) {
  Vec out;
  const Rig& rig = *f.carrier.rig;
  for (const auto& c : f.carrier.dom->enumerate(budget)) {
    Rational coeff = f.carrier.apply(c).coeff(input);
    if (!rig.is_zero(coeff)) out.push(c, coeff, rig);
  }
  out.normalize(rig);
  return out;
}

Morphism Model::random_linear(const ObjectExpr& dom, const ObjectExpr& cod,
                              const EnumBudget& budget, uint64_t seed) const {
  // Deterministic portable generator (splitmix64).
  auto next = [state = seed]() mutable {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  SpacePtr ds = space(dom);
  SpacePtr cs = space(cod);
  auto dbasis = ds->enumerate(budget);
  auto cbasis = cs->enumerate(budget);
  std::vector<std::pair<BasisPtr, Vec>> table;
  const Rig& rg = rig();
  // the carrier maps ⟦cod⟧ -> ⟦dom⟧: a sparse random matrix
  for (const auto& c : cbasis) {
    Vec v;
    for (const auto& d : dbasis) {
      uint64_t r = next();
      if (r % 4 == 0) {  // ~25% fill
        unsigned long coeff = 1 + static_cast<unsigned long>((r >> 32) % 3);
        v.push(d, rg.from_natural(coeff), rg);
      }
    }
    v.normalize(rg);
    if (!v.is_zero()) table.emplace_back(c, std::move(v));
  }
  Morphism f{dom, cod, lin_table(cs, ds, rg, std::move(table))};
  return f;
}

}  // namespace calcat

#include "calcat/linmap.hpp"

#include <algorithm>
#include <map>

#include "calcat/errors.hpp"

#ifdef CALCAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace calcat {

LinMap lin_identity(SpacePtr s, const Rig& rig) {
  LinMap m;
  m.dom = s;
  m.cod = s;
  m.rig = &rig;
  m.grade_preserving = true;
  m.apply = [](const BasisPtr& b) { return Vec::basis(b); };
  return m;
}

LinMap lin_zero(SpacePtr dom, SpacePtr cod, const Rig& rig) {
  LinMap m;
  m.dom = std::move(dom);
  m.cod = std::move(cod);
  m.rig = &rig;
  m.grade_preserving = true;
  m.apply = [](const BasisPtr&) { return Vec::zero(); };
  return m;
}

Vec apply_vec(const LinMap& f, const Vec& v) {
  Vec out;
  for (const auto& [b, c] : v.terms()) out.push_vec(f.apply(b), c, *f.rig);
  out.normalize(*f.rig);
  return out;
}

LinMap lin_compose(const LinMap& f, const LinMap& g) {
  if (!f.cod->same(*g.dom))
    throw SpaceMismatch("compose: codomain " + f.cod->key() + " != domain " + g.dom->key());
  LinMap m;
  m.dom = f.dom;
  m.cod = g.cod;
  m.rig = f.rig;
  m.grade_preserving = f.grade_preserving && g.grade_preserving;
  m.apply = [f, g](const BasisPtr& b) { return apply_vec(g, f.apply(b)); };
  return m;
}

LinMap lin_tensor(const LinMap& f, const LinMap& g) {
  LinMap m;
  m.dom = Space::tensor({f.dom, g.dom});
  m.cod = Space::tensor({f.cod, g.cod});
  m.rig = f.rig;
  m.grade_preserving = f.grade_preserving && g.grade_preserving;
  int fa = f.dom->arity();
  int ga = g.dom->arity();
  int fc = f.cod->arity();
  LinMap fl = f, gl = g;
  const Rig* rig = f.rig;
  m.apply = [fl, gl, fa, ga, fc, rig](const BasisPtr& b) {
    auto slots = slots_of(b, fa + ga);
    std::vector<BasisPtr> ls(slots.begin(), slots.begin() + fa);
    std::vector<BasisPtr> rs(slots.begin() + fa, slots.end());
    Vec lv = fl.apply(from_slots(std::move(ls)));
    Vec rv = gl.apply(from_slots(std::move(rs)));
    Vec out;
    for (const auto& [lb, lc] : lv.terms()) {
      auto lslots = slots_of(lb, fc);
      for (const auto& [rb, rc] : rv.terms()) {
        auto slots2 = lslots;
        auto rslots = slots_of(rb, static_cast<int>(gl.cod->arity()));
        slots2.insert(slots2.end(), rslots.begin(), rslots.end());
        out.push(from_slots(std::move(slots2)), rig->mul(lc, rc), *rig);
      }
    }
    out.normalize(*rig);
    return out;
  };
  return m;
}

LinMap lin_add(const LinMap& f, const LinMap& g) {
  if (!f.dom->same(*g.dom) || !f.cod->same(*g.cod))
    throw SpaceMismatch("sum of maps with different boundaries: " + f.dom->key() + "->" +
                        f.cod->key() + " vs " + g.dom->key() + "->" + g.cod->key());
  LinMap m;
  m.dom = f.dom;
  m.cod = f.cod;
  m.rig = f.rig;
  m.grade_preserving = f.grade_preserving && g.grade_preserving;
  m.apply = [f, g](const BasisPtr& b) { return f.apply(b).plus(g.apply(b), *f.rig); };
  return m;
}

LinMap lin_scale(const Rational& r, const LinMap& f) {
  LinMap m = f;
  Rational rr = f.rig->canon(r);
  m.apply = [f, rr](const BasisPtr& b) { return f.apply(b).scaled(rr, *f.rig); };
  return m;
}

LinMap lin_permute(SpacePtr dom, std::vector<int> perm, const Rig& rig) {
  const auto& fs = dom->factors();
  std::vector<SpacePtr> cod_factors;
  if (dom->arity() == static_cast<int>(perm.size()) && dom->kind() == Space::Kind::Tensor) {
    for (int p : perm) cod_factors.push_back(fs[static_cast<size_t>(p)]);
  } else if (perm.size() <= 1) {
    cod_factors = {dom};
  } else {
    throw SpaceMismatch("permutation arity mismatch on " + dom->key());
  }
  LinMap m;
  m.dom = dom;
  m.cod = Space::tensor(cod_factors);
  m.rig = &rig;
  m.grade_preserving = true;
  int arity = dom->arity();
  m.apply = [perm, arity](const BasisPtr& b) {
    auto slots = slots_of(b, arity);
    std::vector<BasisPtr> out;
    out.reserve(slots.size());
    for (int p : perm) out.push_back(slots[static_cast<size_t>(p)]);
    return Vec::basis(from_slots(std::move(out)));
  };
  return m;
}

LinMap lin_table(SpacePtr dom, SpacePtr cod, const Rig& rig,
                 std::vector<std::pair<BasisPtr, Vec>> table) {
  std::sort(table.begin(), table.end(),
            [](const auto& a, const auto& b) { return basis_lt(a.first, b.first); });
  auto shared = std::make_shared<std::vector<std::pair<BasisPtr, Vec>>>(std::move(table));
  LinMap m;
  m.dom = std::move(dom);
  m.cod = std::move(cod);
  m.rig = &rig;
  m.grade_preserving = false;
  m.apply = [shared](const BasisPtr& b) {
    auto it = std::lower_bound(shared->begin(), shared->end(), b,
                               [](const auto& t, const BasisPtr& x) { return basis_lt(t.first, x); });
    if (it != shared->end() && basis_eq(it->first, b)) return it->second;
    return Vec::zero();
  };
  return m;
}

EqVerdict equal_on_serial(const LinMap& f, const LinMap& g, const EnumBudget& budget) {
  if (!f.dom->same(*g.dom) || !f.cod->same(*g.cod))
    throw SpaceMismatch("equal_on: boundary mismatch: " + f.dom->key() + "->" + f.cod->key() +
                        " vs " + g.dom->key() + "->" + g.cod->key());
  auto basis = f.dom->enumerate(budget);
  EqVerdict v;
  v.inputs_checked = static_cast<long>(basis.size());
  for (const auto& b : basis) {
    Vec lhs = f.apply(b);
    Vec rhs = g.apply(b);
    if (!lhs.eq(rhs, *f.rig)) {
      v.equal = false;
      v.witness = EqWitness{b, std::move(lhs), std::move(rhs)};
      return v;
    }
  }
  return v;
}

EqVerdict equal_on(const LinMap& f, const LinMap& g, const EnumBudget& budget, bool parallel) {
#ifdef CALCAT_HAVE_OPENMP
  if (parallel) {
    if (!f.dom->same(*g.dom) || !f.cod->same(*g.cod))
      throw SpaceMismatch("equal_on: boundary mismatch: " + f.dom->key() + "->" + f.cod->key() +
                          " vs " + g.dom->key() + "->" + g.cod->key());
    auto basis = f.dom->enumerate(budget);
    const long n = static_cast<long>(basis.size());
    long first_bad = n;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first_bad)
    for (long i = 0; i < n; ++i) {
      Vec lhs = f.apply(basis[static_cast<size_t>(i)]);
      Vec rhs = g.apply(basis[static_cast<size_t>(i)]);
      if (!lhs.eq(rhs, *f.rig) && i < first_bad) first_bad = i;
    }
    EqVerdict v;
    v.inputs_checked = n;
    if (first_bad < n) {
      const auto& b = basis[static_cast<size_t>(first_bad)];
      v.equal = false;
      v.witness = EqWitness{b, f.apply(b), g.apply(b)};
    }
    return v;
  }
#else
  (void)parallel;
#endif
  return equal_on_serial(f, g, budget);
}

InverseResult invert_blockwise(const LinMap& f, const EnumBudget& budget) {
  if (!f.rig->is_field()) throw NotField("blockwise inversion needs a field rig");
  if (!f.grade_preserving) throw NotGradePreserving("blockwise inversion needs a graded map");
  if (!f.dom->same(*f.cod)) throw SpaceMismatch("blockwise inversion needs an endomap");
  const Rig& rig = *f.rig;
  auto basis = f.dom->enumerate(budget);

  std::map<int, std::vector<BasisPtr>> blocks;
  for (const auto& b : basis) blocks[b->grade()].push_back(b);

  InverseResult res;
  std::vector<std::pair<BasisPtr, Vec>> table;
  for (auto& [grade, elems] : blocks) {
    const size_t n = elems.size();
    auto find_idx = [&](const BasisPtr& b) -> size_t {
      auto it = std::lower_bound(elems.begin(), elems.end(), b, basis_lt);
      if (it == elems.end() || !basis_eq(*it, b))
        throw NotGradePreserving("output escapes the grade block at grade " +
                                 std::to_string(grade));
      return static_cast<size_t>(it - elems.begin());
    };
    // columns of the block matrix: A[i][j] = coeff of elems[i] in f(elems[j])
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
      Vec out = f.apply(elems[j]);
      for (const auto& [ob, oc] : out.terms()) {
        if (ob->grade() != grade)
          throw NotGradePreserving("output grade " + std::to_string(ob->grade()) +
                                   " from input grade " + std::to_string(grade));
        a[find_idx(ob)][j] = oc;
      }
    }
    for (size_t i = 0; i < n; ++i) a[i][n + i] = Rational(1);
    // Gauss-Jordan over the field
    size_t row = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < n && row < n; ++col) {
      size_t piv = row;
      while (piv < n && rig.is_zero(a[piv][col])) ++piv;
      if (piv == n) continue;
      std::swap(a[piv], a[row]);
      Rational inv = *rig.invert(a[row][col]);
      for (size_t k = col; k < 2 * n; ++k) a[row][k] = rig.mul(a[row][k], inv);
      for (size_t r = 0; r < n; ++r) {
        if (r == row || rig.is_zero(a[r][col])) continue;
        Rational factor = a[r][col];
        for (size_t k = col; k < 2 * n; ++k)
          a[r][k] = rig.add(a[r][k], rig.mul(rig.canon(Rational(-1)), rig.mul(factor, a[row][k])));
      }
      pivot_col.push_back(col);
      ++row;
    }
    if (row < n) {
      // singular block: produce a kernel combination from a free column
      std::vector<bool> is_pivot(n, false);
      for (size_t c : pivot_col) is_pivot[c] = true;
      size_t free_col = 0;
      while (free_col < n && is_pivot[free_col]) ++free_col;
      Vec kernel;
      kernel.push(elems[free_col], Rational(1), rig);
      for (size_t r = 0; r < pivot_col.size(); ++r) {
        Rational c = a[r][free_col];
        if (!rig.is_zero(c)) kernel.push(elems[pivot_col[r]], rig.mul(Rational(-1), c), rig);
      }
      kernel.normalize(rig);
      res.invertible = false;
      res.failed_grade = grade;
      res.kernel_vec = kernel;
      res.kernel_witness = kernel.is_zero() ? elems[free_col] : kernel.terms()[0].first;
      return res;
    }
    for (size_t j = 0; j < n; ++j) {
      Vec col;
      for (size_t i = 0; i < n; ++i) {
        if (!rig.is_zero(a[i][n + j])) col.push(elems[i], a[i][n + j], rig);
      }
      col.normalize(rig);
      table.emplace_back(elems[j], std::move(col));
    }
  }
  res.invertible = true;
  res.inverse = lin_table(f.dom, f.cod, rig, std::move(table));
  res.inverse.grade_preserving = true;
  return res;
}

}  // namespace calcat

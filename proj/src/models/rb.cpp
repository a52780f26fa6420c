#include "calcat/models/rb.hpp"

#include "calcat/errors.hpp"

namespace calcat {

namespace {

const std::vector<std::string> kVarPool = {"x", "y", "z"};

// All interleavings of two words, preserving internal order; coefficients
// count coinciding interleavings (shuffle(a,a) = 2·aa).
void shuffle_rec(const std::vector<BasisPtr>& u, size_t i, const std::vector<BasisPtr>& v,
                 size_t j, std::vector<BasisPtr>& cur, Vec& out, const Rig& rig) {
  if (i == u.size() && j == v.size()) {
    out.push(Basis::word(cur), rig.one(), rig);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, cur, out, rig);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, cur, out, rig);
    cur.pop_back();
  }
}

}  // namespace

Vec rb_shuffle(const BasisPtr& w1, const BasisPtr& w2, const Rig& rig) {
  Vec out;
  std::vector<BasisPtr> cur;
  shuffle_rec(w1->kids(), 0, w2->kids(), 0, cur, out, rig);
  out.normalize(rig);
  return out;
}

Vec rb_product(const BasisPtr& a, const BasisPtr& b, const Rig& rig) {
  const BasisPtr& w1 = a->kids()[0];
  const BasisPtr& m1 = a->kids()[1];
  const BasisPtr& w2 = b->kids()[0];
  const BasisPtr& m2 = b->kids()[1];
  Vec words = rb_shuffle(w1, w2, rig);
  BasisPtr m = mset_union(m1, m2);
  Vec out;
  for (const auto& [w, c] : words.terms()) out.push(Basis::tuple({w, m}), c, rig);
  out.normalize(rig);
  return out;
}

BasisPtr rb_P(const BasisPtr& a) {
  std::vector<BasisPtr> letters = a->kids()[0]->kids();
  letters.push_back(a->kids()[1]);
  return Basis::tuple({Basis::word(std::move(letters)), Basis::mset({})});
}

RBModel::RBModel(int vars) {
  for (int i = 0; i < vars; ++i) {
    std::string name = i < static_cast<int>(kVarPool.size()) ? kVarPool[static_cast<size_t>(i)]
                                                             : "x" + std::to_string(i + 1);
    atoms_.emplace_back(i, name);
  }
  caps_.has_delta = false;
  caps_.has_monoidal = false;
  caps_.has_differential = true;
  caps_.has_integral = true;
  caps_.has_antiderivatives = false;
}

SpacePtr RBModel::space(const ObjectExpr& obj) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = space_cache_.find(obj.str());
    if (it != space_cache_.end()) return it->second;
  }
  SpacePtr s;
  switch (obj.kind()) {
    case ObjectExpr::Kind::Unit:
      s = Space::unit();
      break;
    case ObjectExpr::Kind::Base:
      if (obj.base_name() != "A")
        throw MissingCapability("rb model has only the base object A");
      s = Space::atoms(atoms_, "A");
      break;
    case ObjectExpr::Kind::Bang: {
      if (obj.inner().kind() != ObjectExpr::Kind::Base)
        throw MissingCapability("rb model interprets ! at the base object only");
      SpacePtr monos = Space::mset_of(space(obj.inner()), Space::MSetStyle::Monomial);
      s = Space::rb_pair(monos);
      break;
    }
    case ObjectExpr::Kind::Tensor: {
      std::vector<SpacePtr> fs;
      for (const auto& f : obj.factors()) fs.push_back(space(f));
      s = Space::tensor(std::move(fs));
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  space_cache_.emplace(obj.str(), s);
  return s;
}

Morphism RBModel::generator(const std::string& g, const std::vector<ObjectExpr>& objs) const {
  ObjectExpr x = objs.empty() ? ObjectExpr::base("A") : objs[0];
  if (x != ObjectExpr::base("A"))
    throw MissingCapability("rb model binds generators at the base object only");
  const Rig& rg = rig();
  const Rig* rig_p = &rg;
  ObjectExpr bx = ObjectExpr::bang(x);

  auto make = [&](const ObjectExpr& dom, const ObjectExpr& cod, bool graded,
                  std::function<Vec(const BasisPtr&)> apply) {
    LinMap lm;
    lm.dom = space(cod);
    lm.cod = space(dom);
    lm.rig = rig_p;
    lm.grade_preserving = graded;
    lm.apply = std::move(apply);
    return Morphism{dom, cod, std::move(lm)};
  };

  if (g == "Delta") {
    // carrier is the Rota-Baxter algebra product
    return make(bx, ObjectExpr::tensor({bx, bx}), true, [rig_p](const BasisPtr& b) {
      auto slots = slots_of(b, 2);
      return rb_product(slots[0], slots[1], *rig_p);
    });
  }
  if (g == "e") {
    return make(bx, ObjectExpr::unit(), true, [](const BasisPtr&) {
      return Vec::basis(Basis::tuple({Basis::word({}), Basis::mset({})}));
    });
  }
  if (g == "eps") {
    return make(bx, x, true, [](const BasisPtr& b) {
      return Vec::basis(Basis::tuple({Basis::word({}), Basis::mset({b})}));
    });
  }
  if (g == "d") {
    return make(ObjectExpr::tensor({bx, x}), bx, true, [rig_p](const BasisPtr& b) {
      const BasisPtr& w = b->kids()[0];
      const BasisPtr& m = b->kids()[1];
      Vec out;
      const auto& kids = m->kids();
      size_t i = 0;
      while (i < kids.size()) {
        size_t j = i;
        while (j < kids.size() && basis_eq(kids[i], kids[j])) ++j;
        out.push(Basis::tuple({Basis::tuple({w, mset_erase_at(m, i)}), kids[i]}),
                 rig_p->from_natural(j - i), *rig_p);
        i = j;
      }
      out.normalize(*rig_p);
      return out;
    });
  }
  if (g == "dcirc" || g == "s") {
    bool integral = (g == "s");
    return make(bx, ObjectExpr::tensor({bx, x}), true, [rig_p, integral](const BasisPtr& b) {
      auto slots = slots_of(b, 2);
      const BasisPtr& pair = slots[0];
      const BasisPtr& v = slots[1];
      const BasisPtr& w = pair->kids()[0];
      const BasisPtr& m = pair->kids()[1];
      BasisPtr grown = Basis::tuple({w, mset_insert(m, v)});
      if (!integral) return Vec::basis(grown);
      Rational c(1);
      c /= Rational(static_cast<long>(m->size()) + 1);
      return Vec::single(grown, c, *rig_p);
    });
  }
  if (g == "delta")
    throw MissingCapability("rb model has no δ (composite-monad comultiplication not implemented)");
  throw MissingCapability("rb model does not bind generator " + g);
}

Morphism RBModel::bang_of(const Morphism& f) const {
  ObjectExpr a = ObjectExpr::base("A");
  if (f.dom != a || f.cod != a)
    throw MissingCapability("rb model supports !(f) for base endomaps only");
  const Rig* rig_p = &rig();
  LinMap inner = f.carrier;
  ObjectExpr bx = ObjectExpr::bang(a);
  LinMap lm;
  lm.dom = space(bx);
  lm.cod = space(bx);
  lm.rig = rig_p;
  lm.grade_preserving = inner.grade_preserving;

  // Sym(f) on a monomial: product of letter images.
  auto sym_f = [inner, rig_p](const BasisPtr& mono) {
    Vec acc = Vec::basis(Basis::mset({}));
    for (const auto& v : mono->kids()) {
      Vec img = inner.apply(v);
      if (img.is_zero()) return Vec::zero();
      Vec next;
      for (const auto& [m, c] : acc.terms())
        for (const auto& [l, x] : img.terms()) next.push(mset_insert(m, l), rig_p->mul(c, x), *rig_p);
      next.normalize(*rig_p);
      acc = std::move(next);
    }
    return acc;
  };

  lm.apply = [sym_f, rig_p](const BasisPtr& b) {
    const BasisPtr& w = b->kids()[0];
    const BasisPtr& m = b->kids()[1];
    // Sh(Sym f) on the word, letterwise, then Sym f on the monomial slot
    Vec words = Vec::basis(Basis::word({}));
    for (const auto& letter : w->kids()) {
      Vec img = sym_f(letter);
      if (img.is_zero()) return Vec::zero();
      Vec next;
      for (const auto& [wb, c] : words.terms()) {
        for (const auto& [l, x] : img.terms()) {
          std::vector<BasisPtr> ls = wb->kids();
          ls.push_back(l);
          next.push(Basis::word(std::move(ls)), rig_p->mul(c, x), *rig_p);
        }
      }
      next.normalize(*rig_p);
      words = std::move(next);
    }
    Vec mimg = sym_f(m);
    Vec out;
    for (const auto& [wb, c] : words.terms())
      for (const auto& [mb, x] : mimg.terms())
        out.push(Basis::tuple({wb, mb}), rig_p->mul(c, x), *rig_p);
    out.normalize(*rig_p);
    return out;
  };
  return Morphism{bx, bx, std::move(lm)};
}

std::optional<Morphism> RBModel::jinv_n(const ObjectExpr& obj, int n) const {
  if (obj != ObjectExpr::base("A")) return std::nullopt;
  ObjectExpr bx = ObjectExpr::bang(obj);
  const Rig* rig_p = &rig();
  LinMap lm;
  lm.dom = space(bx);
  lm.cod = space(bx);
  lm.rig = rig_p;
  lm.grade_preserving = true;
  lm.apply = [rig_p, n](const BasisPtr& b) {
    // J_n scales a basis pair by (Sym-component degree) + n + 1
    const BasisPtr& m = b->kids()[1];
    Rational c(1);
    c /= Rational(static_cast<long>(m->size()) + n + 1);
    return Vec::single(b, c, *rig_p);
  };
  return Morphism{bx, bx, std::move(lm)};
}

}  // namespace calcat

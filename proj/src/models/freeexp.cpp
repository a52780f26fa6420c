#include "calcat/models/freeexp.hpp"

#include <algorithm>

#include "calcat/errors.hpp"

namespace calcat {

namespace {

std::vector<std::pair<int, std::string>> named_atoms(int first_id, int count,
                                                     const std::vector<std::string>& pool,
                                                     const std::string& stem) {
  std::vector<std::pair<int, std::string>> out;
  for (int i = 0; i < count; ++i) {
    std::string name =
        i < static_cast<int>(pool.size()) ? pool[static_cast<size_t>(i)] : stem + std::to_string(i + 1);
    out.emplace_back(first_id + i, name);
  }
  return out;
}

}  // namespace

FreeExpConfig sym_q_config(int vars) {
  FreeExpConfig c;
  c.name = "sym-q";
  c.rig = &rig_rational();
  c.a_vars = vars;
  c.monomial_print = true;
  c.bind_s = true;
  c.bind_inverses = true;
  c.caps = Capabilities{true, true, true, true, true};
  return c;
}

FreeExpConfig sym_f2_config(int vars) {
  FreeExpConfig c;
  c.name = "sym-f2";
  c.rig = &rig_gf2();
  c.a_vars = vars;
  c.monomial_print = true;
  c.bind_s = false;
  c.bind_inverses = false;
  c.caps = Capabilities{true, true, true, false, false};
  return c;
}

FreeExpConfig rel_config(int elements) {
  FreeExpConfig c;
  c.name = "rel";
  c.rig = &rig_boolean();
  c.a_vars = elements;
  c.monomial_print = false;
  c.bind_s = false;
  c.s_is_dcirc = true;
  c.bind_inverses = true;
  c.caps = Capabilities{true, true, true, true, true};
  return c;
}

FreeExpModel::FreeExpModel(FreeExpConfig cfg) : cfg_(std::move(cfg)) {
  auto a = named_atoms(0, cfg_.a_vars, {"x", "y", "z"}, "x");
  auto b = named_atoms(100, cfg_.b_vars, {"u", "v"}, "u");
  bases_["A"] = a;
  bases_["B"] = b;
  auto ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  bases_["AxB"] = ab;
  bases_["O"] = {};
}

SpacePtr FreeExpModel::space(const ObjectExpr& obj) const {
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
    case ObjectExpr::Kind::Base: {
      auto it = bases_.find(obj.base_name());
      if (it == bases_.end())
        throw MissingCapability("model " + cfg_.name + " has no base object " + obj.base_name());
      s = Space::atoms(it->second, obj.base_name());
      break;
    }
    case ObjectExpr::Kind::Bang: {
      SpacePtr letters = space(obj.inner());
      Space::MSetStyle style;
      if (letters->kind() == Space::Kind::Atoms)
        style = cfg_.monomial_print ? Space::MSetStyle::Monomial : Space::MSetStyle::Bag;
      else if (letters->kind() == Space::Kind::Unit)
        style = Space::MSetStyle::Monomial;
      else
        style = Space::MSetStyle::Braces;
      s = Space::mset_of(letters, style);
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

namespace {

// Iterates distinct letters of a sorted multiset with multiplicities.
template <typename F>
void for_distinct(const BasisPtr& mset, F&& fn) {
  const auto& kids = mset->kids();
  size_t i = 0;
  while (i < kids.size()) {
    size_t j = i;
    while (j < kids.size() && basis_eq(kids[i], kids[j])) ++j;
    fn(i, j - i);
    i = j;
  }
}

}  // namespace

Morphism FreeExpModel::gen_at(const std::string& g, const ObjectExpr& x,
                              const ObjectExpr& y) const {
  const Rig& rg = rig();
  ObjectExpr bx = ObjectExpr::bang(x);
  SpacePtr sx = space(x);
  SpacePtr sbx = space(bx);
  int xar = sx->arity();

  auto make = [&](const ObjectExpr& dom, const ObjectExpr& cod, bool graded,
                  std::function<Vec(const BasisPtr&)> apply) {
    LinMap lm;
    lm.dom = space(cod);
    lm.cod = space(dom);
    lm.rig = &rg;
    lm.grade_preserving = graded;
    lm.apply = std::move(apply);
    return Morphism{dom, cod, std::move(lm)};
  };

  if (g == "Delta") {
    return make(bx, ObjectExpr::tensor({bx, bx}), true, [](const BasisPtr& b) {
      auto slots = slots_of(b, 2);
      return Vec::basis(mset_union(slots[0], slots[1]));
    });
  }
  if (g == "e") {
    return make(bx, ObjectExpr::unit(), true,
                [](const BasisPtr&) { return Vec::basis(Basis::mset({})); });
  }
  if (g == "delta") {
    return make(bx, ObjectExpr::bang(bx), true, [](const BasisPtr& b) {
      BasisPtr acc = Basis::mset({});
      for (const auto& inner : b->kids()) acc = mset_union(acc, inner);
      return Vec::basis(acc);
    });
  }
  if (g == "eps") {
    return make(bx, x, true, [](const BasisPtr& b) { return Vec::basis(Basis::mset({b})); });
  }
  if (g == "d") {
    const Rig* rig_p = &rg;
    return make(ObjectExpr::tensor({bx, x}), bx, true, [rig_p, xar](const BasisPtr& b) {
      Vec out;
      for_distinct(b, [&](size_t i, size_t count) {
        BasisPtr rest = mset_erase_at(b, i);
        auto slots = slots_of(b->kids()[i], xar);
        std::vector<BasisPtr> all;
        all.push_back(rest);
        all.insert(all.end(), slots.begin(), slots.end());
        out.push(from_slots(std::move(all)), rig_p->from_natural(count), *rig_p);
      });
      out.normalize(*rig_p);
      return out;
    });
  }
  if (g == "dcirc" || (g == "s" && cfg_.s_is_dcirc)) {
    ObjectExpr cod = ObjectExpr::tensor({bx, x});
    return make(bx, cod, true, [xar](const BasisPtr& b) {
      auto slots = slots_of(b, 1 + xar);
      BasisPtr mset = slots[0];
      std::vector<BasisPtr> xs(slots.begin() + 1, slots.end());
      return Vec::basis(mset_insert(mset, from_slots(std::move(xs))));
    });
  }
  if (g == "s") {
    if (!cfg_.bind_s)
      throw MissingCapability("model " + cfg_.name + " has no integral transformation");
    ObjectExpr cod = ObjectExpr::tensor({bx, x});
    const Rig* rig_p = &rg;
    return make(bx, cod, true, [xar, rig_p](const BasisPtr& b) {
      auto slots = slots_of(b, 1 + xar);
      BasisPtr mset = slots[0];
      std::vector<BasisPtr> xs(slots.begin() + 1, slots.end());
      Rational coeff(1);
      coeff /= Rational(static_cast<long>(mset->size()) + 1);
      return Vec::single(mset_insert(mset, from_slots(std::move(xs))), coeff, *rig_p);
    });
  }
  if (g == "m_tensor") {
    if (!cfg_.caps.has_monoidal)
      throw MissingCapability("model " + cfg_.name + " is not monoidal");
    ObjectExpr by = ObjectExpr::bang(y);
    ObjectExpr dom = ObjectExpr::tensor({bx, by});
    ObjectExpr cod = ObjectExpr::bang(ObjectExpr::tensor({x, y}));
    int yar = space(y)->arity();
    return make(dom, cod, true, [xar, yar](const BasisPtr& b) {
      std::vector<BasisPtr> xs, ys;
      for (const auto& letter : b->kids()) {
        auto slots = slots_of(letter, xar + yar);
        std::vector<BasisPtr> xpart(slots.begin(), slots.begin() + xar);
        std::vector<BasisPtr> ypart(slots.begin() + xar, slots.end());
        xs.push_back(from_slots(std::move(xpart)));
        ys.push_back(from_slots(std::move(ypart)));
      }
      return Vec::basis(Basis::tuple({Basis::mset(std::move(xs)), Basis::mset(std::move(ys))}));
    });
  }
  if (g == "m_K") {
    if (!cfg_.caps.has_monoidal)
      throw MissingCapability("model " + cfg_.name + " is not monoidal");
    return make(ObjectExpr::unit(), ObjectExpr::bang(ObjectExpr::unit()), true,
                [](const BasisPtr&) { return Vec::basis(unit_basis()); });
  }
  throw MissingCapability("model " + cfg_.name + " does not bind generator " + g);
}

Morphism FreeExpModel::generator(const std::string& name,
                                 const std::vector<ObjectExpr>& objs) const {
  ObjectExpr x = objs.empty() ? ObjectExpr::base("A") : objs[0];
  ObjectExpr y = objs.size() > 1 ? objs[1] : ObjectExpr::base("B");
  if (name == "m_K") return gen_at(name, ObjectExpr::unit(), ObjectExpr::unit());
  return gen_at(name, x, y);
}

Morphism FreeExpModel::bang_of(const Morphism& f) const {
  const Rig& rg = rig();
  ObjectExpr dom = ObjectExpr::bang(f.dom);
  ObjectExpr cod = ObjectExpr::bang(f.cod);
  LinMap inner = f.carrier;
  const Rig* rig_p = &rg;
  LinMap lm;
  lm.dom = space(cod);
  lm.cod = space(dom);
  lm.rig = rig_p;
  lm.grade_preserving = inner.grade_preserving;
  lm.apply = [inner, rig_p](const BasisPtr& b) {
    // multiplicative extension: the image of a multiset is the product of the
    // letter images, expanded multilinearly
    Vec acc = Vec::basis(Basis::mset({}));
    for (const auto& letter : b->kids()) {
      Vec img = inner.apply(letter);
      if (img.is_zero()) return Vec::zero();
      Vec next;
      for (const auto& [m, c] : acc.terms()) {
        for (const auto& [l, a] : img.terms()) {
          next.push(mset_insert(m, l), rig_p->mul(c, a), *rig_p);
        }
      }
      next.normalize(*rig_p);
      acc = std::move(next);
    }
    return acc;
  };
  return Morphism{dom, cod, std::move(lm)};
}

std::optional<Morphism> FreeExpModel::kinv(const ObjectExpr& obj) const {
  if (!cfg_.bind_inverses) return std::nullopt;
  ObjectExpr bx = ObjectExpr::bang(obj);
  SpacePtr s = space(bx);
  const Rig* rig_p = &rig();
  bool identity = cfg_.rig->add_idempotent();
  LinMap lm;
  lm.dom = s;
  lm.cod = s;
  lm.rig = rig_p;
  lm.grade_preserving = true;
  lm.apply = [rig_p, identity](const BasisPtr& b) {
    if (identity || b->size() == 0) return Vec::basis(b);
    return Vec::single(b, Rational(1) / Rational(static_cast<long>(b->size())), *rig_p);
  };
  return Morphism{bx, bx, std::move(lm)};
}

std::optional<Morphism> FreeExpModel::jinv_n(const ObjectExpr& obj, int n) const {
  if (!cfg_.bind_inverses) return std::nullopt;
  ObjectExpr bx = ObjectExpr::bang(obj);
  SpacePtr s = space(bx);
  const Rig* rig_p = &rig();
  bool identity = cfg_.rig->add_idempotent();
  LinMap lm;
  lm.dom = s;
  lm.cod = s;
  lm.rig = rig_p;
  lm.grade_preserving = true;
  lm.apply = [rig_p, identity, n](const BasisPtr& b) {
    if (identity) return Vec::basis(b);
    Rational c(1);
    c /= Rational(static_cast<long>(b->size()) + n + 1);
    return Vec::single(b, c, *rig_p);
  };
  return Morphism{bx, bx, std::move(lm)};
}

Morphism FreeExpModel::seely_chi() const {
  const Rig* rig_p = &rig();
  ObjectExpr p = ObjectExpr::base("AxB");
  ObjectExpr dom = ObjectExpr::bang(p);
  ObjectExpr cod =
      ObjectExpr::tensor({ObjectExpr::bang(ObjectExpr::base("A")), ObjectExpr::bang(ObjectExpr::base("B"))});
  LinMap lm;
  lm.dom = space(cod);
  lm.cod = space(dom);
  lm.rig = rig_p;
  lm.grade_preserving = true;
  lm.apply = [](const BasisPtr& b) {
    auto slots = slots_of(b, 2);
    return Vec::basis(mset_union(slots[0], slots[1]));
  };
  return Morphism{dom, cod, std::move(lm)};
}

Morphism FreeExpModel::seely_chi_inv() const {
  const Rig* rig_p = &rig();
  ObjectExpr p = ObjectExpr::base("AxB");
  ObjectExpr cod = ObjectExpr::bang(p);
  ObjectExpr dom =
      ObjectExpr::tensor({ObjectExpr::bang(ObjectExpr::base("A")), ObjectExpr::bang(ObjectExpr::base("B"))});
  int a_count = cfg_.a_vars;
  LinMap lm;
  lm.dom = space(cod);
  lm.cod = space(dom);
  lm.rig = rig_p;
  lm.grade_preserving = true;
  lm.apply = [a_count](const BasisPtr& b) {
    std::vector<BasisPtr> as, bs;
    for (const auto& letter : b->kids()) {
      if (letter->atom_id() < a_count)
        as.push_back(letter);
      else
        bs.push_back(letter);
    }
    return Vec::basis(
        Basis::tuple({Basis::mset(std::move(as)), Basis::mset(std::move(bs))}));
  };
  return Morphism{dom, cod, std::move(lm)};
}

Morphism FreeExpModel::seely_chi0() const {
  const Rig* rig_p = &rig();
  ObjectExpr dom = ObjectExpr::bang(ObjectExpr::base("O"));
  LinMap lm;
  lm.dom = space(ObjectExpr::unit());
  lm.cod = space(dom);
  lm.rig = rig_p;
  lm.grade_preserving = true;
  lm.apply = [](const BasisPtr&) { return Vec::basis(Basis::mset({})); };
  return Morphism{dom, ObjectExpr::unit(), std::move(lm)};
}

Morphism FreeExpModel::seely_chi0_inv() const {
  const Rig* rig_p = &rig();
  ObjectExpr cod = ObjectExpr::bang(ObjectExpr::base("O"));
  LinMap lm;
  lm.dom = space(cod);
  lm.cod = space(ObjectExpr::unit());
  lm.rig = rig_p;
  lm.grade_preserving = true;
  lm.apply = [](const BasisPtr&) { return Vec::basis(unit_basis()); };
  return Morphism{ObjectExpr::unit(), cod, std::move(lm)};
}

}  // namespace calcat

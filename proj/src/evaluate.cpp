#include "calcat/evaluate.hpp"

#include <functional>

#include "calcat/errors.hpp"

namespace calcat {

namespace {

ObjectExpr default_base() { return ObjectExpr::base("A"); }

ObjectExpr obj_arg(const Term& t, size_t i) {
  if (i < t.objs.size()) return t.objs[i];
  return default_base();
}

int nat_arg(const Term& t, size_t i, const char* what) {
  if (i >= t.nats.size()) throw TypeErrorEx(t.gen, std::string(what) + " argument", "none");
  return t.nats[i];
}

ObjectExpr bang(const ObjectExpr& x) { return ObjectExpr::bang(x); }
ObjectExpr tens(std::vector<ObjectExpr> xs) { return ObjectExpr::tensor(std::move(xs)); }

ObjectExpr pow_tensor(const ObjectExpr& x, int n) {
  std::vector<ObjectExpr> fs;
  for (int i = 0; i < n; ++i) fs.push_back(x);
  return ObjectExpr::tensor(std::move(fs));
}

struct GenType {
  ObjectExpr dom, cod;
};

// Type schema of a generator instance (object args already defaulted).
GenType gen_type(const Term& t) {
  const std::string& g = t.gen;
  if (g == "Delta") {
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), tens({bang(x), bang(x)})};
  }
  if (g == "e") {
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), ObjectExpr::unit()};
  }
  if (g == "delta") {
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), bang(bang(x))};
  }
  if (g == "eps") {
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), x};
  }
  if (g == "d") {
    ObjectExpr x = obj_arg(t, 0);
    return {tens({bang(x), x}), bang(x)};
  }
  if (g == "dcirc" || g == "s") {
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), tens({bang(x), x})};
  }
  if (g == "m_tensor") {
    ObjectExpr x = obj_arg(t, 0);
    ObjectExpr y = t.objs.size() > 1 ? t.objs[1] : ObjectExpr::base("B");
    return {tens({bang(x), bang(y)}), bang(tens({x, y}))};
  }
  if (g == "m_K") {
    return {ObjectExpr::unit(), bang(ObjectExpr::unit())};
  }
  if (g == "L" || g == "K" || g == "J" || g == "Kinv" || g == "Jinv") {
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), bang(x)};
  }
  if (g == "Ln" || g == "Jn" || g == "Jinv_n" || g == "n_inv" || g == "n_map") {
    nat_arg(t, 0, "natural");
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), bang(x)};
  }
  if (g == "W") {
    ObjectExpr x = obj_arg(t, 0);
    return {tens({bang(x), x}), tens({bang(x), x})};
  }
  if (g == "Delta_n") {
    int n = nat_arg(t, 0, "natural");
    ObjectExpr x = obj_arg(t, 0);
    return {bang(x), pow_tensor(bang(x), n)};
  }
  if (g == "omega") {
    int k = nat_arg(t, 0, "natural k");
    int n = nat_arg(t, 1, "natural n");
    if (k < 0 || n < 1 || k > n) throw TypeErrorEx(t.gen, "0 <= k <= n, n >= 1", "k=" +
                                                   std::to_string(k) + ", n=" + std::to_string(n));
    ObjectExpr x = obj_arg(t, 0);
    return {pow_tensor(x, n + 1), pow_tensor(x, n + 1)};
  }
  throw TypeErrorEx(g, "a known generator", "unknown name");
}

std::pair<ObjectExpr, ObjectExpr> check(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Id:
      return {t->objs[0], t->objs[0]};
    case Term::Kind::Sym:
      return {tens({t->objs[0], t->objs[1]}), tens({t->objs[1], t->objs[0]})};
    case Term::Kind::Zero:
      return {t->objs[0], t->objs[1]};
    case Term::Kind::Gen: {
      GenType g = gen_type(*t);
      return {g.dom, g.cod};
    }
    case Term::Kind::Scale:
      return check(t->a);
    case Term::Kind::Bang: {
      auto [d, c] = check(t->a);
      return {bang(d), bang(c)};
    }
    case Term::Kind::Seq: {
      auto [d1, c1] = check(t->a);
      auto [d2, c2] = check(t->b);
      if (c1 != d2) throw TypeErrorEx(print_term(t), c1.str(), d2.str());
      return {d1, c2};
    }
    case Term::Kind::Par: {
      auto [d1, c1] = check(t->a);
      auto [d2, c2] = check(t->b);
      return {tens({d1, d2}), tens({c1, c2})};
    }
    case Term::Kind::Sum: {
      auto [d1, c1] = check(t->a);
      auto [d2, c2] = check(t->b);
      if (d1 != d2 || c1 != c2)
        throw TypeErrorEx(print_term(t), d1.str() + "->" + c1.str(), d2.str() + "->" + c2.str());
      return {d1, c1};
    }
  }
  throw TypeErrorEx(print_term(t), "a term", "unknown term kind");
}

}  // namespace

std::pair<ObjectExpr, ObjectExpr> typecheck(const TermPtr& t) { return check(t); }

Morphism evaluate(const TermPtr& t, const Model& model) {
  check(t);  // soundness gate: boundary mismatches surface as TypeErrorEx
  std::function<Morphism(const TermPtr&)> ev = [&](const TermPtr& u) -> Morphism {
    switch (u->kind) {
      case Term::Kind::Id:
        return m_id(model, u->objs[0]);
      case Term::Kind::Sym:
        return m_sym(model, u->objs[0], u->objs[1]);
      case Term::Kind::Zero:
        return m_zero(model, u->objs[0], u->objs[1]);
      case Term::Kind::Seq:
        return m_seq(ev(u->a), ev(u->b));
      case Term::Kind::Par:
        return m_par(model, ev(u->a), ev(u->b));
      case Term::Kind::Sum:
        return m_add(ev(u->a), ev(u->b));
      case Term::Kind::Scale:
        return m_scale(model, u->scale, ev(u->a));
      case Term::Kind::Bang:
        return model.bang_of(ev(u->a));
      case Term::Kind::Gen: {
        const std::string& g = u->gen;
        if (g == "L") return derived_L(model, obj_arg(*u, 0));
        if (g == "K") return derived_K(model, obj_arg(*u, 0));
        if (g == "J") return derived_J(model, obj_arg(*u, 0));
        if (g == "Ln") return derived_Ln(model, u->nats[0], obj_arg(*u, 0));
        if (g == "Jn") return derived_Jn(model, u->nats[0], obj_arg(*u, 0));
        if (g == "W") return derived_W(model, obj_arg(*u, 0));
        if (g == "Delta_n") return derived_Delta_n(model, u->nats[0], obj_arg(*u, 0));
        if (g == "omega") return derived_omega(model, u->nats[0], u->nats[1], obj_arg(*u, 0));
        if (g == "n_inv") return derived_n_inv(model, u->nats[0], obj_arg(*u, 0));
        if (g == "n_map") {
          Morphism one = m_id(model, ObjectExpr::bang(obj_arg(*u, 0)));
          return m_scale(model, Rational(u->nats[0]), one);
        }
        if (g == "Kinv") {
          auto k = model.kinv(obj_arg(*u, 0));
          if (!k) throw MissingCapability("model " + model.name() + " has no K inverse");
          return *k;
        }
        if (g == "Jinv") {
          auto j = model.jinv_n(obj_arg(*u, 0), 0);
          if (!j) throw MissingCapability("model " + model.name() + " has no J inverse");
          return *j;
        }
        if (g == "Jinv_n") {
          auto j = model.jinv_n(obj_arg(*u, 0), u->nats[0]);
          if (!j) throw MissingCapability("model " + model.name() + " has no J_n inverse");
          return *j;
        }
        return model.generator(g, u->objs.empty()
                                      ? std::vector<ObjectExpr>{default_base()}
                                      : u->objs);
      }
    }
    throw TypeErrorEx(print_term(u), "a term", "unknown term kind");
  };
  return ev(t);
}

Morphism evaluate_text(const std::string& term_text, const Model& model) {
  return evaluate(parse_term(term_text), model);
}

namespace {
Morphism gen(const Model& m, const std::string& name, const ObjectExpr& x) {
  return m.generator(name, {x});
}
}  // namespace

Morphism derived_L(const Model& m, const ObjectExpr& x) {
  return m_seq(gen(m, "dcirc", x), gen(m, "d", x));
}

Morphism derived_K(const Model& m, const ObjectExpr& x) {
  Morphism bang0 = m.bang_of(m_zero(m, x, x));
  return m_add(derived_L(m, x), bang0);
}

Morphism derived_J(const Model& m, const ObjectExpr& x) {
  return m_add(derived_L(m, x), m_id(m, ObjectExpr::bang(x)));
}

Morphism derived_Ln(const Model& m, int n, const ObjectExpr& x) {
  Morphism L = derived_L(m, x);
  if (n == 0) return L;
  Morphism nid = m_scale(m, Rational(n), m_id(m, ObjectExpr::bang(x)));
  return m_add(L, nid);
}

Morphism derived_Jn(const Model& m, int n, const ObjectExpr& x) { return derived_Ln(m, n + 1, x); }

Morphism derived_W(const Model& m, const ObjectExpr& x) {
  ObjectExpr bx = ObjectExpr::bang(x);
  Morphism left = m_par(m, gen(m, "dcirc", x), m_id(m, x));
  Morphism mid = m_par(m, m_id(m, bx), m_sym(m, x, x));
  Morphism right = m_par(m, gen(m, "d", x), m_id(m, x));
  return m_seq(m_seq(left, mid), right);
}

Morphism derived_Delta_n(const Model& m, int n, const ObjectExpr& x) {
  ObjectExpr bx = ObjectExpr::bang(x);
  if (n == 0) return gen(m, "e", x);
  if (n == 1) return m_id(m, bx);
  Morphism acc = gen(m, "Delta", x);
  for (int i = 2; i < n; ++i) {
    Morphism step = gen(m, "Delta", x);
    for (int j = 1; j < i; ++j) step = m_par(m, step, m_id(m, bx));
    acc = m_seq(acc, step);
  }
  return acc;
}

Morphism derived_omega(const Model& m, int k, int n, const ObjectExpr& x) {
  std::vector<ObjectExpr> fs(static_cast<size_t>(n + 1), x);
  std::vector<int> perm(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) perm[static_cast<size_t>(i)] = i;
  if (k == 0) {
    // rotate the last factor to the front
    for (int i = 0; i <= n; ++i) perm[static_cast<size_t>(i)] = (i == 0) ? n : i - 1;
  } else {
    std::swap(perm[static_cast<size_t>(k - 1)], perm[static_cast<size_t>(n)]);
  }
  return m_perm(m, fs, perm);
}

Morphism derived_n_inv(const Model& m, int n, const ObjectExpr& x) {
  if (n < 1) throw UsageError("n_inv needs n >= 1");
  ObjectExpr bx = ObjectExpr::bang(x);
  ObjectExpr bbx = ObjectExpr::bang(bx);
  Morphism acc = m_seq(gen(m, "delta", x), gen(m, "s", bx));
  // (Delta_{n-1} at !X) ⊗ 1
  Morphism dn = m_par(m, derived_Delta_n(m, n - 1, bx), m_id(m, bx));
  acc = m_seq(acc, dn);
  // (ε_{!X} ⊗ ... ⊗ ε_{!X} ⊗ 1)
  if (n >= 2) {
    Morphism eps_row = gen(m, "eps", bx);
    for (int i = 1; i < n - 1; ++i) eps_row = m_par(m, eps_row, gen(m, "eps", bx));
    acc = m_seq(acc, m_par(m, eps_row, m_id(m, bx)));
  }
  // (1 ⊗ e ⊗ ... ⊗ e)
  if (n >= 2) {
    Morphism e_row = gen(m, "e", x);
    for (int i = 1; i < n - 1; ++i) e_row = m_par(m, e_row, gen(m, "e", x));
    acc = m_seq(acc, m_par(m, m_id(m, bx), e_row));
  } else {
    // n = 1: (Delta_0 ⊗ 1) = (e_{!X} ⊗ 1) already collapsed the first leg
  }
  return acc;
}

Morphism derived_Kinv_composite(const Model& m, const ObjectExpr& x) {
  auto jinv = m.jinv_n(x, 0);
  if (!jinv) throw MissingCapability("K⁻¹ composite needs a registered J⁻¹");
  Morphism F = m_par(m, *jinv, m_id(m, x));
  Morphism core = m_seq(m_seq(m_seq(gen(m, "dcirc", x), F), F), gen(m, "d", x));
  return m_add(core, m.bang_of(m_zero(m, x, x)));
}

Morphism derived_Jinv_composite(const Model& m, const ObjectExpr& x) {
  ObjectExpr bx = ObjectExpr::bang(x);
  auto kinv = m.kinv(bx);
  if (!kinv) throw MissingCapability("J⁻¹ composite needs a registered K⁻¹ at !X");
  Morphism acc = m_seq(gen(m, "delta", x), *kinv);
  acc = m_seq(acc, gen(m, "dcirc", bx));
  Morphism tail = m_par(m, m.bang_of(gen(m, "eps", x)), gen(m, "e", x));
  return m_seq(acc, tail);
}

Morphism derived_Jinv_n_composite(const Model& m, int n_plus_1, const ObjectExpr& x) {
  if (n_plus_1 < 1) throw UsageError("J⁻¹_n composite defined for n >= 1");
  ObjectExpr bx = ObjectExpr::bang(x);
  auto jn = m.jinv_n(bx, n_plus_1 - 1);
  if (!jn) throw MissingCapability("J⁻¹_{n+1} composite needs J_n⁻¹ at !X");
  Morphism acc = m_seq(gen(m, "delta", x), *jn);
  acc = m_seq(acc, gen(m, "dcirc", bx));
  Morphism tail = m_par(m, m.bang_of(gen(m, "eps", x)), gen(m, "e", x));
  return m_seq(acc, tail);
}

Morphism antiderivative(const Model& m, const ObjectExpr& x) {
  auto kinv = m.kinv(x);
  if (!kinv) throw MissingCapability("antiderivative needs K⁻¹");
  return m_seq(*kinv, gen(m, "dcirc", x));
}

}  // namespace calcat

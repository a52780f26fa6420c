#include "calcat/catalog.hpp"

#include <chrono>
#include <sstream>

#include "calcat/errors.hpp"
#include "calcat/models/freeexp.hpp"
#include "calcat/models/rb.hpp"

namespace calcat {

std::string vec_str(const SpacePtr& space, const Vec& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << scalar_str(c) << "*";
    space->print_elem(os, b);
  }
  return os.str();
}

EquationReport eq_report(const Morphism& lhs, const Morphism& rhs, const EnumBudget& budget,
                         bool parallel) {
  EquationReport r;
  EqVerdict v = morphism_equal(lhs, rhs, budget, parallel);
  r.inputs = v.inputs_checked;
  if (v.equal) {
    r.verdict = EquationReport::Verdict::Pass;
    return r;
  }
  r.verdict = EquationReport::Verdict::Fail;
  const auto& w = *v.witness;
  r.witness = WitnessReport{lhs.carrier.dom->elem_str(w.input), vec_str(lhs.carrier.cod, w.lhs),
                            vec_str(lhs.carrier.cod, w.rhs), w.input->grade()};
  return r;
}

namespace {

using Verdict = EquationReport::Verdict;

std::optional<std::string> unmet(const EntryReq& req, const Model& m) {
  const Capabilities& c = m.caps();
  if (req.delta && !c.has_delta) return "model has no δ";
  if (req.monoidal && !c.has_monoidal) return "model is not monoidal";
  if (req.differential && !c.has_differential) return "model has no deriving transformation";
  if (req.integral && !c.has_integral) return "model has no integral transformation";
  if (req.antider && !c.has_antiderivatives) return "model has no antiderivatives (K not invertible)";
  if (req.idempotent_add && !m.rig().add_idempotent()) return "rig addition is not idempotent";
  if (req.integral_is_dcirc) {
    auto* fe = dynamic_cast<const FreeExpModel*>(&m);
    if (!fe || !fe->integral_is_coderiving()) return "integral is not the coderiving map here";
  }
  return std::nullopt;
}

struct CatalogBuilder {
  std::vector<EquationEntry> entries;

  EquationEntry& term(std::string id, std::string anchor, std::vector<std::string> suites,
                      EntryReq req, std::string lhs, std::string rhs) {
    EquationEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.suites = std::move(suites);
    e.req = req;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    entries.push_back(std::move(e));
    return entries.back();
  }

  EquationEntry& custom(
      std::string id, std::string anchor, std::vector<std::string> suites, EntryReq req,
      std::function<EquationReport(const Model&, const RunBounds&, const EnumBudget&)> run) {
    EquationEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.suites = std::move(suites);
    e.req = req;
    e.run = std::move(run);
    entries.push_back(std::move(e));
    return entries.back();
  }
};

EntryReq req_none() { return {}; }
EntryReq req_delta() {
  EntryReq r;
  r.delta = true;
  return r;
}
EntryReq req_diff() {
  EntryReq r;
  r.differential = true;
  return r;
}
EntryReq req_int() {
  EntryReq r;
  r.integral = true;
  return r;
}
EntryReq req_diff_delta() {
  EntryReq r;
  r.differential = true;
  r.delta = true;
  return r;
}
EntryReq req_int_delta() {
  EntryReq r;
  r.integral = true;
  r.delta = true;
  return r;
}
EntryReq req_anti() {
  EntryReq r;
  r.differential = true;
  r.antider = true;
  return r;
}
EntryReq req_mon() {
  EntryReq r;
  r.monoidal = true;
  return r;
}

std::string rep(const std::string& piece, int n, const std::string& sep) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += sep;
    out += piece;
  }
  return out;
}

// (n+1)·s(Δ_n⊗1)(ε⊗...⊗ε⊗1) (the polynomial-integration composite)
std::string spoly_lhs(int n) {
  std::string t = "s ; (Delta_n[" + std::to_string(n) + "] # id[A])";
  if (n >= 1) t += " ; (" + rep("eps", n, " # ") + " # id[A])";
  return std::to_string(n + 1) + "*(" + t + ")";
}

std::string spoly_rhs(int n) {
  return "Delta_n[" + std::to_string(n + 1) + "] ; (" + rep("eps", n + 1, " # ") + ")";
}

std::string omega_side(int n) {
  std::string t = "s ; (Delta_n[" + std::to_string(n) + "] # id[A])";
  if (n >= 1) t += " ; (" + rep("eps", n, " # ") + " # id[A])";
  return t;
}

}  // namespace

EnumBudget budget_for(const EquationEntry& e, const Model& m, const RunBounds& b) {
  EnumBudget budget;
  const std::string& name = m.name();
  if (name == "rel") {
    budget.max_grade = b.bag_size;
  } else if (name == "rb") {
    budget.max_grade = b.degree < 3 ? b.degree : 3;
  } else {
    budget.max_grade = e.uses_delta ? std::min(b.degree, b.delta_degree) : b.degree;
  }
  budget.max_zero_letters = b.outer_card;
  if (e.floor_grade > budget.max_grade) budget.max_grade = e.floor_grade;
  if (e.floor_card > budget.max_zero_letters) budget.max_zero_letters = e.floor_card;
  if (e.cap_grade > 0 && budget.max_grade > e.cap_grade) budget.max_grade = e.cap_grade;
  if (e.cap_card > 0 && budget.max_zero_letters > e.cap_card) budget.max_zero_letters = e.cap_card;
  return budget;
}

EquationReport run_entry(const EquationEntry& e, const Model& m, const RunBounds& b) {
  EquationReport r;
  r.id = e.id;
  r.anchor = e.anchor;
  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](EquationReport rep) {
    rep.id = e.id;
    rep.anchor = e.anchor;
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };
  if (auto reason = unmet(e.req, m)) {
    r.verdict = Verdict::Skipped;
    r.detail = *reason;
    return finish(std::move(r));
  }
  EnumBudget budget = budget_for(e, m, b);
  try {
    if (e.run) return finish(e.run(m, b, budget));
    Morphism lhs = evaluate_text(e.lhs, m);
    Morphism rhs = evaluate_text(e.rhs, m);
    return finish(eq_report(lhs, rhs, budget, b.parallel));
  } catch (const MissingCapability& ex) {
    r.verdict = Verdict::Skipped;
    r.detail = ex.what();
    return finish(std::move(r));
  }
}

std::vector<std::string> suite_names() {
  return {"comonoid", "coderiving", "differential", "integral", "calculus",
          "LKJ",      "antiderivatives", "monoidal", "separations"};
}

EquationReport check_equation(const Model& m, const std::string& id, const RunBounds& b) {
  for (const auto& e : catalog()) {
    if (e.id != id) continue;
    if (!e.model_filter.empty() && e.model_filter != m.name()) continue;
    return run_entry(e, m, b);
  }
  throw UsageError("unknown equation id: " + id);
}

Report run_suite(const Model& m, const std::string& suite, const RunBounds& b) {
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite: " + suite);
  Report rep;
  rep.model = m.name();
  rep.suite = suite;
  rep.bounds = b;
  std::vector<const EquationEntry*> selected;
  for (const auto& e : catalog()) {
    if (std::find(e.suites.begin(), e.suites.end(), suite) == e.suites.end()) continue;
    if (!e.model_filter.empty() && e.model_filter != m.name()) continue;
    selected.push_back(&e);
  }
  rep.results.resize(selected.size());
#ifdef CALCAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (b.parallel)
#endif
  for (long i = 0; i < static_cast<long>(selected.size()); ++i) {
    RunBounds inner = b;
    inner.parallel = false;  // one level of parallelism: across equations
    rep.results[static_cast<size_t>(i)] = run_entry(*selected[static_cast<size_t>(i)], m, inner);
  }
  return rep;
}

Report run_ids(const Model& m, const std::vector<std::string>& ids, const RunBounds& b) {
  Report rep;
  rep.model = m.name();
  rep.suite = "(ids)";
  rep.bounds = b;
  for (const auto& id : ids) rep.results.push_back(check_equation(m, id, b));
  return rep;
}

namespace {
void add_term_entries(CatalogBuilder& cb);
}  // namespace

void add_custom_entries(std::vector<EquationEntry>& entries);  // catalog_custom.cpp

const std::vector<EquationEntry>& catalog() {
  static const std::vector<EquationEntry> entries = [] {
    CatalogBuilder cb;
    add_term_entries(cb);
    add_custom_entries(cb.entries);
    return std::move(cb.entries);
  }();
  return entries;
}

namespace {

void add_term_entries(CatalogBuilder& cb) {
  // ---- comonoid / comonad ----
  cb.term("comonoid.coassoc", "coassociativity: Delta;(Delta#1) = Delta;(1#Delta)", {"comonoid"},
          req_none(), "Delta ; (Delta # id[!A])", "Delta ; (id[!A] # Delta)");
  cb.term("comonoid.counit.l", "counit: Delta;(e#1) = 1", {"comonoid"}, req_none(),
          "Delta ; (e # id[!A])", "id[!A]");
  cb.term("comonoid.counit.r", "counit: Delta;(1#e) = 1", {"comonoid"}, req_none(),
          "Delta ; (id[!A] # e)", "id[!A]");
  cb.term("comonoid.cocomm", "cocommutativity: Delta;sym = Delta", {"comonoid"}, req_none(),
          "Delta ; sym[!A,!A]", "Delta");
  cb.term("comonad.counit.r", "comonad triangle: delta;eps = 1", {"comonoid"}, req_delta(),
          "delta ; eps[!A]", "id[!A]");
  cb.term("comonad.counit.l", "comonad triangle: delta;!(eps) = 1", {"comonoid"}, req_delta(),
          "delta ; bang(eps)", "id[!A]");
  {
    auto& e = cb.term("comonad.coassoc", "comonad square: delta;delta = delta;!(delta)",
                      {"comonoid"}, req_delta(), "delta ; delta[!A]", "delta ; bang(delta)");
    e.uses_delta = true;
    e.cap_grade = 2;  // the !!!A input space grows steeply
    e.cap_card = 2;
  }
  {
    auto& e = cb.term("comod.delta.Delta", "delta preserves comultiplication: delta;Delta = Delta;(delta#delta)",
                      {"comonoid"}, req_delta(), "delta ; Delta[!A]", "Delta ; (delta # delta)");
    e.uses_delta = true;
  }
  cb.term("comod.delta.e", "delta preserves counit: delta;e = e", {"comonoid"}, req_delta(),
          "delta ; e[!A]", "e");
  cb.term("sym.invol", "symmetry involution: sym;sym = 1", {"comonoid"}, req_none(),
          "sym[A,A] ; sym[A,A]", "id[A*A]");
  cb.term("sym.invol.bang", "symmetry involution at (!A,A)", {"comonoid"}, req_none(),
          "sym[!A,A] ; sym[A,!A]", "id[!A*A]");

  // ---- coderiving transformation ----
  cb.term("cd.1", "[cd.1] dcirc;(e#1) = eps", {"coderiving"}, req_none(),
          "dcirc ; (e # id[A])", "eps");
  cb.term("cd.2", "[cd.2] dcirc;(eps#1) = Delta;(eps#eps)", {"coderiving"}, req_none(),
          "dcirc ; (eps # id[A])", "Delta ; (eps # eps)");
  cb.term("cd.3", "[cd.3] dcirc;(Delta#1) = Delta;(1#dcirc)", {"coderiving"}, req_none(),
          "dcirc ; (Delta # id[A])", "Delta ; (id[!A] # dcirc)");
  cb.term("cd.4", "[cd.4] dcirc;(Delta#1);(1#sym) = Delta;(dcirc#1)", {"coderiving"}, req_none(),
          "dcirc ; (Delta # id[A]) ; (id[!A] # sym[!A,A])", "Delta ; (dcirc # id[!A])");
  {
    auto& e = cb.term("cd.5", "[cd.5] dcirc;(delta#1) = delta;dcirc;(1#eps)", {"coderiving"},
                      req_delta(), "dcirc ; (delta # id[A])", "delta ; dcirc[!A] ; (id[!!A] # eps)");
    e.uses_delta = true;
  }
  cb.term("cd.6", "[cd.6] dcirc;(dcirc#1) = dcirc;(dcirc#1);(1#sym)", {"coderiving"}, req_none(),
          "dcirc ; (dcirc # id[A])", "dcirc ; (dcirc # id[A]) ; (id[!A] # sym[A,A])");
  cb.term("cd.7", "[cd.7] delta;dcirc;(!(eps)#e) = 1", {"coderiving"}, req_delta(),
          "delta ; dcirc[!A] ; (bang(eps) # e)", "id[!A]");

  // ---- deriving transformation ----
  cb.term("d.1", "[d.1] constant rule: d;e = 0", {"differential"}, req_diff(),
          "d ; e", "0[!A*A->I]");
  cb.term("d.2", "[d.2] Leibniz rule", {"differential"}, req_diff(), "d ; Delta",
          "(Delta # id[A]) ; (id[!A] # sym[!A,A]) ; (d # id[!A]) + (Delta # id[A]) ; (id[!A] # d)");
  cb.term("d.3", "[d.3] linear rule: d;eps = e⊗1", {"differential"}, req_diff(),
          "d ; eps", "e # id[A]");
  {
    auto& e = cb.term("d.4", "[d.4] chain rule", {"differential"}, req_diff_delta(), "d ; delta",
                      "(Delta # id[A]) ; (delta # id[!A] # id[A]) ; (id[!!A] # d) ; d[!A]");
    e.uses_delta = true;
  }
  cb.term("d.5", "[d.5] interchange: (d#1);d = (1#sym);(d#1);d", {"differential"}, req_diff(),
          "(d # id[A]) ; d", "(id[!A] # sym[A,A]) ; (d # id[A]) ; d");
  cb.term("W.def", "d;dcirc = W + 1", {"differential"}, req_diff(),
          "d ; dcirc", "W + id[!A*A]");

  // ---- integral transformation ----
  cb.term("s.1", "[s.1] integral of constants: s;(e#1) = eps", {"integral"}, req_int(),
          "s ; (e # id[A])", "eps");
  cb.term("s.2", "[s.2] Rota-Baxter rule", {"integral"}, req_int(), "Delta ; (s # s)",
          "s ; (Delta # id[A]) ; (s # id[!A] # id[A]) + "
          "s ; (Delta # id[A]) ; (id[!A] # sym[!A,A]) ; (id[!A] # id[A] # s)");
  cb.term("s.3", "[s.3] interchange: s;(s#1) = s;(s#1);(1#sym)", {"integral"}, req_int(),
          "s ; (s # id[A])", "s ; (s # id[A]) ; (id[!A] # sym[A,A])");
  cb.term("s.nat", "naturality consequence: s = delta;s;(!(eps)#eps)", {"integral"},
          req_int_delta(), "s", "delta ; s[!A] ; (bang(eps) # eps)");
  for (int n = 0; n <= 5; ++n) {
    auto& e = cb.term("s.poly.n" + std::to_string(n),
                      "[s.Poly] (n+1)·s(Delta_n⊗1)(eps^n⊗1) = Delta_{n+1}(eps^{n+1}), n=" +
                          std::to_string(n),
                      {"integral"}, req_int(), spoly_lhs(n), spoly_rhs(n));
    e.floor_grade = n + 1;
  }
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto& e = cb.term(
          "omega.k" + std::to_string(k) + ".n" + std::to_string(n),
          "omega-swap invariance of polynomial integration (k=" + std::to_string(k) +
              ", n=" + std::to_string(n) + ")",
          {"integral"}, req_int(),
          omega_side(n) + " ; omega[" + std::to_string(k) + "," + std::to_string(n) + "]",
          omega_side(n));
      e.floor_grade = n + 1;
    }
  }
  for (int n = 1; n <= 4; ++n) {
    cb.term("n.inv." + std::to_string(n),
            "n·n⁻¹ = 1 with n⁻¹ = delta;s;(Delta_{n-1}⊗1)(eps…⊗1)(1⊗e…), n=" + std::to_string(n),
            {"integral"}, req_int_delta(),
            std::to_string(n) + "*n_inv[" + std::to_string(n) + "]", "id[!A]");
  }
  for (int n = 1; n <= 3; ++n) {
    auto& e = cb.term("n.inv.unit." + std::to_string(n),
                      "n·n⁻¹ = 1 at the unit object, n=" + std::to_string(n), {"integral"},
                      req_int_delta(),
                      std::to_string(n) + "*n_inv[" + std::to_string(n) + ",I]", "id[!I]");
    e.floor_card = 4;
  }

  // ---- calculus ----
  cb.term("ftc2", "second fundamental theorem: s;d + !0 = 1", {"calculus"},
          [] {
            EntryReq r;
            r.differential = true;
            r.integral = true;
            return r;
          }(),
          "s ; d + bang(0[A->A])", "id[!A]");
  cb.term("compat", "compatibility: d;s;d = d", {"calculus"},
          [] {
            EntryReq r;
            r.differential = true;
            r.integral = true;
            return r;
          }(),
          "d ; s ; d", "d");
  {
    auto& e = cb.term("calc.obj.unit", "the unit is a calculus object: d;s = 1 at I", {"calculus"},
                      [] {
                        EntryReq r;
                        r.differential = true;
                        r.integral = true;
                        return r;
                      }(),
                      "d[I] ; s[I]", "id[!I*I]");
    e.floor_card = 4;
  }
  cb.term("calc.obj.base", "d;s = 1 at the base object (calculus object test)", {},
          [] {
            EntryReq r;
            r.differential = true;
            r.integral = true;
            return r;
          }(),
          "d ; s", "id[!A*A]");

  // ---- L, J, K property families ----
  auto add_ljk = [&](const std::string& fam, int n, const std::string& map_term, int c1, int c2,
                     int c3, const std::string& succ_term) {
    std::string sfx = "." + fam + (fam == "K" ? "" : ".n" + std::to_string(n));
    std::string id_prefix = fam + (fam == "K" ? "" : ".n" + std::to_string(n));
    (void)sfx;
    std::string bang0 = "bang(0[A->A])";
    cb.term(id_prefix + ".1a", "[" + fam + ".1] left: M;!0 = c·!0", {"LKJ"}, req_diff(),
            map_term + " ; " + bang0, std::to_string(c1) + "*" + bang0);
    cb.term(id_prefix + ".1b", "[" + fam + ".1] right: !0;M = c·!0", {"LKJ"}, req_diff(),
            bang0 + " ; " + map_term, std::to_string(c1) + "*" + bang0);
    cb.term(id_prefix + ".2", "[" + fam + ".2] M;e = c·e", {"LKJ"}, req_diff(),
            map_term + " ; e", std::to_string(c2) + "*e");
    cb.term(id_prefix + ".3", "[" + fam + ".3] M;eps = c·eps", {"LKJ"}, req_diff(),
            map_term + " ; eps", std::to_string(c3) + "*eps");
    cb.term(id_prefix + ".6", "[" + fam + ".6] d;M = (M'⊗1);d", {"LKJ"}, req_diff(),
            "d ; " + map_term, "(" + succ_term + " # id[A]) ; d");
    cb.term(id_prefix + ".7", "[" + fam + ".7] M;dcirc = dcirc;(M'⊗1)", {"LKJ"}, req_diff(),
            map_term + " ; dcirc", "dcirc ; (" + succ_term + " # id[A])");
    cb.term(id_prefix + ".9", "[" + fam + ".9] (d#1);(M#1);d symmetric in the two inputs", {"LKJ"},
            req_diff(), "(d # id[A]) ; (" + map_term + " # id[A]) ; d",
            "(id[!A] # sym[A,A]) ; (d # id[A]) ; (" + map_term + " # id[A]) ; d");
    cb.term(id_prefix + ".10", "[" + fam + ".10] dcirc;(M#1);(dcirc#1) symmetric in the two outputs",
            {"LKJ"}, req_diff(), "dcirc ; (" + map_term + " # id[A]) ; (dcirc # id[A])",
            "dcirc ; (" + map_term + " # id[A]) ; (dcirc # id[A]) ; (id[!A] # sym[A,A])");
    cb.term(id_prefix + ".11", "[" + fam + ".11] (M⊗1);W = W;(M⊗1)", {"LKJ"}, req_diff(),
            "(" + map_term + " # id[A]) ; W", "W ; (" + map_term + " # id[A])");
    cb.term(id_prefix + ".12", "[" + fam + ".12] (M⊗1);d;dcirc = d;dcirc;(M⊗1)", {"LKJ"},
            req_diff(), "(" + map_term + " # id[A]) ; d ; dcirc",
            "d ; dcirc ; (" + map_term + " # id[A])");
  };
  for (int n = 0; n <= 2; ++n) {
    std::string Ln = "Ln[" + std::to_string(n) + "]";
    std::string Ln1 = "Ln[" + std::to_string(n + 1) + "]";
    add_ljk("L", n, Ln, n, n, n + 1, Ln1);
    // [L.4]: Ln;Delta = Delta;(Lr#1) + Delta;(1#Ls), r+s = n
    for (int r = 0; r <= n; ++r) {
      int s = n - r;
      cb.term("L.n" + std::to_string(n) + ".4.r" + std::to_string(r),
              "[L.4] Ln;Delta = Delta;(L_r⊗1)+Delta;(1⊗L_s), r=" + std::to_string(r) +
                  ",s=" + std::to_string(s),
              {"LKJ"}, req_diff(), Ln + " ; Delta",
              "Delta ; (Ln[" + std::to_string(r) + "] # id[!A]) + Delta ; (id[!A] # Ln[" +
                  std::to_string(s) + "])");
    }
    {
      auto& e = cb.term("L.n" + std::to_string(n) + ".5",
                        "[L.5] Ln;delta = delta;dcirc;(1⊗L);d + n·delta", {"LKJ"},
                        req_diff_delta(), Ln + " ; delta",
                        "delta ; dcirc[!A] ; (id[!!A] # L) ; d[!A] + " + std::to_string(n) +
                            "*delta");
      e.uses_delta = true;
    }
  }
  for (int n = 0; n <= 1; ++n) {
    std::string Jn = "Jn[" + std::to_string(n) + "]";
    std::string Jn1 = "Jn[" + std::to_string(n + 1) + "]";
    add_ljk("J", n, Jn, n + 1, n + 1, n + 2, Jn1);
    for (int r = 0; r <= n + 1; ++r) {
      int s = n + 1 - r;
      cb.term("J.n" + std::to_string(n) + ".4.r" + std::to_string(r),
              "[J.4] Jn;Delta = Delta;(L_r⊗1)+Delta;(1⊗L_s), r+s=n+1", {"LKJ"}, req_diff(),
              Jn + " ; Delta",
              "Delta ; (Ln[" + std::to_string(r) + "] # id[!A]) + Delta ; (id[!A] # Ln[" +
                  std::to_string(s) + "])");
    }
    {
      auto& e = cb.term("J.n" + std::to_string(n) + ".5",
                        "[J.5] Jn;delta = delta;dcirc;(1⊗L);d + (n+1)·delta", {"LKJ"},
                        req_diff_delta(), Jn + " ; delta",
                        "delta ; dcirc[!A] ; (id[!!A] # L) ; d[!A] + " + std::to_string(n + 1) +
                            "*delta");
      e.uses_delta = true;
    }
  }
  // K family ([K.6]/[K.7] have their own right-hand sides)
  cb.term("K.1a", "[K.1] K;!0 = !0", {"LKJ"}, req_diff(), "K ; bang(0[A->A])", "bang(0[A->A])");
  cb.term("K.1b", "[K.1] !0;K = !0", {"LKJ"}, req_diff(), "bang(0[A->A]) ; K", "bang(0[A->A])");
  cb.term("K.2", "[K.2] K;e = e", {"LKJ"}, req_diff(), "K ; e", "e");
  cb.term("K.3", "[K.3] K;eps = eps", {"LKJ"}, req_diff(), "K ; eps", "eps");
  cb.term("K.4", "[K.4] K;Delta three-term Leibniz form", {"LKJ"}, req_diff(), "K ; Delta",
          "Delta ; (L # id[!A]) + Delta ; (id[!A] # L) + Delta ; (bang(0[A->A]) # bang(0[A->A]))");
  {
    auto& e = cb.term("K.5", "[K.5] K;delta = delta;dcirc;(1⊗L);d + delta;!(!0)", {"LKJ"},
                      req_diff_delta(), "K ; delta",
                      "delta ; dcirc[!A] ; (id[!!A] # L) ; d[!A] + delta ; bang(bang(0[A->A]))");
    e.uses_delta = true;
  }
  cb.term("K.6", "[K.6] d;K = d;L", {"LKJ"}, req_diff(), "d ; K", "d ; L");
  cb.term("K.7", "[K.7] K;dcirc = L;dcirc", {"LKJ"}, req_diff(), "K ; dcirc", "L ; dcirc");
  cb.term("K.9", "[K.9] (d#1);(K#1);d symmetric in the two inputs", {"LKJ"}, req_diff(),
          "(d # id[A]) ; (K # id[A]) ; d",
          "(id[!A] # sym[A,A]) ; (d # id[A]) ; (K # id[A]) ; d");
  cb.term("K.10", "[K.10] dcirc;(K#1);(dcirc#1) symmetric in the two outputs", {"LKJ"}, req_diff(),
          "dcirc ; (K # id[A]) ; (dcirc # id[A])",
          "dcirc ; (K # id[A]) ; (dcirc # id[A]) ; (id[!A] # sym[A,A])");
  cb.term("K.11", "[K.11] (K⊗1);W = W;(K⊗1)", {"LKJ"}, req_diff(), "(K # id[A]) ; W",
          "W ; (K # id[A])");
  cb.term("K.12", "[K.12] (K⊗1);d;dcirc = d;dcirc;(K⊗1)", {"LKJ"}, req_diff(),
          "(K # id[A]) ; d ; dcirc", "d ; dcirc ; (K # id[A])");
  cb.term("lemma.L", "dcirc;(1⊗L);d;dcirc;(!(eps)⊗e) = dcirc;(!(eps)⊗e);L at !A", {"LKJ"},
          req_diff(),
          "dcirc[!A] ; (id[!!A] # L) ; d[!A] ; dcirc[!A] ; (bang(eps) # e)",
          "dcirc[!A] ; (bang(eps) # e) ; L");
  {
    EntryReq r;
    r.differential = true;
    r.idempotent_add = true;
    cb.term("lkj.rel.K.id", "idempotent addition makes K the identity", {"LKJ"}, r, "K", "id[!A]");
    cb.term("lkj.rel.J.id", "idempotent addition makes J the identity", {"LKJ"}, r, "J", "id[!A]");
  }

  // ---- antiderivatives: K⁻¹ / J⁻¹ properties ----
  cb.term("Kinv.1a", "[K⁻¹.1] K⁻¹;!0 = !0", {"antiderivatives"}, req_anti(),
          "Kinv ; bang(0[A->A])", "bang(0[A->A])");
  cb.term("Kinv.1b", "[K⁻¹.1] !0;K⁻¹ = !0", {"antiderivatives"}, req_anti(),
          "bang(0[A->A]) ; Kinv", "bang(0[A->A])");
  cb.term("Kinv.2", "[K⁻¹.2] K⁻¹;e = e", {"antiderivatives"}, req_anti(), "Kinv ; e", "e");
  cb.term("Kinv.3", "[K⁻¹.3] K⁻¹;eps = eps", {"antiderivatives"}, req_anti(), "Kinv ; eps", "eps");
  cb.term("Kinv.4", "[K⁻¹.4] three-term comultiplication exchange", {"antiderivatives"},
          req_anti(),
          "Delta ; (Kinv # Kinv) + Delta ; (Kinv # bang(0[A->A])) + Delta ; (bang(0[A->A]) # Kinv)",
          "Kinv ; Delta ; (Kinv # id[!A]) + Kinv ; Delta ; (id[!A] # Kinv) + "
          "Delta ; (bang(0[A->A]) # bang(0[A->A]))");
  cb.term("Kinv.5", "[K⁻¹.5] (K⁻¹⊗1);W = W;(K⁻¹⊗1)", {"antiderivatives"}, req_anti(),
          "(Kinv # id[A]) ; W", "W ; (Kinv # id[A])");
  cb.term("Kinv.6", "[K⁻¹.6] (K⁻¹⊗1);d;dcirc = d;dcirc;(K⁻¹⊗1)", {"antiderivatives"}, req_anti(),
          "(Kinv # id[A]) ; d ; dcirc", "d ; dcirc ; (Kinv # id[A])");
  cb.term("Kinv.7", "[K⁻¹.7] (d#1);(K⁻¹#1);d symmetric in the two inputs", {"antiderivatives"},
          req_anti(), "(d # id[A]) ; (Kinv # id[A]) ; d",
          "(id[!A] # sym[A,A]) ; (d # id[A]) ; (Kinv # id[A]) ; d");
  cb.term("Kinv.8", "[K⁻¹.8] dcirc;(K⁻¹#1);(dcirc#1) symmetric in the two outputs",
          {"antiderivatives"}, req_anti(), "dcirc ; (Kinv # id[A]) ; (dcirc # id[A])",
          "dcirc ; (Kinv # id[A]) ; (dcirc # id[A]) ; (id[!A] # sym[A,A])");
  for (int n = 0; n <= 2; ++n) {
    std::string Jn = "Jinv_n[" + std::to_string(n) + "]";
    std::string Jn1 = "Jinv_n[" + std::to_string(n + 1) + "]";
    std::string pre = "Jinv.n" + std::to_string(n);
    std::string c = std::to_string(n + 1);
    cb.term(pre + ".1a", "[J⁻¹.1] (n+1)·Jn⁻¹;!0 = !0", {"antiderivatives"}, req_anti(),
            c + "*(" + Jn + " ; bang(0[A->A]))", "bang(0[A->A])");
    cb.term(pre + ".1b", "[J⁻¹.1] (n+1)·!0;Jn⁻¹ = !0", {"antiderivatives"}, req_anti(),
            c + "*(bang(0[A->A]) ; " + Jn + ")", "bang(0[A->A])");
    cb.term(pre + ".2", "[J⁻¹.2] (n+1)·Jn⁻¹;e = e", {"antiderivatives"}, req_anti(),
            c + "*(" + Jn + " ; e)", "e");
    cb.term(pre + ".4", "[J⁻¹.4] d;Jn⁻¹ = (J_{n+1}⁻¹⊗1);d", {"antiderivatives"}, req_anti(),
            "d ; " + Jn, "(" + Jn1 + " # id[A]) ; d");
    cb.term(pre + ".5", "[J⁻¹.5] Jn⁻¹;dcirc = dcirc;(J_{n+1}⁻¹⊗1)", {"antiderivatives"},
            req_anti(), Jn + " ; dcirc", "dcirc ; (" + Jn1 + " # id[A])");
    cb.term(pre + ".6", "[J⁻¹.6] (Jn⁻¹⊗1);W = W;(Jn⁻¹⊗1)", {"antiderivatives"}, req_anti(),
            "(" + Jn + " # id[A]) ; W", "W ; (" + Jn + " # id[A])");
    cb.term(pre + ".7", "[J⁻¹.7] (Jn⁻¹⊗1);d;dcirc = d;dcirc;(Jn⁻¹⊗1)", {"antiderivatives"},
            req_anti(), "(" + Jn + " # id[A]) ; d ; dcirc", "d ; dcirc ; (" + Jn + " # id[A])");
    cb.term(pre + ".10", "[J⁻¹.10] (d#1);(Jn⁻¹#1);d symmetric in the two inputs",
            {"antiderivatives"}, req_anti(), "(d # id[A]) ; (" + Jn + " # id[A]) ; d",
            "(id[!A] # sym[A,A]) ; (d # id[A]) ; (" + Jn + " # id[A]) ; d");
    cb.term(pre + ".11", "[J⁻¹.11] dcirc;(Jn⁻¹#1);(dcirc#1) symmetric in the two outputs",
            {"antiderivatives"}, req_anti(),
            "dcirc ; (" + Jn + " # id[A]) ; (dcirc # id[A])",
            "dcirc ; (" + Jn + " # id[A]) ; (dcirc # id[A]) ; (id[!A] # sym[A,A])");
  }
  cb.term("Jinv.3", "[J⁻¹.3] 2·J⁻¹;eps = eps", {"antiderivatives"}, req_anti(),
          "2*(Jinv ; eps)", "eps");
  cb.term("Jinv.8", "[J⁻¹.8] (J⁻¹⊗1);d = d;K⁻¹", {"antiderivatives"}, req_anti(),
          "(Jinv # id[A]) ; d", "d ; Kinv");
  cb.term("Jinv.9", "[J⁻¹.9] dcirc;(J⁻¹⊗1) = K⁻¹;dcirc (the two antiderivative forms)",
          {"antiderivatives"}, req_anti(), "dcirc ; (Jinv # id[A])", "Kinv ; dcirc");
  cb.term("inv.KK.l", "K;K⁻¹ = 1", {"antiderivatives"}, req_anti(), "K ; Kinv", "id[!A]");
  cb.term("inv.KK.r", "K⁻¹;K = 1", {"antiderivatives"}, req_anti(), "Kinv ; K", "id[!A]");
  for (int n = 0; n <= 2; ++n) {
    std::string Jn = "Jn[" + std::to_string(n) + "]";
    std::string Jninv = "Jinv_n[" + std::to_string(n) + "]";
    cb.term("inv.JJ.n" + std::to_string(n) + ".l", "J_n;J_n⁻¹ = 1", {"antiderivatives"},
            req_anti(), Jn + " ; " + Jninv, "id[!A]");
    cb.term("inv.JJ.n" + std::to_string(n) + ".r", "J_n⁻¹;J_n = 1", {"antiderivatives"},
            req_anti(), Jninv + " ; " + Jn, "id[!A]");
  }
  {
    EntryReq r = req_anti();
    r.integral = true;
    cb.term("anti.s.matches", "the bound integral is the antiderivative: s = K⁻¹;dcirc",
            {"antiderivatives"}, r, "s", "Kinv ; dcirc");
  }
  cb.term("anti.s1", "[s.1] for the antiderivative integral", {"antiderivatives"}, req_anti(),
          "dcirc ; (Jinv # id[A]) ; (e # id[A])", "eps");
  cb.term("anti.s2", "[s.2] for the antiderivative integral", {"antiderivatives"}, req_anti(),
          "Delta ; ((dcirc ; (Jinv # id[A])) # (dcirc ; (Jinv # id[A])))",
          "dcirc ; (Jinv # id[A]) ; (Delta # id[A]) ; ((dcirc ; (Jinv # id[A])) # id[!A] # id[A]) + "
          "dcirc ; (Jinv # id[A]) ; (Delta # id[A]) ; (id[!A] # sym[!A,A]) ; "
          "(id[!A] # id[A] # (dcirc ; (Jinv # id[A])))");
  cb.term("anti.s3", "[s.3] for the antiderivative integral", {"antiderivatives"}, req_anti(),
          "dcirc ; (Jinv # id[A]) ; ((dcirc ; (Jinv # id[A])) # id[A])",
          "dcirc ; (Jinv # id[A]) ; ((dcirc ; (Jinv # id[A])) # id[A]) ; (id[!A] # sym[A,A])");
  cb.term("anti.ftc2", "FTC2 for the antiderivative: K⁻¹;dcirc;d + !0 = 1", {"antiderivatives"},
          req_anti(), "Kinv ; dcirc ; d + bang(0[A->A])", "id[!A]");
  cb.term("anti.poincare.compat", "compatibility for the antiderivative: d;K⁻¹;dcirc;d = d",
          {"antiderivatives"}, req_anti(), "d ; Kinv ; dcirc ; d", "d");
  cb.term("Kinv.composite", "K⁻¹ = dcirc;(J⁻¹⊗1);(J⁻¹⊗1);d + !0", {"antiderivatives"}, req_anti(),
          "dcirc ; (Jinv # id[A]) ; (Jinv # id[A]) ; d + bang(0[A->A])", "Kinv");
  {
    EntryReq r = req_anti();
    r.delta = true;
    cb.term("Jinv.composite", "J⁻¹ = delta;K⁻¹;dcirc;(!(eps)⊗e)", {"antiderivatives"}, r,
            "delta ; Kinv[!A] ; dcirc[!A] ; (bang(eps) # e)", "Jinv");
    for (int n = 1; n <= 3; ++n) {
      cb.term("Jinv_n.composite." + std::to_string(n),
              "J_" + std::to_string(n) + "⁻¹ = delta;J_" + std::to_string(n - 1) +
                  "⁻¹;dcirc;(!(eps)⊗e)",
              {"antiderivatives"}, r,
              "delta ; Jinv_n[" + std::to_string(n - 1) + ",!A] ; dcirc[!A] ; (bang(eps) # e)",
              "Jinv_n[" + std::to_string(n) + "]");
    }
    EntryReq ri = r;
    ri.integral = true;
    cb.term("jinv.from.s", "J⁻¹ = delta;s;(!(eps)⊗e) when FTC2 and the extra coherence hold",
            {"antiderivatives"}, ri, "delta ; s[!A] ; (bang(eps) # e)", "Jinv");
    cb.term("extra.coherence",
            "d;s = (delta⊗1);(s⊗1);(!(eps)⊗e⊗1);d;dcirc (s is the antiderivative)",
            {"antiderivatives"}, ri, "d ; s",
            "(delta # id[A]) ; (s[!A] # id[A]) ; (bang(eps) # e # id[A]) ; d ; dcirc");
  }
  {
    EntryReq r;
    r.differential = true;
    r.integral = true;
    r.antider = true;
    auto& e = cb.term("s_K.unit", "at the unit object: s = K⁻¹;dcirc", {"antiderivatives"}, r,
                      "s[I]", "Kinv[I] ; dcirc[I]");
    e.floor_card = 4;
  }
  // ---- monoidal ----
  cb.term("mon.e", "e is monoidal: m_tensor;e = e⊗e", {"monoidal"}, req_mon(),
          "m_tensor ; e[A*B]", "e # e[B]");
  cb.term("mon.Delta", "Delta is monoidal", {"monoidal"}, req_mon(), "m_tensor ; Delta[A*B]",
          "(Delta # Delta[B]) ; (id[!A] # sym[!A,!B] # id[!B]) ; (m_tensor # m_tensor)");
  {
    auto& e = cb.term("mon.mK.e", "m_K;e = 1", {"monoidal"}, req_mon(), "m_K ; e[I]", "id[I]");
    e.floor_card = 4;
  }
  {
    auto& e = cb.term("mon.mK.Delta", "m_K;Delta = m_K⊗m_K", {"monoidal"}, req_mon(),
                      "m_K ; Delta[I]", "m_K # m_K");
    e.floor_card = 4;
  }
  {
    EntryReq r = req_mon();
    r.delta = true;
    auto& e1 = cb.term("mon.coalg.Delta", "Delta is a !-coalgebra morphism", {"monoidal"}, r,
                       "delta ; bang(Delta)", "Delta ; (delta # delta) ; m_tensor[!A,!A]");
    e1.uses_delta = true;
    auto& e2 = cb.term("mon.coalg.e", "e is a !-coalgebra morphism", {"monoidal"}, r,
                       "delta ; bang(e)", "e ; m_K");
    e2.floor_card = 4;
    e2.uses_delta = true;
    auto& e3 = cb.term("mon.delta", "delta is monoidal (m_tensor square)", {"monoidal"}, r,
                       "m_tensor ; delta[A*B]",
                       "(delta # delta[B]) ; m_tensor[!A,!B] ; bang(m_tensor)");
    e3.uses_delta = true;
    auto& e4 = cb.term("mon.mK.delta", "delta is monoidal (m_K square)", {"monoidal"}, r,
                       "m_K ; delta[I]", "m_K ; bang(m_K)");
    e4.floor_card = 4;
    e4.uses_delta = true;
  }
  cb.term("mon.eps", "eps is monoidal: m_tensor;eps = eps⊗eps", {"monoidal"}, req_mon(),
          "m_tensor ; eps[A*B]", "eps # eps[B]");
  {
    auto& e = cb.term("mon.mK.eps", "m_K;eps = 1", {"monoidal"}, req_mon(), "m_K ; eps[I]",
                      "id[I]");
    e.floor_card = 4;
  }
  cb.term("mon.assoc", "m_tensor associativity", {"monoidal"}, req_mon(),
          "(m_tensor # id[!A]) ; m_tensor[A*B,A]", "(id[!A] # m_tensor[B,A]) ; m_tensor[A,B*A]");
  cb.term("mon.symm", "m_tensor symmetry: sym;m_tensor = m_tensor;!(sym)", {"monoidal"}, req_mon(),
          "sym[!A,!B] ; m_tensor[B,A]", "m_tensor ; bang(sym[A,B])");
  cb.term("mon.unit.l", "(m_K⊗1);m_tensor = 1", {"monoidal"}, req_mon(),
          "(m_K # id[!A]) ; m_tensor[I,A]", "id[!A]");
  cb.term("cd.m", "[cd.m] the coderiving transformation is monoidal", {"monoidal"}, req_mon(),
          "m_tensor ; dcirc[A*B]",
          "(dcirc # dcirc[B]) ; (id[!A] # sym[A,!B] # id[B]) ; (m_tensor # id[A] # id[B])");
  {
    EntryReq r = req_mon();
    r.differential = true;
    cb.term("d.m", "[d.m] the deriving transformation is monoidal", {"monoidal"}, r,
            "(id[!A] # d[B]) ; m_tensor",
            "(dcirc # id[!B] # id[B]) ; (id[!A] # sym[A,!B] # id[B]) ; "
            "(m_tensor # id[A] # id[B]) ; d[A*B]");
    for (int n = 0; n <= 1; ++n) {
      std::string ns = std::to_string(n);
      cb.term("L.m.n" + ns + ".l", "[L.m] m_tensor;Ln = (Ln⊗1);m_tensor", {"monoidal"}, r,
              "m_tensor ; Ln[" + ns + ",A*B]", "(Ln[" + ns + "] # id[!B]) ; m_tensor");
      cb.term("L.m.n" + ns + ".r", "[L.m] m_tensor;Ln = (1⊗Ln);m_tensor", {"monoidal"}, r,
              "m_tensor ; Ln[" + ns + ",A*B]", "(id[!A] # Ln[" + ns + ",B]) ; m_tensor");
    }
    cb.term("J.m.l", "[J.m] m_tensor;J = (J⊗1);m_tensor", {"monoidal"}, r,
            "m_tensor ; J[A*B]", "(J # id[!B]) ; m_tensor");
    cb.term("K.m.l", "[K.m] m_tensor;K = (K⊗1);m_tensor", {"monoidal"}, r,
            "m_tensor ; K[A*B]", "(K # id[!B]) ; m_tensor");
    cb.term("K.m.r", "[K.m] m_tensor;K = (1⊗K);m_tensor", {"monoidal"}, r,
            "m_tensor ; K[A*B]", "(id[!A] # K[B]) ; m_tensor");
  }
  {
    EntryReq r = req_mon();
    r.integral = true;
    cb.term("s.m.left", "[s.m] m_tensor;s = (s⊗dcirc);(1⊗sym⊗1);(m_tensor⊗1⊗1)", {"monoidal"}, r,
            "m_tensor ; s[A*B]",
            "(s # dcirc[B]) ; (id[!A] # sym[A,!B] # id[B]) ; (m_tensor # id[A] # id[B])");
    cb.term("s.m.right", "[s.m] m_tensor;s = (dcirc⊗s);(1⊗sym⊗1);(m_tensor⊗1⊗1)", {"monoidal"}, r,
            "m_tensor ; s[A*B]",
            "(dcirc # s[B]) ; (id[!A] # sym[A,!B] # id[B]) ; (m_tensor # id[A] # id[B])");
    cb.term("s.m.alt", "alternative monoidal-integral form: s = (m_K⊗dcirc);(s_K⊗1⊗1);(m_tensor⊗1)",
            {"monoidal"}, r, "s",
            "(m_K # dcirc) ; (s[I] # id[!A] # id[A]) ; (m_tensor[I,A] # id[A])");
  }
  {
    EntryReq r = req_mon();
    r.antider = true;
    cb.term("Kinv.m.l", "[K⁻¹.m] m_tensor;K⁻¹ = (K⁻¹⊗1);m_tensor", {"monoidal"}, r,
            "m_tensor ; Kinv[A*B]", "(Kinv # id[!B]) ; m_tensor");
    cb.term("Kinv.m.r", "[K⁻¹.m] m_tensor;K⁻¹ = (1⊗K⁻¹);m_tensor", {"monoidal"}, r,
            "m_tensor ; Kinv[A*B]", "(id[!A] # Kinv[B]) ; m_tensor");
    cb.term("Jinv.m.l", "[J⁻¹.m] m_tensor;J⁻¹ = (J⁻¹⊗1);m_tensor", {"monoidal"}, r,
            "m_tensor ; Jinv[A*B]", "(Jinv # id[!B]) ; m_tensor");
    cb.term("Jinv.m.r", "[J⁻¹.m] m_tensor;J⁻¹ = (1⊗J⁻¹);m_tensor", {"monoidal"}, r,
            "m_tensor ; Jinv[A*B]", "(id[!A] # Jinv[B]) ; m_tensor");
    cb.term("anti.s.m", "[s.m] for the antiderivative integral", {"monoidal"}, r,
            "m_tensor ; Kinv[A*B] ; dcirc[A*B]",
            "((Kinv ; dcirc) # dcirc[B]) ; (id[!A] # sym[A,!B] # id[B]) ; "
            "(m_tensor # id[A] # id[B])");
    cb.term("jinv.from.mk", "J⁻¹ = (m_K⊗1);(s_K⊗1);m_tensor with s_K the unit integral",
            {"monoidal"},
            [] {
              EntryReq rr;
              rr.monoidal = true;
              rr.integral = true;
              rr.antider = true;
              rr.differential = true;
              return rr;
            }(),
            "(m_K # id[!A]) ; (s[I] # id[!A]) ; m_tensor[I,A]", "Jinv");
  }
  {
    EntryReq r = req_mon();
    r.integral = true;
    r.delta = true;
    for (int n = 2; n <= 3; ++n) {
      cb.term("n.inv.monoidal." + std::to_string(n),
              "n·n⁻¹_A = 1 with n⁻¹_A = (m_K⊗1);(n⁻¹_{!K}⊗1);(e⊗1), n=" + std::to_string(n),
              {"monoidal"}, r,
              std::to_string(n) + "*((m_K # id[A]) ; (n_inv[" + std::to_string(n) +
                  ",I] # id[A]) ; (e[I] # id[A]))",
              "id[A]");
    }
  }
}

}  // namespace

}  // namespace calcat

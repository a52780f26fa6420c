#include <functional>

#include "calcat/catalog.hpp"
#include "calcat/errors.hpp"
#include "calcat/models/freeexp.hpp"
#include "calcat/models/rb.hpp"

// Custom catalog entries: sampled conditional laws, closed-form oracles,
// blockwise-inversion cross-checks, Seely/Fubini constructions and the
// per-model separation witnesses.

namespace calcat {

namespace {

using Verdict = EquationReport::Verdict;

uint64_t entry_seed(const RunBounds& b, const std::string& id, uint64_t salt) {
  uint64_t h = 1469598103934665603ULL;
  for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h ^ (b.seed * 0x9e3779b97f4a7c15ULL) ^ salt;
}

EquationReport pass_report(long inputs, std::string detail = "") {
  EquationReport r;
  r.verdict = Verdict::Pass;
  r.inputs = inputs;
  r.detail = std::move(detail);
  return r;
}

EquationReport fail_report(std::string detail) {
  EquationReport r;
  r.verdict = Verdict::Fail;
  r.detail = std::move(detail);
  return r;
}

EquationReport skip_report(std::string reason) {
  EquationReport r;
  r.verdict = Verdict::Skipped;
  r.detail = std::move(reason);
  return r;
}

// Expect the equation to fail; confirm and report the minimal witness.
EquationReport expect_fail(const Morphism& lhs, const Morphism& rhs, const EnumBudget& budget,
                           bool parallel,
                           const std::function<std::optional<std::string>(const EqWitness&)>&
                               witness_check = nullptr) {
  EqVerdict v = morphism_equal(lhs, rhs, budget, parallel);
  EquationReport r;
  r.inputs = v.inputs_checked;
  if (v.equal) return fail_report("expected a counterexample but the equation holds here");
  const auto& w = *v.witness;
  if (witness_check) {
    if (auto err = witness_check(w)) return fail_report("counterexample has the wrong shape: " + *err);
  }
  r.verdict = Verdict::ExpectedFailConfirmed;
  r.witness = WitnessReport{lhs.carrier.dom->elem_str(w.input), vec_str(lhs.carrier.cod, w.lhs),
                            vec_str(lhs.carrier.cod, w.rhs), w.input->grade()};
  return r;
}

// Merge a family of sampled sub-checks: all must pass.
EquationReport all_of(std::vector<EquationReport> reps) {
  long inputs = 0;
  for (auto& r : reps) {
    inputs += r.inputs;
    if (r.verdict != Verdict::Pass) {
      r.inputs = inputs;
      return r;
    }
  }
  EquationReport r;
  r.verdict = Verdict::Pass;
  r.inputs = inputs;
  return r;
}

ObjectExpr objA() { return ObjectExpr::base("A"); }
ObjectExpr bangA() { return ObjectExpr::bang(objA()); }

// diagonal oracle at !A: b ↦ coeff(|b|)·b
Morphism diag_oracle(const Model& m, std::function<Rational(size_t)> coeff) {
  const Rig* rig = &m.rig();
  SpacePtr s = m.space(bangA());
  LinMap lm;
  lm.dom = s;
  lm.cod = s;
  lm.rig = rig;
  lm.grade_preserving = true;
  auto fn = std::move(coeff);
  lm.apply = [rig, fn](const BasisPtr& b) { return Vec::single(b, fn(b->size()), *rig); };
  return Morphism{bangA(), bangA(), std::move(lm)};
}

void add_naturality(CatalogOut& cb);

}  // namespace

// The builder type lives in catalog.cpp's anonymous namespace; re-declare the
// minimal interface used here.
struct CatalogOut {
  std::vector<EquationEntry>& entries;
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

}  // namespace calcat

#include "calcat/report.hpp"

#include <json.hpp>

#include <ostream>

namespace calcat {

const char* verdict_str(EquationReport::Verdict v) {
  switch (v) {
    case EquationReport::Verdict::Pass: return "pass";
    case EquationReport::Verdict::Fail: return "fail";
    case EquationReport::Verdict::ExpectedFailConfirmed: return "expected-fail-confirmed";
    case EquationReport::Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool Report::all_ok() const {
  for (const auto& r : results) {
    if (r.verdict == EquationReport::Verdict::Fail) return false;
  }
  return true;
}

std::string report_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["schema"] = "calcat/1";
  j["model"] = r.model;
  j["suite"] = r.suite;
  j["bounds"] = {{"degree", r.bounds.degree},
                 {"delta_degree", r.bounds.delta_degree},
                 {"outer_card", r.bounds.outer_card},
                 {"vars", r.bounds.vars},
                 {"elements", r.bounds.elements},
                 {"bag_size", r.bounds.bag_size},
                 {"seed", r.bounds.seed}};
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& e : r.results) {
    nlohmann::ordered_json o;
    o["id"] = e.id;
    o["anchor"] = e.anchor;
    o["verdict"] = verdict_str(e.verdict);
    if (!e.detail.empty()) o["detail"] = e.detail;
    if (e.witness) {
      o["witness"] = {{"input", e.witness->input}, {"lhs", e.witness->lhs},
                      {"rhs", e.witness->rhs}, {"grade", e.witness->grade}};
    } else {
      o["witness"] = nullptr;
    }
    o["inputs"] = e.inputs;
    if (with_timing) o["ms"] = e.ms;
    results.push_back(std::move(o));
  }
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

void report_text(std::ostream& os, const Report& r, bool witness_only, bool with_timing) {
  os << "model " << r.model << ", suite " << r.suite << "\n";
  for (const auto& e : r.results) {
    if (witness_only && !e.witness) continue;
    os << "  [" << verdict_str(e.verdict) << "] " << e.id;
    if (!witness_only) os << "  (" << e.anchor << ")";
    if (with_timing) os << "  " << e.ms << " ms";
    if (!e.detail.empty()) os << "  -- " << e.detail;
    os << "\n";
    if (e.witness) {
      os << "      witness: " << e.witness->input << "\n";
      os << "      lhs = " << e.witness->lhs << "\n";
      os << "      rhs = " << e.witness->rhs << "\n";
    }
  }
  int pass = 0, fail = 0, conf = 0, skip = 0;
  for (const auto& e : r.results) {
    switch (e.verdict) {
      case EquationReport::Verdict::Pass: ++pass; break;
      case EquationReport::Verdict::Fail: ++fail; break;
      case EquationReport::Verdict::ExpectedFailConfirmed: ++conf; break;
      case EquationReport::Verdict::Skipped: ++skip; break;
    }
  }
  os << "  " << pass << " pass, " << fail << " fail, " << conf << " expected-fail-confirmed, "
     << skip << " skipped\n";
}

}  // namespace calcat

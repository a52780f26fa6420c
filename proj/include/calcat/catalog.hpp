#pragma once

#include <functional>

#include "calcat/evaluate.hpp"
#include "calcat/report.hpp"

namespace calcat {

// Capability requirements of a catalog entry.
struct EntryReq {
  bool delta = false;
  bool monoidal = false;
  bool differential = false;
  bool integral = false;
  bool antider = false;
  bool idempotent_add = false;    // Boolean-rig models only
  bool integral_is_dcirc = false; // s = d° models only (REL)
};

struct EquationEntry {
  std::string id;
  std::string anchor;
  std::vector<std::string> suites;
  EntryReq req;
  std::string model_filter;  // nonempty: entry exists only for that model
  bool uses_delta = false;   // selects the δ enumeration budget
  int floor_grade = 0;
  int floor_card = 0;
  int cap_grade = 0;  // nonzero: clamp the budget (heavyweight nested-! domains)
  int cap_card = 0;
  std::string lhs, rhs;      // term texts (when `run` is not set)
  std::function<EquationReport(const Model&, const RunBounds&, const EnumBudget&)> run;
};

const std::vector<EquationEntry>& catalog();
std::vector<std::string> suite_names();

EnumBudget budget_for(const EquationEntry& e, const Model& m, const RunBounds& b);
EquationReport run_entry(const EquationEntry& e, const Model& m, const RunBounds& b);
EquationReport check_equation(const Model& m, const std::string& id, const RunBounds& b);
Report run_suite(const Model& m, const std::string& suite, const RunBounds& b);
Report run_ids(const Model& m, const std::vector<std::string>& ids, const RunBounds& b);

std::string vec_str(const SpacePtr& space, const Vec& v);

// Shared helpers for equality-style checks used by entries and tests.
EquationReport eq_report(const Morphism& lhs, const Morphism& rhs, const EnumBudget& budget,
                         bool parallel);

}  // namespace calcat

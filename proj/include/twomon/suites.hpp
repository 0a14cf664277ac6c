#pragma once

#include <set>
#include <string>
#include <vector>

namespace twomon::suites {

/// Outcome of one acceptance sweep.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  long long cases = 0;    // instances checked
  long long skipped = 0;  // instances outside the preconditions
  std::string detail;
  std::vector<std::string> witnesses;  // first few failures
  double seconds = 0;
};

CriterionResult identity_collapse();
CriterionResult specialization_inclusions();
CriterionResult co_duality();
CriterionResult cat_limit_specializations();
CriterionResult conical_compatibility();
CriterionResult elements_correspondence();
CriterionResult special_lifts();
CriterionResult theorem_sweep();
CriterionResult corollaries();
CriterionResult inserter_gap_witness();
/// Needs the source tree for the corpus and the test documents.
CriterionResult parser_and_reports(const std::string& source_dir);

/// The criteria in `only` (every one when empty), in order, timed.
std::vector<CriterionResult> run_all(const std::string& source_dir, const std::set<int>& only = {});

}  // namespace twomon::suites

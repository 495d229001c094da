#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace so3cov {

struct CheckResult {
  std::string id;
  std::string location;
  bool ok = false;
  std::string detail;
  double elapsed = 0.0;  // seconds
};

struct VerifyOptions {
  int jobs = 1;
  std::uint64_t seed = 20250808;
  int cocharacter_degree = 8;   // F3 equality sweep bound
  int secondary_degree = 6;     // E3/center equality sweep bound
  int lower_bound_degree = 8;   // cocharacter certificate sweep bound
  int resolution_degree = 14;
  int hilbert_degree = 8;
  int ap_bound = 5;
  int deletion_degree = 12;     // tableau deletion sweep bound
};

// (id, location) for every registered check, in output order
std::vector<std::pair<std::string, std::string>> check_catalog();
bool known_check(const std::string& id);

// runs the selected checks (all registered ones when ids is empty);
// results are ordered by catalog position regardless of completion order
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const VerifyOptions& opts = {});

std::string report_json(const std::vector<CheckResult>& results);
std::string report_text(const std::vector<CheckResult>& results);

}  // namespace so3cov

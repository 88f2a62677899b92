#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tropgw {

enum class Budget { Quick, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // instance count, or the first mismatch
  double seconds = 0;
};

/// The eight oracle-equivalence suites. Quick caps degrees at 3.
std::vector<CheckResult> run_acceptance(Budget budget,
                                        const std::function<void(const CheckResult&)>& on_result = {});

CheckResult check_hurwitz_oracles(Budget budget);
CheckResult check_vertex_multiplicities(Budget budget);
CheckResult check_descendant_three_way(Budget budget);
CheckResult check_surgery_refinement(Budget budget);
CheckResult check_operator_identities(Budget budget);
CheckResult check_splitting(Budget budget);
CheckResult check_cut_join(Budget budget);
CheckResult check_completion_routes(Budget budget);

}  // namespace tropgw

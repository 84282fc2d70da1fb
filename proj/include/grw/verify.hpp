#ifndef GRW_VERIFY_HPP
#define GRW_VERIFY_HPP

#include <string>
#include <vector>

#include "grw/codes.hpp"
#include "grw/distribution.hpp"

namespace grw {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

// Runs the full cross-check battery on a code: oracle equivalence of the two
// table pipelines, the counting and moment identities, hierarchy bounds and
// duality, agreement of the three weight definitions, the codeword relation
// and enumerator consistency. Checks that need the dual are skipped when
// k = n; definition-equivalence checks are skipped when m < n.
std::vector<CheckResult> verify_code(const LinearCode& c,
                                     std::uint64_t budget = kDefaultSubspaceBudget);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace grw

#endif

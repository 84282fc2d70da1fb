#include "grw/verify.hpp"

#include <algorithm>
#include <sstream>

namespace grw {

namespace {

std::string hierarchy_str(const std::vector<std::size_t>& h) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) os << ',';
    os << h[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

std::vector<CheckResult> verify_code(const LinearCode& c, std::uint64_t budget) {
  std::vector<CheckResult> out;
  auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({name, ok, false, detail});
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    out.push_back({name, true, true, why});
  };

  const std::size_t n = c.n(), k = c.k();
  const bool has_dual = k < n;

  const auto brute = brute_force_distribution(c, std::nullopt, budget);
  const auto btab = b_table_transversal(c, budget);

  // Same table through two independent pipelines.
  record("oracle_equivalence", a_from_b(btab) == brute);

  // B from the transversal walk vs. B recomputed from the brute-force table.
  record("counting_identity", btab == b_table_from_a(brute));

  const auto hier = grw_hierarchy(c, GrwMethod::Subspaces, budget);
  {
    bool ok = hier[0] >= 1 && hier.back() <= n;
    for (std::size_t r = 1; r < hier.size(); ++r) ok = ok && hier[r - 1] < hier[r];
    for (std::size_t r = 1; r <= k; ++r) ok = ok && hier[r - 1] <= n - k + r;
    record("hierarchy_bounds", ok, hierarchy_str(hier));
  }

  if (c.m_at_least_n()) {
    bool ok = true;
    for (std::size_t r = 1; r <= k; ++r) {
      const std::size_t w = hier[r - 1];
      ok = ok && generalized_rank_weight(c, r, GrwMethod::ClosedSpaces, budget) == w &&
           generalized_rank_weight(c, r, GrwMethod::MaxWeight, budget) == w;
    }
    record("grw_methods_agree", ok);
  } else {
    skip("grw_methods_agree", "m < n");
  }

  // Codeword counts vs. the r = 1 row.
  {
    const auto counts = codeword_weight_counts(c, budget);
    const Count qm1 = brute.q_pow_m() - 1;
    bool ok = counts[0] == 1;
    for (std::size_t w = 1; w <= n; ++w) ok = ok && counts[w] == qm1 * brute.rows[1][w];
    record("codeword_counts", ok);
  }

  record("classic_enumerator", classic_rank_enumerator_check(c, budget));

  {
    bool ok = true;
    for (std::size_t r = 0; r <= k; ++r)
      ok = ok && enumerator_from_btable(btab, r) == enumerator_from_distribution(brute, r);
    record("enumerator_sources", ok);
  }

  if (!has_dual) {
    skip("moment_identity", "k = n: the code has no dual");
    skip("hierarchy_duality", "k = n");
    skip("dual_b_table", "k = n");
    return out;
  }

  const auto dual = dual_code(c);
  const auto dual_brute = brute_force_distribution(dual, std::nullopt, budget);

  {
    bool ok = true;
    // Stated domain plus the structurally-zero dual rows above n - k.
    for (std::size_t t = 0; t + k <= n && ok; ++t) {
      for (std::size_t r = 0; r <= std::min(n, n - k + 2) && ok; ++r) {
        Count lhs = 0;
        for (std::size_t w = 0; w <= n; ++w) {
          const Count aw = r <= n - k ? dual_brute.rows[r][w] : Count(0);
          lhs += gauss_binom(n - w, t, Count(brute.q)) * aw;
        }
        ok = lhs == macwilliams_rhs(brute, t, r);
      }
    }
    record("moment_identity", ok);
  }

  {
    const auto dual_hier = grw_hierarchy(dual, GrwMethod::Subspaces, budget);
    std::vector<bool> excluded(n + 1, false);
    for (std::size_t s : dual_hier) excluded[n + 1 - s] = true;
    std::vector<std::size_t> expected;
    for (std::size_t w = 1; w <= n; ++w)
      if (!excluded[w]) expected.push_back(w);
    record("hierarchy_duality", expected == hier,
           hierarchy_str(hier) + " vs dual " + hierarchy_str(dual_hier));
  }

  record("dual_b_table", dual_b_table(c, budget) == b_table_transversal(dual, budget));

  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace grw

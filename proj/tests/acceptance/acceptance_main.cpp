// Acceptance suite: reproduces the reference computations and checks the
// library's structural identities over randomly generated codes. Prints one
// PASS/FAIL line per criterion; exits nonzero if any fail. All comparisons
// are exact integer equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grw/distribution.hpp"
#include "grw/io.hpp"
#include "grw/verify.hpp"

using namespace grw;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
  }
  if (!ok) ++g_failures;
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

FieldSpec f16() { return FieldSpec(2, 1, 4, std::nullopt, BasePoly{1, 1, 0, 0, 1}); }
FieldSpec f81() { return FieldSpec(3, 1, 4, std::nullopt, BasePoly{2, 0, 0, 2, 1}); }

LinearCode cyclic_3_1(const FieldSpec& fs) {
  return cyclic_code(fs, 3, {fs.parse("a^2+a"), fs.parse("a^2+a+1"), fs.parse("1")});
}

Vec<ExtField> power_points(const FieldSpec& fs, std::size_t n) {
  Vec<ExtField> pts;
  for (std::size_t j = 0; j < n; ++j) pts.push_back(fs.ext().pow(fs.ext().gen(), j));
  return pts;
}

LinearCode random_code(const FieldSpec& fs, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    Mat<ExtField> g(k, n, fs.ext().zero());
    for (auto& x : g.a) x = fs.ext().element_at(rng() % fs.ext().size_u64());
    if (rank(fs.ext(), g) == k) return LinearCode(fs, std::move(g));
  }
}

bool expect(bool cond, const char* what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

}  // namespace

int main() {
  criterion(1, "[3,1] cyclic code over F_16: hierarchy and distribution", 1.0,
            [](std::string& detail) {
              auto fs = f16();
              auto c = cyclic_3_1(fs);
              bool ok = expect(generalized_rank_weight(c, 1) == 2, "M_1 != 2", detail);
              auto brute = brute_force_distribution(c);
              const std::vector<Count> want = {0, 0, 1, 0};
              ok &= expect(brute.rows[1] == want, "brute r=1 row", detail);
              auto transversal = a_from_b(b_table_transversal(c));
              ok &= expect(transversal.rows[1] == want, "transversal r=1 row", detail);
              ok &= expect(transversal == brute, "pipelines disagree", detail);
              return ok;
            });

  criterion(2, "dual distribution of the [3,1] cyclic code by three methods", 1.0,
            [](std::string& detail) {
              auto fs = f16();
              auto c = cyclic_3_1(fs);
              const std::vector<Count> want_r1 = {0, 1, 4, 12};
              auto lemma = dual_distribution(c, DualDistMethod::Transversal);
              auto direct = dual_distribution(c, DualDistMethod::Direct);
              auto solved = dual_distribution(c, DualDistMethod::Solve);
              bool ok = expect(lemma.rows[1] == want_r1, "transversal r=1 row", detail);
              ok &= expect(direct.rows[1] == want_r1, "direct r=1 row", detail);
              ok &= expect(solved.rows[1] == want_r1, "solve r=1 row", detail);
              const std::vector<Count> want_r2 = {0, 0, 0, 1};
              ok &= expect(lemma.rows[2] == want_r2, "transversal r=2 row", detail);
              ok &= expect(direct.rows[2] == want_r2, "direct r=2 row", detail);
              auto a = brute_force_distribution(c);
              ok &= expect(macwilliams_rhs(a, 0, 1) == 17, "rhs(0,1) != 17", detail);
              ok &= expect(macwilliams_rhs(a, 1, 1) == 7, "rhs(1,1) != 7", detail);
              ok &= expect(macwilliams_rhs(a, 2, 1) == 1, "rhs(2,1) != 1", detail);
              return ok;
            });

  criterion(3, "enumerator of the [3,1] cyclic code", 1.0, [](std::string& detail) {
    auto fs = f16();
    auto c = cyclic_3_1(fs);
    auto from_b = enumerator(c, 1, EnumeratorSource::BTable);
    auto from_a = enumerator(c, 1, EnumeratorSource::Distribution);
    bool ok = expect(from_b.poly.str() == "X^2*Y", "W^1 != X^2*Y", detail);
    ok &= expect(from_a == from_b, "enumerator sources disagree", detail);
    auto b = b_table_transversal(c);
    ok &= expect(b.rows[0][1] == 1 && b.rows[1][1] == 1 && b.rows[2][1] == 0 && b.rows[3][1] == 0,
                 "B^1 values", detail);
    return ok;
  });

  criterion(4, "[4,2] MRD codes over F_81: Gabidulin and non-Gabidulin", 5.0,
            [](std::string& detail) {
              auto fs = f81();
              auto c1 = gabidulin_code(fs, 4, 2, power_points(fs, 4));
              Mat<ExtField> g2 = mat_from_rows(
                  fs.ext(), {{fs.parse("1"), fs.parse("0"), fs.parse("a"), fs.parse("a^2")},
                             {fs.parse("0"), fs.parse("1"), fs.parse("a^2"), fs.parse("2*a")}});
              LinearCode c2(fs, g2);
              auto closed = mrd_distribution(4, 2, 3, 4);
              bool ok = expect(closed.rows[1][3] == 40 && closed.rows[1][4] == 42,
                               "closed-form A^1 values", detail);
              auto b1 = brute_force_distribution(c1);
              auto b2 = brute_force_distribution(c2);
              ok &= expect(b1.rows[1][3] == 40 && b1.rows[1][4] == 42, "Gabidulin brute values",
                           detail);
              ok &= expect(b2.rows[1][3] == 40 && b2.rows[1][4] == 42,
                           "non-Gabidulin brute values", detail);
              ok &= expect(b1 == closed && b2 == closed, "brute tables != closed form", detail);
              return ok;
            });

  criterion(5, "[4,3] Gabidulin code over F_81: hierarchy, distribution, row sums", 60.0,
            [](std::string& detail) {
              auto fs = f81();
              auto c = gabidulin_code(fs, 4, 3, power_points(fs, 4));
              auto h = grw_hierarchy(c);
              bool ok = expect(h == std::vector<std::size_t>{2, 3, 4}, "hierarchy != (2,3,4)",
                               detail);
              auto brute = brute_force_distribution(c);
              ok &= expect(brute.rows[1][2] == 130 && brute.rows[1][3] == 2760 &&
                               brute.rows[1][4] == 3753,
                           "r=1 values", detail);
              ok &= expect(brute.rows[2][3] == 40 && brute.rows[2][4] == 6603, "r=2 values",
                           detail);
              ok &= expect(brute.rows[3][4] == 1, "r=3 value", detail);
              ok &= expect(brute == mrd_distribution(4, 3, 3, 4), "brute != closed form", detail);
              Count s1 = 0, s2 = 0;
              for (std::size_t w = 0; w <= 4; ++w) {
                s1 += brute.rows[1][w];
                s2 += brute.rows[2][w];
              }
              ok &= expect(s1 == 6643 && s2 == 6643, "row sums != 6643", detail);
              ok &= expect(gauss_binom(3, 1, 81) == 6643 && gauss_binom(3, 2, 81) == 6643,
                           "subspace counts", detail);
              return ok;
            });

  criterion(
      6, "identity battery over 60 random codes (q in {2,3}, 2 <= n = m <= 4)", 600.0,
      [](std::string& detail) {
        std::mt19937_64 rng(20260809);
        int checked = 0;
        for (std::int64_t p : {2, 3}) {
          for (int nm = 2; nm <= 4; ++nm) {
            FieldSpec fs(p, 1, nm, std::nullopt, std::nullopt, 1);
            const std::size_t n = static_cast<std::size_t>(nm);
            for (std::size_t k = 1; k < n; ++k) {
              for (int rep = 0; rep < 5; ++rep) {
                auto c = random_code(fs, n, k, rng);
                auto brute = brute_force_distribution(c);
                auto btab = b_table_transversal(c);
                auto dual = dual_code(c);
                auto dual_brute = brute_force_distribution(dual);

                // (a) moment identity on the stated domain
                for (std::size_t t = 0; t <= n - k; ++t) {
                  for (std::size_t r = 0; r <= n - k; ++r) {
                    Count lhs = 0;
                    for (std::size_t w = 0; w <= n; ++w)
                      lhs += gauss_binom(n - w, t, Count(fs.q())) * dual_brute.rows[r][w];
                    if (!expect(lhs == macwilliams_rhs(brute, t, r), "moment identity", detail))
                      return false;
                  }
                }
                // (b) counting identity
                if (!expect(btab == b_table_from_a(brute), "counting identity", detail))
                  return false;
                // (c) inversion pipeline equals brute force
                if (!expect(a_from_b(btab) == brute, "oracle equivalence", detail)) return false;
                // (d) three-way weight agreement (n = m throughout)
                auto h = grw_hierarchy(c);
                for (std::size_t r = 1; r <= k; ++r) {
                  bool agree =
                      generalized_rank_weight(c, r, GrwMethod::ClosedSpaces) == h[r - 1] &&
                      generalized_rank_weight(c, r, GrwMethod::MaxWeight) == h[r - 1];
                  if (!expect(agree, "weight definitions disagree", detail)) return false;
                }
                // (e) duality partition
                {
                  auto dh = grw_hierarchy(dual);
                  std::set<std::size_t> rest;
                  for (std::size_t w = 1; w <= n; ++w) rest.insert(w);
                  for (auto s : dh) rest.erase(n + 1 - s);
                  std::set<std::size_t> mine(h.begin(), h.end());
                  if (!expect(rest == mine, "duality partition", detail)) return false;
                }
                // (f) monotone and Singleton-bounded
                for (std::size_t r = 1; r <= k; ++r) {
                  bool bounds = h[r - 1] <= n - k + r && (r == 1 ? h[0] >= 1 : h[r - 2] < h[r - 1]);
                  if (!expect(bounds, "hierarchy bounds", detail)) return false;
                }
                // (g) codeword counts vs the r = 1 row
                {
                  auto counts = codeword_weight_counts(c);
                  const Count qm1 = brute.q_pow_m() - 1;
                  bool rel = counts[0] == 1;
                  for (std::size_t w = 1; w <= n; ++w)
                    rel = rel && counts[w] == qm1 * brute.rows[1][w];
                  if (!expect(rel, "codeword count relation", detail)) return false;
                }
                // (h) classic enumerator relation
                if (!expect(classic_rank_enumerator_check(c), "classic enumerator", detail))
                  return false;
                ++checked;
              }
            }
          }
        }
        return expect(checked >= 50, "fewer than 50 codes checked", detail);
      });

  criterion(7, "q-combinatorics: inversion, identities, subspace counts", 30.0,
            [](std::string& detail) {
              std::mt19937_64 rng(97);
              bool ok = true;
              for (std::uint64_t Q : {2ull, 3ull, 16ull, 81ull}) {
                for (std::size_t len = 1; len <= 12 && ok; ++len) {
                  std::vector<Count> a(len);
                  for (auto& x : a) x = Count(rng() % 2000) - 700;
                  ok &= expect(gauss_inversion(gauss_forward(a, Count(Q)), Count(Q)) == a,
                               "inversion round trip", detail);
                }
                for (std::size_t x = 0; x <= 7 && ok; ++x) {
                  for (std::size_t b = 0; b <= x; ++b) {
                    ok &= expect(gauss_binom(x, b, Q) == gauss_binom(x, x - b, Q), "reflection",
                                 detail);
                    for (std::size_t cc = 0; cc <= b; ++cc)
                      ok &= expect(gauss_binom(x, b, Q) * gauss_binom(b, cc, Q) ==
                                       gauss_binom(x, cc, Q) * gauss_binom(x - cc, x - b, Q),
                                   "product rule", detail);
                  }
                }
                for (int i = 0; i < 25 && ok; ++i)
                  ok &= expect(vandermonde_check(rng() % 6, rng() % 6, rng() % 7, Count(Q)),
                               "q-Vandermonde", detail);
              }
              // subspace counts for n <= 5 over q in {2, 3, 4}
              std::vector<FieldSpec> towers = {
                  FieldSpec(2, 1, 2, std::nullopt, std::nullopt, 1),
                  FieldSpec(3, 1, 2, std::nullopt, std::nullopt, 1),
                  FieldSpec(2, 2, 2, std::vector<std::int64_t>{1, 1, 1}, std::nullopt, 1)};
              for (const auto& fs : towers) {
                for (std::size_t n = 0; n <= 5 && ok; ++n) {
                  for (std::size_t r = 0; r <= n; ++r) {
                    Count seen = 0;
                    for_each_subspace(fs.base(), n, r, [&](const Subspace<BaseField>&) {
                      ++seen;
                      return true;
                    });
                    ok &= expect(seen == gauss_binom(n, r, fs.q()), "subspace count", detail);
                  }
                }
              }
              return ok;
            });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}

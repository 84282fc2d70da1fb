#include "doctest.h"

#include <random>
#include <set>

#include "grw/codes.hpp"
#include "grw/qcombin.hpp"
#include "support.hpp"

using namespace grw;

namespace {

// The [3,1] cyclic code over F_16 generated by (x+1)(x+a^2+a).
LinearCode cyclic_3_1(const FieldSpec& fs) {
  return cyclic_code(fs, 3, {fs.parse("a^2+a"), fs.parse("a^2+a+1"), fs.parse("1")});
}

Vec<ExtField> power_points(const FieldSpec& fs, std::size_t n) {
  Vec<ExtField> pts;
  for (std::size_t j = 0; j < n; ++j) pts.push_back(fs.ext().pow(fs.ext().gen(), j));
  return pts;
}

// Rank support by spanning every vector of D, not just a basis. Tiny inputs
// only.
RankSupport support_by_full_span(const FieldSpec& fs, const Mat<ExtField>& basis) {
  const ExtField& ext = fs.ext();
  const std::uint64_t qm = ext.size_u64();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.rows; ++i) total *= qm;
  Mat<BaseField> stacked(static_cast<std::size_t>(total) * fs.m(), basis.cols, 0);
  std::size_t out = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec<ExtField> word(basis.cols, ext.zero());
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < basis.rows; ++i) {
      auto coefficient = ext.element_at(v % qm);
      v /= qm;
      for (std::size_t j = 0; j < basis.cols; ++j)
        word[j] = ext.add(word[j], ext.mul(coefficient, basis.at(i, j)));
    }
    auto xm = expansion_matrix(fs, word);
    for (std::size_t i = 0; i < xm.rows; ++i)
      for (std::size_t j = 0; j < xm.cols; ++j) stacked.at(out + i, j) = xm.at(i, j);
    out += xm.rows;
  }
  return span(fs.base(), std::move(stacked));
}

}  // namespace

TEST_CASE("expansion matrix layout") {
  auto fs = test::f16();
  auto zero_word = Vec<ExtField>(3, fs.ext().zero());
  CHECK(expansion_matrix(fs, zero_word) == zero_mat(fs.base(), 4, 3));

  // all coordinates from F_q live in the first coordinate row
  Vec<ExtField> base_word = {fs.parse("1"), fs.parse("0"), fs.parse("1")};
  auto xm = expansion_matrix(fs, base_word);
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(xm.at(i, j) == 0);
  CHECK(xm.at(0, 0) == 1);
  CHECK(xm.at(0, 2) == 1);

  Vec<ExtField> word = {fs.parse("a^2+a"), fs.parse("a^2+a+1"), fs.parse("1")};
  CHECK(rank(fs.base(), expansion_matrix(fs, word)) == 2);
}

TEST_CASE("rank weight") {
  auto fs = test::f16();
  CHECK(rank_weight(fs, Vec<ExtField>(3, fs.ext().zero())) == 0);
  Vec<ExtField> word = {fs.parse("a^2+a"), fs.parse("a^2+a+1"), fs.parse("1")};
  CHECK(rank_weight(fs, word) == 2);
  // scaling invariance
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    auto lam = fs.ext().element_at(1 + rng() % (fs.ext().size_u64() - 1));
    Vec<ExtField> scaled;
    for (const auto& c : word) scaled.push_back(fs.ext().mul(lam, c));
    CHECK(rank_weight(fs, scaled) == 2);
  }
}

TEST_CASE("rank support of a subspace: basis independence and full-span oracle") {
  auto fs = test::f16();
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    auto basis = test::random_ext_matrix(fs.ext(), 2, 3, rng);
    if (rank(fs.ext(), basis) != 2) continue;
    auto sup = subspace_rank_support(fs, basis);
    CHECK(sup == support_by_full_span(fs, basis));
    // change of basis
    auto t = test::random_invertible(fs.ext(), 2, rng);
    CHECK(subspace_rank_support(fs, mat_mul(fs.ext(), t, basis)) == sup);
  }
  // single-vector subspace reduces to the word's rank support
  Vec<ExtField> word = {fs.parse("a^2+a"), fs.parse("a^2+a+1"), fs.parse("1")};
  CHECK(subspace_rank_support(fs, mat_from_rows(fs.ext(), {word})) == rank_support(fs, word));
}

TEST_CASE("cyclic constructor reproduces the [3,1] code over F_16") {
  auto fs = test::f16();
  auto c = cyclic_3_1(fs);
  CHECK(c.n() == 3);
  CHECK(c.k() == 1);
  Vec<ExtField> row = {fs.parse("a^2+a"), fs.parse("a^2+a+1"), fs.parse("1")};
  CHECK(contains(fs.ext(), c.row_space(), row));

  // g = 1 gives the full space
  auto full = cyclic_code(fs, 3, {fs.parse("1")});
  CHECK(full.k() == 3);

  // g = x^n - 1 is the zero code and is rejected
  std::vector<ExtElt> xn1 = {fs.parse("1"), fs.parse("0"), fs.parse("0"), fs.parse("1")};
  CHECK_THROWS_AS((void)cyclic_code(fs, 3, xn1), InvalidGenerator);

  // x + a does not divide x^3 - 1
  CHECK_THROWS_AS((void)cyclic_code(fs, 3, {fs.parse("a"), fs.parse("1")}), InvalidGenerator);

  // non-monic generator
  CHECK_THROWS_AS((void)cyclic_code(fs, 3, {fs.parse("1"), fs.parse("a")}), InvalidGenerator);
}

TEST_CASE("dual code") {
  auto fs = test::f16();
  auto c = cyclic_3_1(fs);
  auto d = dual_code(c);
  CHECK(d.n() == 3);
  CHECK(d.k() == 2);
  CHECK(dual_code(d) == c);

  // G H^T = 0
  auto prod = mat_mul(fs.ext(), c.generator(), transpose(d.generator()));
  for (const auto& x : prod.a) CHECK(fs.ext().is_zero(x));

  // the dual is cyclic, generated by the monic reciprocal x + a^2+a of the
  // complementary factor; it contains (1, a^2+a+1, 0) and the all-ones word.
  CHECK(d == cyclic_code(fs, 3, {fs.parse("a^2+a"), fs.parse("1")}));
  CHECK(contains(fs.ext(), d.row_space(), {fs.parse("1"), fs.parse("a^2+a+1"), fs.parse("0")}));
  CHECK(contains(fs.ext(), d.row_space(), {fs.parse("1"), fs.parse("1"), fs.parse("1")}));

  CHECK_THROWS_AS((void)dual_code(cyclic_code(fs, 3, {fs.parse("1")})), DimensionError);
}

TEST_CASE("C(U) for the [3,1] cyclic code") {
  auto fs = test::f16();
  auto c = cyclic_3_1(fs);
  const BaseField& f2 = fs.base();

  CHECK(code_sub_u(c, zero_subspace(f2, 3)) == c.row_space());

  auto ones = span(f2, mat_from_rows(f2, {{1, 1, 1}}));
  std::size_t dim1_hits = 0;
  for_each_subspace(f2, 3, 1, [&](const Subspace<BaseField>& u) {
    auto cu = code_sub_u(c, u);
    if (u == ones) {
      CHECK(cu.dim() == 1);
      ++dim1_hits;
    } else {
      CHECK(cu.dim() == 0);
    }
    return true;
  });
  CHECK(dim1_hits == 1);
  for (std::size_t t : {std::size_t(2), std::size_t(3)}) {
    for_each_subspace(f2, 3, t, [&](const Subspace<BaseField>& u) {
      CHECK(code_sub_u(c, u).dim() == 0);
      return true;
    });
  }
}

TEST_CASE("dim C(U) pinned by the two-sided bounds") {
  auto fs = test::f16();
  auto c = cyclic_3_1(fs);
  CHECK(dim_cu_bounds(c, 0) == std::size_t(1));
  CHECK(dim_cu_bounds(c, 1) == std::nullopt);
  CHECK(dim_cu_bounds(c, 2) == std::size_t(0));
  CHECK(dim_cu_bounds(c, 3) == std::size_t(0));
  CHECK_THROWS_AS((void)dim_cu_bounds(c, 4), DimensionError);

  auto f81 = test::f81();
  auto mrd = gabidulin_code(f81, 4, 2, power_points(f81, 4));
  CHECK(generalized_rank_weight(dual_code(mrd), 1) == 3);  // k + 1 for an MRD dual
  for (std::size_t t = 0; t <= 2; ++t) CHECK(dim_cu_bounds(mrd, t) == 2 - t);

  // full-space code: every U is pinned
  auto full = cyclic_code(fs, 3, {fs.parse("1")});
  for (std::size_t t = 0; t <= 3; ++t) CHECK(dim_cu_bounds(full, t) == 3 - t);
}

TEST_CASE("generalized weights of the [3,1] cyclic code and its dual") {
  auto fs = test::f16();
  auto c = cyclic_3_1(fs);
  CHECK(generalized_rank_weight(c, 1) == 2);
  auto d = dual_code(c);
  CHECK(generalized_rank_weight(d, 1) == 1);
  CHECK(generalized_rank_weight(d, 2) == 3);
  CHECK_FALSE(is_r_mrd(c, 1));

  CHECK_THROWS_AS((void)generalized_rank_weight(c, 0), DimensionError);
  CHECK_THROWS_AS((void)generalized_rank_weight(c, 2), DimensionError);
}

TEST_CASE("the three definitions agree when m >= n") {
  auto fs = test::f16();
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 6; ++trial) {
    auto c = test::random_code(fs, 3, 1 + rng() % 3, rng);
    for (std::size_t r = 1; r <= c.k(); ++r) {
      auto w = generalized_rank_weight(c, r, GrwMethod::Subspaces);
      CHECK(generalized_rank_weight(c, r, GrwMethod::ClosedSpaces) == w);
      CHECK(generalized_rank_weight(c, r, GrwMethod::MaxWeight) == w);
    }
  }
}

TEST_CASE("methods that need m >= n refuse short extensions") {
  // m = 2 < n = 3
  FieldSpec fs(2, 1, 2, std::nullopt, std::vector<BaseElt>{1, 1, 1});
  std::mt19937_64 rng(34);
  auto c = test::random_code(fs, 3, 1, rng);
  CHECK_FALSE(c.m_at_least_n());
  CHECK_NOTHROW((void)generalized_rank_weight(c, 1, GrwMethod::Subspaces));
  CHECK_THROWS_AS((void)generalized_rank_weight(c, 1, GrwMethod::ClosedSpaces), UnsupportedAssumption);
  CHECK_THROWS_AS((void)generalized_rank_weight(c, 1, GrwMethod::MaxWeight), UnsupportedAssumption);
}

TEST_CASE("hierarchy endpoints: min nonzero and max codeword weight") {
  auto fs = test::f16();
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 4; ++trial) {
    auto c = test::random_code(fs, 3, 2, rng);
    std::size_t minw = c.n() + 1, maxw = 0;
    const ExtField& ext = fs.ext();
    const std::uint64_t qm = ext.size_u64();
    for (std::uint64_t i = 0; i < qm * qm; ++i) {
      Vec<ExtField> msg = {ext.element_at(i % qm), ext.element_at(i / qm)};
      Vec<ExtField> word(c.n(), ext.zero());
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t j = 0; j < c.n(); ++j)
          word[j] = ext.add(word[j], ext.mul(msg[r], c.generator().at(r, j)));
      auto w = rank_weight(fs, word);
      maxw = std::max(maxw, w);
      if (w != 0) minw = std::min(minw, w);
    }
    CHECK(generalized_rank_weight(c, 1) == minw);
    CHECK(generalized_rank_weight(c, c.k()) == maxw);
  }
}

TEST_CASE("hierarchy bounds and Wei-type duality on random codes") {
  auto fs = test::f81();
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t n = 3 + rng() % 2;
    std::size_t k = 1 + rng() % (n - 1);
    auto c = test::random_code(fs, n, k, rng);
    auto h = grw_hierarchy(c);
    CHECK(h.size() == k);
    CHECK(h[0] >= 1);
    for (std::size_t r = 1; r < h.size(); ++r) CHECK(h[r - 1] < h[r]);
    for (std::size_t r = 1; r <= k; ++r) CHECK(h[r - 1] <= n - k + r);

    auto dh = grw_hierarchy(dual_code(c));
    std::set<std::size_t> all, mine(h.begin(), h.end());
    for (std::size_t w = 1; w <= n; ++w) all.insert(w);
    for (auto s : dh) all.erase(n + 1 - s);
    CHECK(all == mine);
  }
}

TEST_CASE("Gabidulin constructor") {
  auto fs = test::f81();
  auto pts = power_points(fs, 4);
  auto rows = gabidulin_generator_rows(fs, 4, 3, pts);
  const ExtField& f = fs.ext();
  auto a = f.gen();
  CHECK(rows.at(1, 0) == f.one());
  CHECK(rows.at(1, 1) == f.pow(a, 3));
  CHECK(rows.at(1, 2) == f.pow(a, 6));
  CHECK(rows.at(1, 3) == f.pow(a, 9));
  CHECK(rows.at(2, 1) == f.pow(a, 9));
  CHECK(rows.at(2, 2) == f.pow(a, 18));
  CHECK(rows.at(2, 3) == f.pow(a, 27));

  auto k1 = gabidulin_generator_rows(fs, 4, 1, pts);
  for (std::size_t j = 0; j < 4; ++j) CHECK(k1.at(0, j) == pts[j]);

  CHECK(is_r_mrd(gabidulin_code(fs, 4, 2, pts), 1));
  // the bound is tight at r = k whenever the top weight reaches n
  auto c43 = gabidulin_code(fs, 4, 3, pts);
  CHECK(generalized_rank_weight(c43, 3) == 4);
  CHECK(is_r_mrd(c43, 3));

  // dependent points: 1, a, a^2, a+1
  Vec<ExtField> dep = {fs.parse("1"), fs.parse("a"), fs.parse("a^2"), fs.parse("a+1")};
  CHECK_THROWS_AS((void)gabidulin_code(fs, 4, 2, dep), InvalidPoints);
  // n > m is rejected
  CHECK_THROWS_AS((void)gabidulin_code(fs, 5, 2, power_points(fs, 5)), DimensionError);
}

TEST_CASE("relation between C(U) and the dual on random subspaces") {
  auto fs = test::f16();
  std::mt19937_64 rng(37);
  auto c = test::random_code(fs, 3, 2, rng);
  auto d = dual_code(c);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = span(fs.base(), test::random_base_matrix(fs.base(), 2, 3, rng));
    auto uperp = orthogonal_complement(fs.base(), u);
    CHECK(code_sub_u(c, u).dim() ==
          c.k() - u.dim() + code_sub_u(d, uperp).dim());
  }
}

TEST_CASE("rank weight is independent of the distinguished basis") {
  auto fs = test::f81();
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 15; ++trial) {
    Vec<ExtField> word;
    for (int j = 0; j < 4; ++j) word.push_back(test::random_elt(fs.ext(), rng));
    auto xm = expansion_matrix(fs, word);
    // coordinates with respect to a random alternative basis B' = T B:
    // columns transform through T^{-1}.
    auto t = test::random_invertible(fs.base(), 4, rng);
    auto alt = mat_mul(fs.base(), test::inverse_matrix(fs.base(), t), xm);
    CHECK(rank(fs.base(), alt) == rank_weight(fs, word));
  }
}

TEST_CASE("generator rows must be independent") {
  auto fs = test::f16();
  Mat<ExtField> g(2, 3, fs.ext().zero());
  for (std::size_t j = 0; j < 3; ++j) {
    g.at(0, j) = fs.parse("a");
    g.at(1, j) = fs.parse("a^2");
  }
  CHECK_THROWS_AS(LinearCode(fs, g), InvalidInput);
}

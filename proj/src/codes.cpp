#include "grw/codes.hpp"

#include <limits>

#include "grw/qcombin.hpp"

namespace grw {

namespace {

void check_budget(const Count& planned, std::uint64_t budget, const char* what) {
  if (planned > Count(budget))
    throw BudgetExceeded(std::string(what) + ": planned enumeration of " + planned.str() +
                         " subspaces exceeds the budget of " + std::to_string(budget));
}

}  // namespace

LinearCode::LinearCode(FieldSpec fs, Mat<ExtField> generator) : fs_(std::move(fs)) {
  n_ = generator.cols;
  k_ = generator.rows;
  if (k_ < 1 || k_ > n_) throw DimensionError("code dimension must satisfy 1 <= k <= n");
  auto pivots = rref_in_place(fs_.ext(), generator);
  if (pivots.size() != k_) throw InvalidInput("generator matrix rows are linearly dependent");
  gen_ = std::move(generator);
}

Subspace<ExtField> LinearCode::row_space() const {
  Subspace<ExtField> s;
  s.ambient = n_;
  s.basis = gen_;
  return s;
}

Mat<BaseField> expansion_matrix(const FieldSpec& fs, const Vec<ExtField>& word) {
  const std::size_t m = static_cast<std::size_t>(fs.m());
  Mat<BaseField> x(m, word.size(), 0);
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j].c.size() != m) throw DimensionError("word coordinate from a different field");
    auto coords = fs.ext().expand(word[j]);
    for (std::size_t i = 0; i < m; ++i) x.at(i, j) = coords[i];
  }
  return x;
}

RankSupport rank_support(const FieldSpec& fs, const Vec<ExtField>& word) {
  return span(fs.base(), expansion_matrix(fs, word));
}

std::size_t rank_weight(const FieldSpec& fs, const Vec<ExtField>& word) {
  return rank(fs.base(), expansion_matrix(fs, word));
}

RankSupport subspace_rank_support(const FieldSpec& fs, const Mat<ExtField>& basis_rows) {
  const std::size_t m = static_cast<std::size_t>(fs.m());
  Mat<BaseField> stacked(basis_rows.rows * m, basis_rows.cols, 0);
  for (std::size_t r = 0; r < basis_rows.rows; ++r)
    for (std::size_t j = 0; j < basis_rows.cols; ++j) {
      const auto& coords = basis_rows.at(r, j).c;
      for (std::size_t i = 0; i < m; ++i) stacked.at(r * m + i, j) = coords[i];
    }
  return span(fs.base(), std::move(stacked));
}

LinearCode dual_code(const LinearCode& c) {
  if (c.k() == c.n()) throw DimensionError("the dual of a full-space code has dimension 0");
  auto ker = kernel(c.field().ext(), c.generator());
  return LinearCode(c.field(), ker.basis);
}

Subspace<ExtField> code_sub_u(const LinearCode& c, const Subspace<BaseField>& u) {
  if (u.ambient != c.n()) throw DimensionError("subspace ambient dimension does not match code length");
  const ExtField& ext = c.field().ext();
  auto ul_perp = orthogonal_complement(ext, extend_scalars(ext, u));
  return intersect_subspaces(ext, c.row_space(), ul_perp);
}

std::optional<std::size_t> dim_cu_bounds(const LinearCode& c, std::size_t t, std::uint64_t budget) {
  if (t > c.n()) throw DimensionError("t must satisfy 0 <= t <= n");
  const std::size_t m1 = generalized_rank_weight(c, 1, GrwMethod::Subspaces, budget);
  // The dual of a full-space code is zero; its first weight is a min over the
  // empty set, so the second clause always applies.
  const std::size_t m1_dual = c.k() == c.n()
                                  ? std::numeric_limits<std::size_t>::max()
                                  : generalized_rank_weight(dual_code(c), 1, GrwMethod::Subspaces, budget);
  if (t > c.n() - m1) return 0;
  if (t < m1_dual) return c.k() - t;
  return std::nullopt;
}

namespace {

std::size_t grw_subspaces(const LinearCode& c, std::size_t r, std::uint64_t budget) {
  const ExtField& ext = c.field().ext();
  check_budget(gauss_binom(c.k(), r, ext.size()), budget, "grw");
  std::size_t best = c.n() + 1;
  for_each_subspace(ext, c.k(), r, [&](const Subspace<ExtField>& s) {
    auto basis = mat_mul(ext, s.basis, c.generator());
    std::size_t w = subspace_rank_support(c.field(), basis).dim();
    if (w < best) best = w;
    return best > r;  // wt_R(D) >= dim D, so the minimum possible value is r
  });
  return best;
}

std::size_t grw_closed_spaces(const LinearCode& c, std::size_t r, std::uint64_t budget) {
  const FieldSpec& fs = c.field();
  Count planned = 0;
  for (std::size_t t = 0; t <= c.n(); ++t) planned += gauss_binom(c.n(), t, fs.q());
  check_budget(planned, budget, "grw");
  auto cspan = c.row_space();
  for (std::size_t t = 0; t <= c.n(); ++t) {
    bool found = false;
    for_each_subspace(fs.base(), c.n(), t, [&](const Subspace<BaseField>& u) {
      auto ul = extend_scalars(fs.ext(), u);
      if (intersect_subspaces(fs.ext(), cspan, ul).dim() >= r) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return t;
  }
  throw Error("no Galois-closed space contains an r-dimensional subcode (internal error)");
}

std::size_t grw_maxwt(const LinearCode& c, std::size_t r, std::uint64_t budget) {
  const ExtField& ext = c.field().ext();
  check_budget(gauss_binom(c.k(), r, ext.size()) * gauss_binom(r, 1, ext.size()), budget, "grw");
  std::size_t best = c.n() + 1;
  for_each_subspace(ext, c.k(), r, [&](const Subspace<ExtField>& s) {
    auto basis = mat_mul(ext, s.basis, c.generator());
    std::size_t maxw = 0;
    // One representative per 1-dimensional subspace of D; proportional words
    // share their rank weight.
    for_each_subspace(ext, r, 1, [&](const Subspace<ExtField>& line) {
      auto word = mat_mul(ext, line.basis, basis);
      maxw = std::max(maxw, rank_weight(c.field(), word.row(0)));
      return true;
    });
    if (maxw < best) best = maxw;
    return best > r;
  });
  return best;
}

}  // namespace

std::size_t generalized_rank_weight(const LinearCode& c, std::size_t r, GrwMethod method, std::uint64_t budget) {
  if (r < 1 || r > c.k()) throw DimensionError("generalized weight index r must satisfy 1 <= r <= k");
  if (method != GrwMethod::Subspaces && !c.m_at_least_n())
    throw UnsupportedAssumption("this definition of the generalized rank weight requires m >= n");
  switch (method) {
    case GrwMethod::Subspaces:
      return grw_subspaces(c, r, budget);
    case GrwMethod::ClosedSpaces:
      return grw_closed_spaces(c, r, budget);
    case GrwMethod::MaxWeight:
      return grw_maxwt(c, r, budget);
  }
  throw Error("unreachable");
}

std::vector<std::size_t> grw_hierarchy(const LinearCode& c, GrwMethod method, std::uint64_t budget) {
  std::vector<std::size_t> h;
  h.reserve(c.k());
  for (std::size_t r = 1; r <= c.k(); ++r) h.push_back(generalized_rank_weight(c, r, method, budget));
  return h;
}

bool is_r_mrd(const LinearCode& c, std::size_t r, GrwMethod method, std::uint64_t budget) {
  return generalized_rank_weight(c, r, method, budget) == c.n() - c.k() + r;
}

Mat<ExtField> gabidulin_generator_rows(const FieldSpec& fs, std::size_t n, std::size_t k,
                                       const Vec<ExtField>& points) {
  if (points.size() != n) throw DimensionError("need exactly n evaluation points");
  if (k < 1 || k > n || n > static_cast<std::size_t>(fs.m()))
    throw DimensionError("Gabidulin parameters must satisfy 1 <= k <= n <= m");
  if (rank(fs.base(), expansion_matrix(fs, points)) != n)
    throw InvalidPoints("evaluation points are linearly dependent over F_q");
  Mat<ExtField> g(k, n, fs.ext().zero());
  Vec<ExtField> row = points;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = row[j];
    if (i + 1 < k)
      for (auto& x : row) x = fs.ext().frobenius(x);
  }
  return g;
}

LinearCode gabidulin_code(const FieldSpec& fs, std::size_t n, std::size_t k,
                          const Vec<ExtField>& points) {
  return LinearCode(fs, gabidulin_generator_rows(fs, n, k, points));
}

Mat<ExtField> cyclic_generator_rows(const FieldSpec& fs, std::size_t n,
                                    const std::vector<ExtElt>& g) {
  const ExtField& ext = fs.ext();
  std::vector<ExtElt> gen = g;
  int deg = poly_deg(ext, gen);
  if (deg < 0) throw InvalidGenerator("generator polynomial is zero");
  gen.resize(static_cast<std::size_t>(deg) + 1);
  if (!(gen.back() == ext.one())) throw InvalidGenerator("generator polynomial must be monic");
  if (static_cast<std::size_t>(deg) >= n)
    throw InvalidGenerator("generator polynomial must have degree < n for a nonzero code");
  // x^n - 1
  std::vector<ExtElt> xn1(n + 1, ext.zero());
  xn1[0] = ext.neg(ext.one());
  xn1[n] = ext.one();
  if (!poly_is_zero(ext, poly_mod(ext, xn1, gen)))
    throw InvalidGenerator("generator polynomial does not divide x^n - 1");
  const std::size_t k = n - static_cast<std::size_t>(deg);
  Mat<ExtField> rows(k, n, ext.zero());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(deg); ++j) rows.at(i, i + j) = gen[j];
  return rows;
}

LinearCode cyclic_code(const FieldSpec& fs, std::size_t n, const std::vector<ExtElt>& g) {
  return LinearCode(fs, cyclic_generator_rows(fs, n, g));
}

}  // namespace grw

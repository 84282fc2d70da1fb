#include "grw/distribution.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace grw {

using Rational = boost::multiprecision::cpp_rational;

namespace {

Count count_pow_u(Count base, std::size_t exp) {
  Count r = 1;
  while (exp != 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

void check_budget(const Count& planned, std::uint64_t budget, const char* what) {
  if (planned > Count(budget))
    throw BudgetExceeded(std::string(what) + ": planned enumeration of " + planned.str() +
                         " subspaces exceeds the budget of " + std::to_string(budget));
}

Count grassmannian_size(std::size_t n, const Count& q) {
  Count total = 0;
  for (std::size_t t = 0; t <= n; ++t) total += gauss_binom(n, t, q);
  return total;
}

}  // namespace

Count DistributionTable::q_pow_m() const { return count_pow_u(Count(q), static_cast<std::size_t>(m)); }

Count BTable::q_pow_m() const { return count_pow_u(Count(q), static_cast<std::size_t>(m)); }

void validate_distribution(const DistributionTable& a) {
  if (a.rows.size() != a.k + 1) throw InconsistentBTable("distribution table has wrong row count");
  for (const auto& row : a.rows)
    if (row.size() != a.n + 1) throw InconsistentBTable("distribution table has wrong column count");
  if (a.rows[0][0] != 1) throw InconsistentBTable("A^0_0 must be 1");
  for (std::size_t w = 1; w <= a.n; ++w)
    if (a.rows[0][w] != 0) throw InconsistentBTable("A^0_w must be 0 for w > 0");
  const Count qm = a.q_pow_m();
  for (std::size_t r = 0; r <= a.k; ++r) {
    Count sum = 0;
    for (std::size_t w = 0; w <= a.n; ++w) {
      const Count& v = a.rows[r][w];
      if (v < 0) throw InconsistentBTable("negative distribution entry");
      if (w < r && v != 0) throw InconsistentBTable("A^r_w must be 0 for w < r");
      sum += v;
    }
    if (sum != gauss_binom(a.k, r, qm))
      throw InconsistentBTable("row sum does not match the subspace count of the message space");
  }
}

DistributionTable brute_force_distribution(const LinearCode& c, std::optional<std::size_t> r_max,
                                           std::uint64_t budget) {
  const std::size_t rmax = r_max.value_or(c.k());
  if (rmax > c.k()) throw DimensionError("r_max exceeds the code dimension");
  const ExtField& ext = c.field().ext();
  const Count qm = ext.size();

  Count planned = 0;
  for (std::size_t r = 0; r <= rmax; ++r) planned += gauss_binom(c.k(), r, qm);
  check_budget(planned, budget, "brute_force_distribution");

  DistributionTable table;
  table.n = c.n();
  table.k = c.k();
  table.q = c.field().q();
  table.m = c.field().m();
  table.rows.assign(c.k() + 1, std::vector<Count>(c.n() + 1, Count(0)));

  for (std::size_t r = 0; r <= rmax; ++r) {
    for_each_subspace(ext, c.k(), r, [&](const Subspace<ExtField>& s) {
      auto basis = mat_mul(ext, s.basis, c.generator());
      std::size_t w = subspace_rank_support(c.field(), basis).dim();
      table.rows[r][w] += 1;
      return true;
    });
  }
  return table;
}

std::vector<Count> codeword_weight_counts(const LinearCode& c, std::uint64_t budget) {
  const ExtField& ext = c.field().ext();
  Count total = 1;
  for (std::size_t i = 0; i < c.k(); ++i) total *= ext.size();
  check_budget(total, budget, "codeword_weight_counts");

  std::vector<Count> counts(c.n() + 1, Count(0));
  const std::uint64_t qm = ext.size_u64();
  std::vector<std::uint64_t> digits(c.k(), 0);
  Vec<ExtField> message(c.k(), ext.zero());
  while (true) {
    Vec<ExtField> word(c.n(), ext.zero());
    for (std::size_t i = 0; i < c.k(); ++i) {
      if (ext.is_zero(message[i])) continue;
      for (std::size_t j = 0; j < c.n(); ++j)
        word[j] = ext.add(word[j], ext.mul(message[i], c.generator().at(i, j)));
    }
    counts[rank_weight(c.field(), word)] += 1;
    std::size_t pos = 0;
    while (pos < c.k()) {
      if (++digits[pos] == qm) {
        digits[pos] = 0;
        message[pos] = ext.zero();
        ++pos;
      } else {
        message[pos] = ext.element_at(digits[pos]);
        break;
      }
    }
    if (pos == c.k()) break;
  }
  return counts;
}

BTable b_table_transversal(const LinearCode& c, std::uint64_t budget) {
  const FieldSpec& fs = c.field();
  check_budget(grassmannian_size(c.n(), Count(fs.q())), budget, "b_table_transversal");

  BTable table;
  table.n = c.n();
  table.k = c.k();
  table.q = fs.q();
  table.m = fs.m();
  table.rows.assign(c.n() + 1, std::vector<Count>(c.k() + 1, Count(0)));
  const Count qm = fs.q_pow_m();

  for (std::size_t t = 0; t <= c.n(); ++t) {
    for_each_subspace(fs.base(), c.n(), t, [&](const Subspace<BaseField>& u) {
      const std::size_t d = code_sub_u(c, u).dim();
      for (std::size_t r = 0; r <= c.k(); ++r) table.rows[t][r] += gauss_binom(d, r, qm);
      return true;
    });
  }
  return table;
}

Count b_from_a(const DistributionTable& a, std::size_t t, std::size_t r) {
  if (t > a.n || r >= a.rows.size()) throw DimensionError("b_from_a index out of range");
  Count sum = 0;
  for (std::size_t w = 0; w <= a.n; ++w) sum += gauss_binom(a.n - w, t, Count(a.q)) * a.rows[r][w];
  return sum;
}

BTable b_table_from_a(const DistributionTable& a) {
  BTable b;
  b.n = a.n;
  b.k = a.k;
  b.q = a.q;
  b.m = a.m;
  b.rows.assign(a.n + 1, std::vector<Count>(a.k + 1, Count(0)));
  for (std::size_t t = 0; t <= a.n; ++t)
    for (std::size_t r = 0; r <= a.k; ++r) b.rows[t][r] = b_from_a(a, t, r);
  return b;
}

DistributionTable a_from_b(const BTable& b) {
  DistributionTable a;
  a.n = b.n;
  a.k = b.k;
  a.q = b.q;
  a.m = b.m;
  a.rows.assign(b.k + 1, std::vector<Count>(b.n + 1, Count(0)));
  const Count q(b.q);
  for (std::size_t r = 0; r <= b.k; ++r) {
    for (std::size_t w = 0; w <= b.n; ++w) {
      Count sum = 0;
      for (std::size_t t = b.n - w; t <= b.n; ++t) {
        const std::size_t d = t + w - b.n;
        Count term = count_pow_u(q, d * (d - (d ? 1 : 0)) / 2) * gauss_binom(t, b.n - w, q) *
                     b.rows[t][r];
        if (d % 2 == 0)
          sum += term;
        else
          sum -= term;
      }
      if (sum < 0)
        throw InconsistentBTable("Gaussian inversion produced a negative count (corrupted B-table)");
      a.rows[r][w] = sum;
    }
  }
  validate_distribution(a);
  return a;
}

BTable dual_b_table(const LinearCode& c, std::uint64_t budget) {
  const FieldSpec& fs = c.field();
  check_budget(grassmannian_size(c.n(), Count(fs.q())), budget, "dual_b_table");

  BTable table;
  table.n = c.n();
  table.k = c.n() - c.k();  // dimension of the dual
  table.q = fs.q();
  table.m = fs.m();
  table.rows.assign(c.n() + 1, std::vector<Count>(table.k + 1, Count(0)));
  const Count qm = fs.q_pow_m();

  for (std::size_t t = 0; t <= c.n(); ++t) {
    for_each_subspace(fs.base(), c.n(), t, [&](const Subspace<BaseField>& v) {
      auto v_perp = orthogonal_complement(fs.base(), v);
      // dim C_dual(V) = dim C(V^perp) - k + (n - dim V); no dual arithmetic.
      const std::size_t d = code_sub_u(c, v_perp).dim() + c.n() - c.k() - t;
      for (std::size_t r = 0; r <= table.k; ++r) table.rows[t][r] += gauss_binom(d, r, qm);
      return true;
    });
  }
  return table;
}

Count macwilliams_rhs(const DistributionTable& a, std::size_t t, std::size_t r) {
  const std::size_t n = a.n, k = a.k;
  if (t > n - k) throw OutOfRange("the moment identity is stated for 0 <= t <= n - k");
  const Count q(a.q);
  const Count qm = a.q_pow_m();
  Count rhs = 0;
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t l = 0; l <= r && l <= k; ++l) {
      const Count& alp = a.rows[l][p];
      if (alp == 0) continue;
      Count bin_q = gauss_binom(n - p, n - t, q);
      if (bin_q == 0) continue;
      Count bin_qm = gauss_binom(n - k - t, r - l, qm);
      if (bin_qm == 0) continue;
      // r - l <= n - k - t here, so l + n - k - t - r >= 0.
      const std::size_t expo = static_cast<std::size_t>(a.m) * l * (l + n - k - t - r);
      rhs += alp * count_pow_u(q, expo) * bin_q * bin_qm;
    }
  }
  return rhs;
}

namespace {

// Solves the moment-identity equations for one dual row r, unknowns
// A^r_w for w in [r, n], equations t = 0..n-k. Exact elimination over the
// rationals; throws Underdetermined when the system does not pin the row.
std::vector<Count> solve_dual_row(const DistributionTable& a_of_c, std::size_t r) {
  const std::size_t n = a_of_c.n, k = a_of_c.k;
  const Count q(a_of_c.q);
  const std::size_t unknowns = n - r + 1;  // w = r..n
  const std::size_t eqs = n - k + 1;
  std::vector<std::vector<Rational>> mat(eqs, std::vector<Rational>(unknowns + 1, Rational(0)));
  for (std::size_t t = 0; t < eqs; ++t) {
    for (std::size_t w = r; w <= n; ++w)
      mat[t][w - r] = Rational(gauss_binom(n - w, t, q));
    mat[t][unknowns] = Rational(macwilliams_rhs(a_of_c, t, r));
  }
  // Gauss-Jordan.
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(unknowns, SIZE_MAX);
  for (std::size_t col = 0; col < unknowns && row < eqs; ++col) {
    std::size_t pr = row;
    while (pr < eqs && mat[pr][col] == 0) ++pr;
    if (pr == eqs) continue;
    std::swap(mat[pr], mat[row]);
    const Rational piv = mat[row][col];
    for (auto& x : mat[row]) x /= piv;
    for (std::size_t i = 0; i < eqs; ++i) {
      if (i == row || mat[i][col] == 0) continue;
      const Rational f = mat[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) mat[i][j] -= f * mat[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  // A column without a pivot means a free unknown; report that before
  // looking at any pivot value (those values still carry free-variable terms).
  for (std::size_t col = 0; col < unknowns; ++col)
    if (pivot_of_col[col] == SIZE_MAX)
      throw Underdetermined(
          "the moment-identity system does not determine the dual distribution for r = " +
          std::to_string(r));
  for (std::size_t i = row; i < eqs; ++i)
    if (mat[i][unknowns] != 0)
      throw InconsistentBTable("the moment-identity equations are inconsistent");
  std::vector<Count> sol(unknowns);
  for (std::size_t col = 0; col < unknowns; ++col) {
    const Rational& v = mat[pivot_of_col[col]][unknowns];
    if (boost::multiprecision::denominator(v) != 1 || v < 0)
      throw InconsistentBTable("the moment-identity solution is not a nonnegative integer");
    sol[col] = Count(boost::multiprecision::numerator(v));
  }
  return sol;
}

}  // namespace

DistributionTable dual_distribution(const LinearCode& c, DualDistMethod method,
                                    std::uint64_t budget) {
  switch (method) {
    case DualDistMethod::Transversal:
      return a_from_b(dual_b_table(c, budget));
    case DualDistMethod::Direct:
      return brute_force_distribution(dual_code(c), std::nullopt, budget);
    case DualDistMethod::Solve: {
      const auto a_of_c = brute_force_distribution(c, std::nullopt, budget);
      DistributionTable dual;
      dual.n = c.n();
      dual.k = c.n() - c.k();
      dual.q = c.field().q();
      dual.m = c.field().m();
      dual.rows.assign(dual.k + 1, std::vector<Count>(dual.n + 1, Count(0)));
      dual.rows[0][0] = 1;
      for (std::size_t r = 1; r <= dual.k; ++r) {
        auto sol = solve_dual_row(a_of_c, r);
        for (std::size_t w = r; w <= dual.n; ++w) dual.rows[r][w] = sol[w - r];
      }
      validate_distribution(dual);
      return dual;
    }
  }
  throw Error("unreachable");
}

EnumeratorPoly enumerator_from_btable(const BTable& b, std::size_t r) {
  if (r > b.k) throw DimensionError("enumerator row exceeds the code dimension");
  const Count q(b.q);
  HomPoly acc;
  acc.coeff.assign(b.n + 1, Count(0));
  for (std::size_t t = 0; t <= b.n; ++t) {
    if (b.rows[t][r] == 0) continue;
    acc = acc + falling_q_product(t, q).shifted_x(b.n - t).scaled(b.rows[t][r]);
  }
  return EnumeratorPoly{r, std::move(acc)};
}

EnumeratorPoly enumerator_from_distribution(const DistributionTable& a, std::size_t r) {
  if (r > a.k) throw DimensionError("enumerator row exceeds the code dimension");
  HomPoly p;
  p.coeff = a.rows[r];
  return EnumeratorPoly{r, std::move(p)};
}

EnumeratorPoly enumerator(const LinearCode& c, std::size_t r, EnumeratorSource source,
                          std::uint64_t budget) {
  if (source == EnumeratorSource::BTable)
    return enumerator_from_btable(b_table_transversal(c, budget), r);
  return enumerator_from_distribution(brute_force_distribution(c, std::nullopt, budget), r);
}

HomPoly classic_rank_enumerator(const LinearCode& c, std::uint64_t budget) {
  HomPoly p;
  p.coeff.assign(c.n() + 1, Count(0));
  auto counts = codeword_weight_counts(c, budget);
  for (std::size_t w = 0; w <= c.n(); ++w) p.coeff[w] = counts[w];
  return p;
}

bool classic_rank_enumerator_check(const LinearCode& c, std::uint64_t budget) {
  const auto a = brute_force_distribution(c, std::nullopt, budget);
  const auto w0 = enumerator_from_distribution(a, 0);
  const auto w1 = enumerator_from_distribution(a, 1);
  const Count qm1 = a.q_pow_m() - 1;
  HomPoly combined = w0.poly + w1.poly.scaled(qm1);
  return classic_rank_enumerator(c, budget) == combined;
}

HomPoly classic_closed_form(std::size_t n, std::size_t k, std::uint64_t q, int m) {
  const Count qc(q);
  HomPoly acc;
  acc.coeff.assign(n + 1, Count(0));
  for (std::size_t t = 0; t <= std::min(n, k); ++t) {
    Count coeff = gauss_binom(n, t, qc) * count_pow_u(qc, static_cast<std::size_t>(m) * (k - t));
    acc = acc + falling_q_product(t, qc).shifted_x(n - t).scaled(coeff);
  }
  return acc;
}

Count mrd_b(std::size_t n, std::size_t k, std::uint64_t q, int m, std::size_t t, std::size_t r) {
  if (!(k >= 1 && k <= n && n <= static_cast<std::size_t>(m)))
    throw DimensionError("MRD parameters must satisfy 1 <= k <= n <= m");
  if (t > n) throw DimensionError("t must satisfy 0 <= t <= n");
  const Count qc(q);
  // Every U contributes one empty subcode, so the r = 0 value is the plain
  // subspace count regardless of t.
  if (r == 0) return gauss_binom(n, t, qc);
  if (t > k) return 0;
  const Count qm = count_pow_u(qc, static_cast<std::size_t>(m));
  return gauss_binom(n, t, qc) * gauss_binom(k - t, r, qm);
}

BTable mrd_b_table(std::size_t n, std::size_t k, std::uint64_t q, int m) {
  BTable b;
  b.n = n;
  b.k = k;
  b.q = q;
  b.m = m;
  b.rows.assign(n + 1, std::vector<Count>(k + 1, Count(0)));
  for (std::size_t t = 0; t <= n; ++t)
    for (std::size_t r = 0; r <= k; ++r) b.rows[t][r] = mrd_b(n, k, q, m, t, r);
  return b;
}

DistributionTable mrd_distribution(std::size_t n, std::size_t k, std::uint64_t q, int m) {
  return a_from_b(mrd_b_table(n, k, q, m));
}

}  // namespace grw

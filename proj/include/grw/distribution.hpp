#ifndef GRW_DISTRIBUTION_HPP
#define GRW_DISTRIBUTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "grw/bigint.hpp"
#include "grw/codes.hpp"
#include "grw/qcombin.hpp"

// Generalized rank weight distribution tables A^r_w, the B-numbers B^r_t,
// the moment identity relating a code to its dual, enumerator polynomials and
// the closed forms for MRD codes. Two independent pipelines (direct subcode
// enumeration vs. transversal counting plus Gaussian inversion) produce every
// table and are cross-checked by the verifier.

namespace grw {

// rows[r][w] = number of r-dimensional subcodes of rank weight exactly w.
struct DistributionTable {
  std::size_t n = 0, k = 0;
  std::uint64_t q = 0;
  int m = 0;
  std::vector<std::vector<Count>> rows;  // (k+1) x (n+1)

  Count q_pow_m() const;
  bool operator==(const DistributionTable&) const = default;
};

// rows[t][r] = sum over t-dimensional U <= F_q^n of the number of r-dim
// subcodes of C(U).
struct BTable {
  std::size_t n = 0, k = 0;
  std::uint64_t q = 0;
  int m = 0;
  std::vector<std::vector<Count>> rows;  // (n+1) x (k+1)

  Count q_pow_m() const;
  bool operator==(const BTable&) const = default;
};

// W^r(X, Y) = sum_w A^r_w X^w Y^{n-w}; poly.coeff[w] = A^r_w.
struct EnumeratorPoly {
  std::size_t r = 0;
  HomPoly poly;

  std::size_t n() const { return poly.degree(); }
  bool operator==(const EnumeratorPoly&) const = default;
};

// Exact counts by enumerating every r-dimensional subcode and binning rank
// support dimensions. r_max limits the computed rows (default: all of 0..k).
DistributionTable brute_force_distribution(const LinearCode& c,
                                           std::optional<std::size_t> r_max = std::nullopt,
                                           std::uint64_t budget = kDefaultSubspaceBudget);

// counts[w] = number of codewords of rank weight w; counts[w] =
// (q^m - 1) A^1_w for w >= 1.
std::vector<Count> codeword_weight_counts(const LinearCode& c,
                                          std::uint64_t budget = kDefaultSubspaceBudget);

// B-table by walking every subspace U of F_q^n and summing
// [dim C(U), r]_{q^m}.
BTable b_table_transversal(const LinearCode& c, std::uint64_t budget = kDefaultSubspaceBudget);

// B^r_t = sum_w [n-w t]_q A^r_w.
Count b_from_a(const DistributionTable& a, std::size_t t, std::size_t r);
BTable b_table_from_a(const DistributionTable& a);

// Gaussian inversion of b_from_a; validates the structural invariants of the
// result and throws InconsistentBTable when they fail.
DistributionTable a_from_b(const BTable& b);

// B-table of the dual code computed from C alone: while walking V over
// F_q^n, dim C_dual(V) = dim C(V^perp) - k + (n - dim V).
BTable dual_b_table(const LinearCode& c, std::uint64_t budget = kDefaultSubspaceBudget);

// Right-hand side of the moment identity: with A = A(C),
//   sum_w [n-w t]_q A^r_w(C_dual)
//     = sum_p sum_l A^l_p q^{ml(l+n-k-t-r)} [n-p n-t]_q [n-k-t r-l]_{q^m}
// for 0 <= t <= n-k. Throws OutOfRange outside that domain.
Count macwilliams_rhs(const DistributionTable& a_of_c, std::size_t t, std::size_t r);

enum class DualDistMethod {
  Transversal,  // dual_b_table + Gaussian inversion; always exact
  Solve,        // the moment-identity equations + structural zeros; may be underdetermined
  Direct,       // dualize, then brute force
};

DistributionTable dual_distribution(const LinearCode& c,
                                    DualDistMethod method = DualDistMethod::Transversal,
                                    std::uint64_t budget = kDefaultSubspaceBudget);

enum class EnumeratorSource { BTable, Distribution };

EnumeratorPoly enumerator_from_btable(const BTable& b, std::size_t r);
EnumeratorPoly enumerator_from_distribution(const DistributionTable& a, std::size_t r);
EnumeratorPoly enumerator(const LinearCode& c, std::size_t r,
                          EnumeratorSource source = EnumeratorSource::BTable,
                          std::uint64_t budget = kDefaultSubspaceBudget);

// Codeword-level rank enumerator sum_w count_w X^w Y^{n-w}.
HomPoly classic_rank_enumerator(const LinearCode& c, std::uint64_t budget = kDefaultSubspaceBudget);

// Verifies classic_rank_enumerator == W^0 + (q^m - 1) W^1.
bool classic_rank_enumerator_check(const LinearCode& c,
                                   std::uint64_t budget = kDefaultSubspaceBudget);

// Parametric expression sum_t [n t]_q q^{m(k-t)} X^{n-t} prod_{p<t}(Y - q^p X)
// summed over t <= k. Experimental: not an identity checked by the verifier.
HomPoly classic_closed_form(std::size_t n, std::size_t k, std::uint64_t q, int m);

// B-numbers of any MRD code with the given parameters: [n t]_q [k-t r]_{q^m}
// for t <= k and 0 otherwise (for r = 0 the value is [n t]_q for every t).
Count mrd_b(std::size_t n, std::size_t k, std::uint64_t q, int m, std::size_t t, std::size_t r);
BTable mrd_b_table(std::size_t n, std::size_t k, std::uint64_t q, int m);

// Distribution shared by every MRD code with parameters (n, k, q, m):
// A^r_w = sum_{t=n-w}^{k} (-1)^{t+w-n} q^{(t+w-n)(t+w-n-1)/2}
//         [t n-w]_q [n t]_q [k-t r]_{q^m}   for r >= 1.
DistributionTable mrd_distribution(std::size_t n, std::size_t k, std::uint64_t q, int m);

// Structural invariants of a distribution table (exactly; throws
// InconsistentBTable with a description on the first violation).
void validate_distribution(const DistributionTable& a);

}  // namespace grw

#endif

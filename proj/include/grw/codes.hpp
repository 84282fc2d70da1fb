#ifndef GRW_CODES_HPP
#define GRW_CODES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "grw/gf.hpp"
#include "grw/linalg.hpp"

// Linear codes over F_{q^m}, rank supports and weights, the generalized rank
// weight hierarchy, and the Gabidulin / cyclic constructors.

namespace grw {

// Per-computation cap on the number of subspaces an enumeration may visit.
inline constexpr std::uint64_t kDefaultSubspaceBudget = 10'000'000;

class LinearCode {
 public:
  // The generator is stored in RREF. Throws InvalidInput when the rows are
  // dependent and DimensionError unless 1 <= k <= n <= length bounds.
  LinearCode(FieldSpec fs, Mat<ExtField> generator);

  const FieldSpec& field() const { return fs_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const Mat<ExtField>& generator() const { return gen_; }

  // Definitions based on Galois closures or maximum weights are only proven
  // equivalent under m >= n; recorded at construction.
  bool m_at_least_n() const { return static_cast<std::size_t>(fs_.m()) >= n_; }

  Subspace<ExtField> row_space() const;

  bool operator==(const LinearCode&) const = default;

 private:
  FieldSpec fs_;
  std::size_t n_ = 0, k_ = 0;
  Mat<ExtField> gen_;
};

// A rank support is an F_q-subspace of F_q^n; its dimension is the weight it
// certifies.
using RankSupport = Subspace<BaseField>;

// m x n matrix over F_q whose column i holds the coordinates of c_i with
// respect to the distinguished basis.
Mat<BaseField> expansion_matrix(const FieldSpec& fs, const Vec<ExtField>& word);

RankSupport rank_support(const FieldSpec& fs, const Vec<ExtField>& word);
std::size_t rank_weight(const FieldSpec& fs, const Vec<ExtField>& word);

// Rank support of the row space of basis_rows (r x n over F_{q^m}): the row
// space of the stacked coordinate expansions. Independent of the chosen
// basis.
RankSupport subspace_rank_support(const FieldSpec& fs, const Mat<ExtField>& basis_rows);

LinearCode dual_code(const LinearCode& c);

// C(U) = C intersect (U_L)^perp: the subcode of words whose rank support lies
// inside U^perp.
Subspace<ExtField> code_sub_u(const LinearCode& c, const Subspace<BaseField>& u);

// dim C(U) when the bounds pin it down (0 for t > n - M_1(C), k - t for
// t < M_1(C^perp)); nullopt when neither clause applies.
std::optional<std::size_t> dim_cu_bounds(const LinearCode& c, std::size_t t,
                                         std::uint64_t budget = kDefaultSubspaceBudget);

enum class GrwMethod {
  Subspaces,     // min wt_R(D) over r-dim subcodes D
  ClosedSpaces,  // min dim U with dim(C intersect U_L) >= r; requires m >= n
  MaxWeight,     // min over r-dim D of max_{d in D} wt_R(d); requires m >= n
};

std::size_t generalized_rank_weight(const LinearCode& c, std::size_t r, GrwMethod method = GrwMethod::Subspaces,
                std::uint64_t budget = kDefaultSubspaceBudget);

// (M_1, ..., M_k)
std::vector<std::size_t> grw_hierarchy(const LinearCode& c, GrwMethod method = GrwMethod::Subspaces,
                                       std::uint64_t budget = kDefaultSubspaceBudget);

// Whether M_r(C) = n - k + r, the generalized Singleton bound.
bool is_r_mrd(const LinearCode& c, std::size_t r, GrwMethod method = GrwMethod::Subspaces,
              std::uint64_t budget = kDefaultSubspaceBudget);

// Evaluation code of the q-power monomials: row i holds points_j^{q^i}.
// Points must be linearly independent over F_q and k <= n <= m.
LinearCode gabidulin_code(const FieldSpec& fs, std::size_t n, std::size_t k,
                          const Vec<ExtField>& points);
Mat<ExtField> gabidulin_generator_rows(const FieldSpec& fs, std::size_t n, std::size_t k,
                                       const Vec<ExtField>& points);

// Code generated by g(x) in F_{q^m}[x]/(x^n - 1); g must be monic and divide
// x^n - 1.
LinearCode cyclic_code(const FieldSpec& fs, std::size_t n, const std::vector<ExtElt>& g);
Mat<ExtField> cyclic_generator_rows(const FieldSpec& fs, std::size_t n,
                                    const std::vector<ExtElt>& g);

}  // namespace grw

#endif

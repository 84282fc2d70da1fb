#ifndef GRW_QCOMBIN_HPP
#define GRW_QCOMBIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grw/bigint.hpp"
#include "grw/errors.hpp"

// Gaussian binomials and the triangular transforms built from them. The base
// Q is a plain integer >= 2 rather than a field handle: the identities here
// are used with Q = q and Q = q^m, sometimes inside the same formula.

namespace grw {

// Number of b-dimensional subspaces of an a-dimensional space over a field
// with Q elements. Zero when b > a, one when b == 0.
Count gauss_binom(std::size_t a, std::size_t b, const Count& Q);

inline Count gauss_binom(std::size_t a, std::size_t b, std::uint64_t Q) {
  return gauss_binom(a, b, Count(Q));
}

// Forward triangular transform: b_j = sum_i [i j]_Q a_i.
std::vector<Count> gauss_forward(const std::vector<Count>& a, const Count& Q);

// Inverse of gauss_forward:
// a_j = sum_{i>=j} (-1)^{i-j} Q^{(i-j)(i-j-1)/2} [i j]_Q b_i.
std::vector<Count> gauss_inversion(const std::vector<Count>& b, const Count& Q);

// Homogeneous bivariate polynomial; coeff[i] is the coefficient of
// X^i Y^{degree()-i}.
struct HomPoly {
  std::vector<Count> coeff;

  std::size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }
  static HomPoly one() { return HomPoly{{Count(1)}}; }

  HomPoly mul_linear(const Count& c) const;  // multiply by (Y - c*X)
  HomPoly shifted_x(std::size_t s) const;    // multiply by X^s
  HomPoly scaled(const Count& c) const;
  HomPoly operator+(const HomPoly& other) const;
  Count eval(const Count& x, const Count& y) const;
  std::string str() const;  // e.g. "40*X^3*Y+42*X^4", "0" when zero

  bool operator==(const HomPoly&) const = default;
};

// Expands the product prod_{p=0}^{t-1} (Y - Q^p X).
HomPoly falling_q_product(std::size_t t, const Count& Q);

// Evaluates the q-Vandermonde identity
// [a+b c]_Q = sum_l Q^{l(l+b-c)} [a l]_Q [b c-l]_Q; an executable oracle that
// must always hold.
bool vandermonde_check(std::size_t a, std::size_t b, std::size_t c, const Count& Q);

}  // namespace grw

#endif

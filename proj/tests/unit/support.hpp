#ifndef GRW_TESTS_SUPPORT_HPP
#define GRW_TESTS_SUPPORT_HPP

#include <optional>
#include <random>

#include "grw/codes.hpp"
#include "grw/gf.hpp"
#include "grw/linalg.hpp"

namespace grw::test {

// F_{2^4} with a^4 = a + 1.
inline FieldSpec f16() { return FieldSpec(2, 1, 4, std::nullopt, BasePoly{1, 1, 0, 0, 1}); }

// F_{3^4} with a^4 = a^3 + 1.
inline FieldSpec f81() { return FieldSpec(3, 1, 4, std::nullopt, BasePoly{2, 0, 0, 2, 1}); }

// F_4 = F_2[x]/(x^2+x+1) as the base of a degree-2 tower.
inline FieldSpec f4_tower(std::uint64_t seed = 7) {
  return FieldSpec(2, 2, 2, std::vector<std::int64_t>{1, 1, 1}, std::nullopt, seed);
}

inline ExtElt random_elt(const ExtField& f, std::mt19937_64& rng) {
  return f.element_at(rng() % f.size_u64());
}

inline Mat<ExtField> random_ext_matrix(const ExtField& f, std::size_t rows, std::size_t cols,
                                       std::mt19937_64& rng) {
  Mat<ExtField> m(rows, cols, f.zero());
  for (auto& x : m.a) x = random_elt(f, rng);
  return m;
}

inline Mat<BaseField> random_base_matrix(const BaseField& f, std::size_t rows, std::size_t cols,
                                         std::mt19937_64& rng) {
  Mat<BaseField> m(rows, cols, f.zero());
  for (auto& x : m.a) x = f.element_at(rng() % f.size_u64());
  return m;
}

inline LinearCode random_code(const FieldSpec& fs, std::size_t n, std::size_t k,
                              std::mt19937_64& rng) {
  while (true) {
    auto g = random_ext_matrix(fs.ext(), k, n, rng);
    if (rank(fs.ext(), g) == k) return LinearCode(fs, std::move(g));
  }
}

template <class F>
Mat<F> random_invertible(const F& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Mat<F> m(n, n, f.zero());
    for (auto& x : m.a) x = f.element_at(rng() % f.size_u64());
    if (rank(f, m) == n) return m;
  }
}

// Inverse via elimination of [M | I]; test-side helper.
template <class F>
Mat<F> inverse_matrix(const F& f, const Mat<F>& m) {
  const std::size_t n = m.rows;
  Mat<F> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  rref_in_place(f, aug);
  Mat<F> inv(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace grw::test

#endif

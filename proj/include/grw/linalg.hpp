#ifndef GRW_LINALG_HPP
#define GRW_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "grw/errors.hpp"
#include "grw/gf.hpp"

// Exact dense matrices and subspaces over either level of the field tower.
// Subspaces are always stored as a reduced-row-echelon basis with no zero
// rows, so value equality coincides with equality of subspaces and canonical
// values can be deduplicated directly.

namespace grw {

template <class F>
using Vec = std::vector<typename F::Elt>;

template <class F>
struct Mat {
  using Elt = typename F::Elt;
  std::size_t rows = 0, cols = 0;
  std::vector<Elt> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, Elt fill) : rows(r), cols(c), a(r * c, fill) {}

  Elt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Elt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  Vec<F> row(std::size_t r) const { return Vec<F>(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                                                  a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols)); }

  bool operator==(const Mat&) const = default;
};

template <class F>
Mat<F> zero_mat(const F& f, std::size_t rows, std::size_t cols) {
  return Mat<F>(rows, cols, f.zero());
}

template <class F>
Mat<F> identity_mat(const F& f, std::size_t n) {
  Mat<F> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
Mat<F> mat_from_rows(const F& f, const std::vector<Vec<F>>& rows) {
  if (rows.empty()) return zero_mat(f, 0, 0);
  Mat<F> m(rows.size(), rows[0].size(), f.zero());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw DimensionError("ragged rows");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

template <class F>
Mat<F> transpose(const Mat<F>& m) {
  Mat<F> t;
  t.rows = m.cols;
  t.cols = m.rows;
  t.a.resize(m.a.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.a[j * t.cols + i] = m.at(i, j);
  return t;
}

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.rows) throw DimensionError("matrix product shape mismatch");
  Mat<F> r(x.rows, y.cols, f.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t l = 0; l < x.cols; ++l) {
      const auto& xv = x.at(i, l);
      if (f.is_zero(xv)) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(l, j)));
    }
  return r;
}

// Gauss-Jordan elimination; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(const F& f, Mat<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pr = row;
    while (pr < m.rows && f.is_zero(m.at(pr, col))) ++pr;
    if (pr == m.rows) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    const auto piv_inv = f.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), piv_inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      const auto factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
Mat<F> rref(const F& f, Mat<F> m) {
  rref_in_place(f, m);
  return m;
}

template <class F>
std::size_t rank(const F& f, Mat<F> m) {
  return rref_in_place(f, m).size();
}

template <class F>
struct Subspace {
  std::size_t ambient = 0;
  Mat<F> basis;  // RREF, no zero rows

  std::size_t dim() const { return basis.rows; }
  bool operator==(const Subspace&) const = default;
};

template <class F>
Subspace<F> span(const F& f, Mat<F> rows) {
  Subspace<F> s;
  s.ambient = rows.cols;
  auto pivots = rref_in_place(f, rows);
  rows.a.resize(pivots.size() * rows.cols);
  rows.rows = pivots.size();
  s.basis = std::move(rows);
  return s;
}

template <class F>
Subspace<F> zero_subspace(const F& f, std::size_t n) {
  Subspace<F> s;
  s.ambient = n;
  s.basis = zero_mat(f, 0, n);
  return s;
}

template <class F>
Subspace<F> full_space(const F& f, std::size_t n) {
  Subspace<F> s;
  s.ambient = n;
  s.basis = identity_mat(f, n);
  return s;
}

template <class F>
bool contains(const F& f, const Subspace<F>& s, Vec<F> v) {
  if (v.size() != s.ambient) throw DimensionError("vector length does not match ambient space");
  // Reduce v against the RREF basis; membership iff the residue is zero.
  std::size_t row = 0;
  for (std::size_t col = 0; col < s.ambient && row < s.basis.rows; ++col) {
    if (f.is_zero(s.basis.at(row, col))) continue;
    if (!f.is_zero(v[col])) {
      const auto c = v[col];
      for (std::size_t j = col; j < s.ambient; ++j) v[j] = f.sub(v[j], f.mul(c, s.basis.at(row, j)));
    }
    ++row;
  }
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

// Right kernel {v : M v^T = 0}, dim = cols - rank.
template <class F>
Subspace<F> kernel(const F& f, Mat<F> m) {
  const std::size_t n = m.cols;
  auto pivots = rref_in_place(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat<F> basis(n - pivots.size(), n, f.zero());
  std::size_t bi = 0;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(bi, free_col) = f.one();
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(bi, pivots[pi]) = f.neg(m.at(pi, free_col));
    ++bi;
  }
  return span(f, std::move(basis));
}

// With respect to the standard bilinear form sum x_i y_i.
template <class F>
Subspace<F> orthogonal_complement(const F& f, const Subspace<F>& s) {
  if (s.dim() == 0) return full_space(f, s.ambient);
  return kernel(f, s.basis);
}

template <class F>
Subspace<F> sum_subspaces(const F& f, const Subspace<F>& s1, const Subspace<F>& s2) {
  if (s1.ambient != s2.ambient) throw DimensionError("subspace sum: ambient mismatch");
  Mat<F> stacked(s1.dim() + s2.dim(), s1.ambient, f.zero());
  for (std::size_t i = 0; i < s1.dim(); ++i)
    for (std::size_t j = 0; j < s1.ambient; ++j) stacked.at(i, j) = s1.basis.at(i, j);
  for (std::size_t i = 0; i < s2.dim(); ++i)
    for (std::size_t j = 0; j < s2.ambient; ++j) stacked.at(s1.dim() + i, j) = s2.basis.at(i, j);
  return span(f, std::move(stacked));
}

template <class F>
Subspace<F> intersect_subspaces(const F& f, const Subspace<F>& s1, const Subspace<F>& s2) {
  if (s1.ambient != s2.ambient) throw DimensionError("subspace intersection: ambient mismatch");
  return orthogonal_complement(
      f, sum_subspaces(f, orthogonal_complement(f, s1), orthogonal_complement(f, s2)));
}

// Visits every r-dimensional subspace of F^n exactly once, in a fixed order:
// pivot-column patterns lexicographically, free cells odometer-style. The
// basis handed to the callback is already in RREF. The callback returns
// whether to continue; the function returns false if the walk was stopped.
template <class F, class Cb>
bool for_each_subspace(const F& f, std::size_t n, std::size_t r, Cb&& cb) {
  if (r > n) throw DimensionError("subspace dimension exceeds ambient dimension");
  if (r == 0) return cb(zero_subspace(f, n));

  const std::uint64_t q = f.size_u64();
  std::vector<std::size_t> piv(r);
  std::iota(piv.begin(), piv.end(), std::size_t{0});
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    // Free cells: (i, j) with j > piv[i] and j not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_pivot[j]) cells.emplace_back(i, j);

    Subspace<F> s;
    s.ambient = n;
    s.basis = zero_mat(f, r, n);
    for (std::size_t i = 0; i < r; ++i) s.basis.at(i, piv[i]) = f.one();

    std::vector<std::uint64_t> digits(cells.size(), 0);
    while (true) {
      if (!cb(s)) return false;
      std::size_t pos = 0;
      while (pos < cells.size()) {
        if (++digits[pos] == q) {
          digits[pos] = 0;
          s.basis.at(cells[pos].first, cells[pos].second) = f.zero();
          ++pos;
        } else {
          s.basis.at(cells[pos].first, cells[pos].second) = f.element_at(digits[pos]);
          break;
        }
      }
      if (pos == cells.size()) break;
    }

    // Next pivot pattern (lexicographic successor of an r-combination of n).
    std::size_t i = r;
    while (i-- > 0) {
      if (piv[i] + (r - i) < n) {
        ++piv[i];
        for (std::size_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
  }
}

// The F_{q^m}-span of the rows of a base-level subspace basis; dimension is
// preserved and the operation commutes with orthogonal complements.
Subspace<ExtField> extend_scalars(const ExtField& ext, const Subspace<BaseField>& u);

}  // namespace grw

#endif

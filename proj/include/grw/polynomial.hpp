#ifndef GRW_POLYNOMIAL_HPP
#define GRW_POLYNOMIAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "grw/errors.hpp"

// Generic dense polynomial arithmetic over a field object.
//
// A field type F provides:
//   using Elt = ...;                    equality-comparable value type
//   Elt zero() / one();
//   bool is_zero(Elt);
//   Elt add / sub / neg / mul / inv;
//   std::uint64_t size_u64();           number of elements (enumeration only)
//   Elt element_at(std::uint64_t);      bijective with [0, size)
//
// Polynomials are coefficient vectors in ascending degree; the zero
// polynomial is the empty vector once trimmed.

namespace grw {

template <class F>
using Poly = std::vector<typename F::Elt>;

template <class F>
void poly_trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
bool poly_is_zero(const F& f, const Poly<F>& a) {
  for (const auto& c : a)
    if (!f.is_zero(c)) return false;
  return true;
}

// Degree of a (not necessarily trimmed) polynomial; -1 for zero.
template <class F>
int poly_deg(const F& f, const Poly<F>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!f.is_zero(a[static_cast<std::size_t>(i)])) return i;
  return -1;
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  poly_trim(f, r);
  return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  poly_trim(f, r);
  return r;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Elt& c) {
  Poly<F> r(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  poly_trim(f, r);
  return r;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (poly_is_zero(f, a) || poly_is_zero(f, b)) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  poly_trim(f, r);
  return r;
}

// Euclidean division: a = q*b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  int db = poly_deg(f, b);
  if (db < 0) throw DivisionByZero("polynomial division by zero");
  poly_trim(f, a);
  const auto lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  Poly<F> q;
  int da = poly_deg(f, a);
  if (da >= db) q.assign(static_cast<std::size_t>(da - db + 1), f.zero());
  while (da >= db) {
    const auto c = f.mul(a[static_cast<std::size_t>(da)], lead_inv);
    q[static_cast<std::size_t>(da - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(da - db + i)];
      slot = f.sub(slot, f.mul(c, b[static_cast<std::size_t>(i)]));
    }
    poly_trim(f, a);
    da = poly_deg(f, a);
  }
  poly_trim(f, q);
  return {std::move(q), std::move(a)};
}

template <class F>
Poly<F> poly_mod(const F& f, Poly<F> a, const Poly<F>& b) {
  return poly_divmod(f, std::move(a), b).second;
}

// Inverse of a modulo `mod` via the extended Euclidean algorithm.
template <class F>
Poly<F> poly_modinv(const F& f, Poly<F> a, const Poly<F>& mod) {
  a = poly_mod(f, std::move(a), mod);
  if (poly_is_zero(f, a)) throw DivisionByZero("inverse of zero");
  Poly<F> r0 = mod, r1 = a;
  Poly<F> s0 = {}, s1 = {f.one()};
  while (!poly_is_zero(f, r1)) {
    auto [q, rem] = poly_divmod(f, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly<F> s2 = poly_sub(f, s0, poly_mul(f, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd(a, mod); must be a nonzero constant since mod is irreducible.
  if (poly_deg(f, r0) != 0)
    throw DivisionByZero("element not invertible modulo the given polynomial");
  return poly_mod(f, poly_scale(f, s0, f.inv(r0[0])), mod);
}

// Irreducibility over a finite field by trial division: no monic divisor of
// degree 1..deg/2 exists.
template <class F>
bool poly_is_irreducible(const F& f, const Poly<F>& a) {
  const int d = poly_deg(f, a);
  if (d <= 0) return false;
  if (d == 1) return true;
  const std::uint64_t q = f.size_u64();
  std::vector<std::uint64_t> digits;
  for (int dd = 1; dd <= d / 2; ++dd) {
    digits.assign(static_cast<std::size_t>(dd), 0);
    while (true) {
      Poly<F> g(static_cast<std::size_t>(dd) + 1, f.zero());
      for (int i = 0; i < dd; ++i)
        g[static_cast<std::size_t>(i)] = f.element_at(digits[static_cast<std::size_t>(i)]);
      g[static_cast<std::size_t>(dd)] = f.one();
      if (poly_is_zero(f, poly_mod(f, a, g))) return false;
      int pos = 0;
      while (pos < dd && ++digits[static_cast<std::size_t>(pos)] == q) {
        digits[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == dd) break;
    }
  }
  return true;
}

}  // namespace grw

#endif

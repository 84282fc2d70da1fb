#include "grw/qcombin.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace grw {

namespace {

Count count_pow(const Count& base, std::size_t exp) {
  Count r = 1;
  Count b = base;
  while (exp != 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// Memoized Pascal-type triangle per Q: [a b] = [a-1 b] + Q^{a-b} [a-1 b-1].
// Guarded so concurrent lookups are safe.
class BinomCache {
 public:
  Count get(std::size_t a, std::size_t b, const Count& Q) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& tri = tables_[Q];
    while (tri.size() <= a) {
      std::size_t n = tri.size();
      std::vector<Count> row(n + 1);
      row[0] = 1;
      row[n] = 1;
      for (std::size_t k = 1; k < n; ++k)
        row[k] = tri[n - 1][k] + count_pow(Q, n - k) * tri[n - 1][k - 1];
      tri.push_back(std::move(row));
    }
    return tri[a][b];
  }

 private:
  std::mutex mu_;
  std::map<Count, std::vector<std::vector<Count>>> tables_;
};

BinomCache& cache() {
  static BinomCache c;
  return c;
}

}  // namespace

Count gauss_binom(std::size_t a, std::size_t b, const Count& Q) {
  if (Q < 2) throw InvalidInput("gauss_binom requires Q >= 2");
  if (b > a) return 0;
  if (b == 0) return 1;
  return cache().get(a, b, Q);
}

std::vector<Count> gauss_forward(const std::vector<Count>& a, const Count& Q) {
  const std::size_t n = a.size();
  std::vector<Count> b(n, Count(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i < n; ++i) b[j] += gauss_binom(i, j, Q) * a[i];
  return b;
}

std::vector<Count> gauss_inversion(const std::vector<Count>& b, const Count& Q) {
  const std::size_t n = b.size();
  std::vector<Count> a(n, Count(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      const std::size_t d = i - j;
      Count term = count_pow(Q, d * (d - (d ? 1 : 0)) / 2) * gauss_binom(i, j, Q) * b[i];
      if (d % 2 == 0)
        a[j] += term;
      else
        a[j] -= term;
    }
  }
  return a;
}

HomPoly HomPoly::mul_linear(const Count& c) const {
  HomPoly r;
  r.coeff.assign(coeff.size() + 1, Count(0));
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    r.coeff[i] += coeff[i];           // * Y
    r.coeff[i + 1] -= c * coeff[i];   // * (-c X)
  }
  return r;
}

HomPoly HomPoly::shifted_x(std::size_t s) const {
  HomPoly r;
  r.coeff.assign(coeff.size() + s, Count(0));
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i + s] = coeff[i];
  return r;
}

HomPoly HomPoly::scaled(const Count& c) const {
  HomPoly r = *this;
  for (auto& x : r.coeff) x *= c;
  return r;
}

HomPoly HomPoly::operator+(const HomPoly& other) const {
  if (coeff.size() != other.coeff.size())
    throw DimensionError("adding homogeneous polynomials of different degree");
  HomPoly r = *this;
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += other.coeff[i];
  return r;
}

Count HomPoly::eval(const Count& x, const Count& y) const {
  Count r = 0;
  const std::size_t d = degree();
  for (std::size_t i = 0; i < coeff.size(); ++i)
    r += coeff[i] * count_pow(x, i) * count_pow(y, d - i);
  return r;
}

std::string HomPoly::str() const {
  const std::size_t d = degree();
  std::ostringstream os;
  bool first = true;
  for (std::size_t w = 0; w < coeff.size(); ++w) {
    const Count& c = coeff[w];
    if (c == 0) continue;
    Count abs = c < 0 ? Count(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    first = false;
    const std::size_t ydeg = d - w;
    bool printed = false;
    if (abs != 1 || (w == 0 && ydeg == 0)) {
      os << abs.str();
      printed = true;
    }
    if (w > 0) {
      if (printed) os << '*';
      os << 'X';
      if (w > 1) os << '^' << w;
      printed = true;
    }
    if (ydeg > 0) {
      if (printed) os << '*';
      os << 'Y';
      if (ydeg > 1) os << '^' << ydeg;
    }
  }
  if (first) return "0";
  return os.str();
}

HomPoly falling_q_product(std::size_t t, const Count& Q) {
  HomPoly r = HomPoly::one();
  Count qp = 1;
  for (std::size_t p = 0; p < t; ++p) {
    r = r.mul_linear(qp);
    qp *= Q;
  }
  return r;
}

bool vandermonde_check(std::size_t a, std::size_t b, std::size_t c, const Count& Q) {
  Count lhs = gauss_binom(a + b, c, Q);
  Count rhs = 0;
  for (std::size_t l = 0; l <= c; ++l) {
    Count bin1 = gauss_binom(a, l, Q);
    if (bin1 == 0) continue;
    Count bin2 = gauss_binom(b, c - l, Q);
    if (bin2 == 0) continue;
    // c - l <= b here, so the exponent l*(l + b - c) is nonnegative.
    rhs += count_pow(Q, l * (l + b - c)) * bin1 * bin2;
  }
  return lhs == rhs;
}

}  // namespace grw

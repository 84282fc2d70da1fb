#include "grw/gf.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace grw {

namespace {

// Prime field shim so the generic polynomial routines can run over F_p
// residues (used for the internal representation of F_q and for base-modulus
// validation).
struct Fp {
  using Elt = std::int64_t;
  std::int64_t p;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(Elt a) const { return a == 0; }
  Elt add(Elt a, Elt b) const { return (a + b) % p; }
  Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const { return (a * b) % p; }
  Elt inv(Elt a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_p");
    // Extended Euclid on integers.
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
    }
    return ((s0 % p) + p) % p;
  }
  std::uint64_t size_u64() const { return static_cast<std::uint64_t>(p); }
  Elt element_at(std::uint64_t idx) const { return static_cast<Elt>(idx); }
};

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp, const char* what) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw Error(std::string(what) + ": size overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BaseField::BaseField(std::int64_t p) : p_(p), e_(1) {
  if (!is_prime(p)) throw InvalidInput("characteristic must be prime");
  if (p > (std::int64_t(1) << 31) - 1) throw InvalidInput("characteristic too large");
  q_ = static_cast<std::uint64_t>(p);
}

BaseField::BaseField(std::int64_t p, std::vector<std::int64_t> modulus) : p_(p) {
  if (!is_prime(p)) throw InvalidInput("characteristic must be prime");
  if (p > (std::int64_t(1) << 31) - 1) throw InvalidInput("characteristic too large");
  for (auto& c : modulus) c = ((c % p) + p) % p;
  Fp fp{p};
  int d = poly_deg(fp, modulus);
  if (d < 1) throw InvalidInput("base modulus must have degree >= 1");
  modulus.resize(static_cast<std::size_t>(d) + 1);
  if (modulus.back() != 1) throw InvalidInput("base modulus must be monic");
  if (!poly_is_irreducible(fp, modulus)) throw InvalidInput("base modulus is reducible over F_p");
  e_ = d;
  mod_ = std::move(modulus);
  q_ = checked_pow_u64(static_cast<std::uint64_t>(p), static_cast<unsigned>(e_), "base field");
  if (q_ > (std::uint64_t(1) << 31)) throw InvalidInput("base field too large");
  if (e_ == 1) mod_.clear();
}

std::vector<std::int64_t> BaseField::digits(Elt a) const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(e_));
  std::uint64_t v = a;
  for (int i = 0; i < e_; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p_));
    v /= static_cast<std::uint64_t>(p_);
  }
  return d;
}

BaseElt BaseField::from_digits(const std::vector<std::int64_t>& d) const {
  if (d.size() > static_cast<std::size_t>(e_)) {
    for (std::size_t i = static_cast<std::size_t>(e_); i < d.size(); ++i)
      if (((d[i] % p_) + p_) % p_ != 0)
        throw InvalidInput("coefficient vector longer than the extension degree");
  }
  std::uint64_t v = 0;
  for (std::size_t i = std::min(d.size(), static_cast<std::size_t>(e_)); i-- > 0;)
    v = v * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(((d[i] % p_) + p_) % p_);
  return Elt(v);
}

BaseElt BaseField::from_int(std::int64_t v) const { return Elt(((v % p_) + p_) % p_); }

BaseElt BaseField::add_general(Elt a, Elt b) const {
  auto da = digits(a), db = digits(b);
  for (int i = 0; i < e_; ++i)
    da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
  return from_digits(da);
}

BaseElt BaseField::neg_general(Elt a) const {
  auto d = digits(a);
  for (auto& c : d) c = c == 0 ? 0 : p_ - c;
  return from_digits(d);
}

BaseElt BaseField::mul_general(Elt a, Elt b) const {
  Fp fp{p_};
  auto da = digits(a), db = digits(b);
  auto prod = poly_mul(fp, da, db);
  prod = poly_mod(fp, std::move(prod), mod_);
  prod.resize(static_cast<std::size_t>(e_), 0);
  return from_digits(prod);
}

BaseElt BaseField::inv(Elt a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (e_ == 1) return Elt(Fp{p_}.inv(static_cast<std::int64_t>(a)));
  Fp fp{p_};
  auto r = poly_modinv(fp, digits(a), mod_);
  r.resize(static_cast<std::size_t>(e_), 0);
  return from_digits(r);
}

BaseElt BaseField::pow(Elt a, std::uint64_t n) const {
  Elt r = one(), base = a;
  while (n != 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

ExtField::ExtField(BaseField base, BasePoly modulus) : base_(std::move(base)) {
  for (BaseElt c : modulus)
    if (c >= base_.size_u64()) throw InvalidInput("modulus coefficient code out of range");
  int d = poly_deg(base_, modulus);
  if (d < 1) throw InvalidInput("extension modulus must have degree >= 1");
  modulus.resize(static_cast<std::size_t>(d) + 1);
  if (modulus.back() != base_.one()) throw InvalidInput("extension modulus must be monic");
  if (!poly_is_irreducible(base_, modulus))
    throw InvalidInput("extension modulus is reducible over the base field");
  m_ = d;
  mod_ = std::move(modulus);
}

Count ExtField::size() const {
  Count r = 1;
  for (int i = 0; i < m_; ++i) r *= base_.size_u64();
  return r;
}

std::uint64_t ExtField::size_u64() const {
  return checked_pow_u64(base_.size_u64(), static_cast<unsigned>(m_), "extension field");
}

ExtElt ExtField::one() const {
  auto r = zero();
  r.c[0] = base_.one();
  return r;
}

ExtElt ExtField::gen() const { return from_coeffs({0, 1}); }

bool ExtField::is_zero(const Elt& a) const {
  for (auto c : a.c)
    if (c != 0) return false;
  return true;
}

ExtElt ExtField::add(const Elt& a, const Elt& b) const {
  Elt r = a;
  for (int i = 0; i < m_; ++i)
    r.c[static_cast<std::size_t>(i)] = base_.add(r.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(i)]);
  return r;
}

ExtElt ExtField::neg(const Elt& a) const {
  Elt r = a;
  for (auto& c : r.c) c = base_.neg(c);
  return r;
}

ExtElt ExtField::sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }

ExtElt ExtField::mul(const Elt& a, const Elt& b) const {
  const std::size_t m = static_cast<std::size_t>(m_);
  std::vector<BaseElt> buf(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.c[j] == 0) continue;
      buf[i + j] = base_.add(buf[i + j], base_.mul(a.c[i], b.c[j]));
    }
  }
  // Reduce by the monic modulus.
  for (std::size_t i = 2 * m - 2; i >= m; --i) {
    BaseElt c = buf[i];
    if (c == 0) continue;
    buf[i] = 0;
    for (std::size_t j = 0; j < m; ++j)
      buf[i - m + j] = base_.sub(buf[i - m + j], base_.mul(c, mod_[j]));
  }
  buf.resize(m);
  return Elt{std::move(buf)};
}

ExtElt ExtField::inv(const Elt& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero");
  BasePoly r = poly_modinv(base_, a.c, mod_);
  r.resize(static_cast<std::size_t>(m_), 0);
  return Elt{std::move(r)};
}

ExtElt ExtField::pow(const Elt& a, std::uint64_t n) const {
  Elt r = one(), base = a;
  while (n != 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

ExtElt ExtField::frobenius(const Elt& a) const { return pow(a, base_.size_u64()); }

ExtElt ExtField::frobenius_iter(const Elt& a, unsigned times) const {
  Elt r = a;
  for (unsigned i = 0; i < times; ++i) r = frobenius(r);
  return r;
}

ExtElt ExtField::from_base(BaseElt b) const {
  auto r = zero();
  r.c[0] = b;
  return r;
}

bool ExtField::in_base(const Elt& a) const {
  for (std::size_t i = 1; i < a.c.size(); ++i)
    if (a.c[i] != 0) return false;
  return true;
}

ExtElt ExtField::from_coeffs(BasePoly coeffs) const {
  if (poly_deg(base_, coeffs) >= m_) coeffs = poly_mod(base_, std::move(coeffs), mod_);
  coeffs.resize(static_cast<std::size_t>(m_), 0);
  return Elt{std::move(coeffs)};
}

ExtElt ExtField::element_at(std::uint64_t idx) const {
  const std::uint64_t q = base_.size_u64();
  auto r = zero();
  for (int i = 0; i < m_; ++i) {
    r.c[static_cast<std::size_t>(i)] = BaseElt(idx % q);
    idx /= q;
  }
  return r;
}

std::uint64_t ExtField::index_of(const Elt& a) const {
  const std::uint64_t q = base_.size_u64();
  std::uint64_t idx = 0;
  for (int i = m_; i-- > 0;) idx = idx * q + a.c[static_cast<std::size_t>(i)];
  return idx;
}

FieldSpec::FieldSpec(std::int64_t p, int e, int m,
                     std::optional<std::vector<std::int64_t>> base_modulus,
                     std::optional<BasePoly> ext_modulus, std::uint64_t seed)
    : ext_([&] {
        if (e < 1 || m < 1) throw InvalidInput("extension degrees must be >= 1");
        if (e == 1 && base_modulus.has_value())
          throw InvalidInput("base_modulus must be absent when e = 1");
        BaseField base = [&] {
          if (e == 1) return BaseField(p);
          std::vector<std::int64_t> bm;
          if (base_modulus.has_value()) {
            bm = *base_modulus;
          } else {
            for (BaseElt c : find_irreducible(BaseField(p), e, seed))
              bm.push_back(static_cast<std::int64_t>(c));
          }
          BaseField k(p, bm);
          if (k.degree() != e) throw InvalidInput("base modulus degree does not match e");
          return k;
        }();
        BasePoly em = ext_modulus.has_value() ? *ext_modulus : find_irreducible(base, m, seed);
        ExtField ext(base, em);
        if (ext.m() != m) throw InvalidInput("extension modulus degree does not match m");
        return ext;
      }()) {}

ExtElt FieldSpec::parse(std::string_view text) const { return parse_element(text, ext_); }

std::string FieldSpec::to_string(const ExtElt& a) const { return element_to_string(ext_, a); }

BasePoly find_irreducible(const BaseField& k, int degree, std::uint64_t seed) {
  if (degree < 1) throw InvalidInput("degree must be >= 1");
  std::mt19937_64 rng(seed);
  const std::uint64_t q = k.size_u64();
  while (true) {
    BasePoly f(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 0; i < degree; ++i) f[static_cast<std::size_t>(i)] = k.element_at(rng() % q);
    f[static_cast<std::size_t>(degree)] = k.one();
    if (poly_is_irreducible(k, f)) return f;
  }
}

namespace {

struct Tokenizer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  std::uint64_t take_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected an integer in element expression");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (std::uint64_t(1) << 62)) throw ParseError("integer literal too large");
      ++pos;
    }
    return v;
  }
  std::string take_ident() {
    skip_ws();
    std::string id;
    while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      id.push_back(s[pos++]);
    if (id.empty()) throw ParseError("expected a generator symbol");
    return id;
  }
};

// Nested coefficient-list form: "[c0,...,c_{m-1}]" with integer entries when
// e == 1 and "[d0,...,d_{e-1}]" sub-lists otherwise.
ExtElt parse_list_form(Tokenizer& tk, const ExtField& F) {
  const char open = tk.take();
  const char close = open == '[' ? ']' : ')';
  const BaseField& base = F.base();
  BasePoly coeffs;
  if (!tk.eof() && tk.peek() == close) {
    tk.take();
  } else {
    while (true) {
      if (tk.eof()) throw ParseError("unterminated coefficient list");
      if (tk.peek() == '[' || tk.peek() == '(') {
        const char o2 = tk.take();
        const char c2 = o2 == '[' ? ']' : ')';
        std::vector<std::int64_t> ds;
        if (!tk.eof() && tk.peek() == c2) {
          tk.take();
        } else {
          while (true) {
            bool negd = false;
            if (!tk.eof() && tk.peek() == '-') {
              tk.take();
              negd = true;
            }
            std::int64_t v = static_cast<std::int64_t>(tk.take_uint());
            ds.push_back(negd ? -v : v);
            if (tk.eof()) throw ParseError("unterminated coefficient list");
            char ch = tk.take();
            if (ch == c2) break;
            if (ch != ',') throw ParseError("expected ',' in coefficient list");
          }
        }
        coeffs.push_back(base.from_digits(ds));
      } else {
        bool negv = false;
        if (tk.peek() == '-') {
          tk.take();
          negv = true;
        }
        std::int64_t v = static_cast<std::int64_t>(tk.take_uint());
        if (negv) v = -v;
        if (base.degree() == 1) {
          coeffs.push_back(base.from_int(v));
        } else {
          // Integer shorthand inside a list over e > 1: canonical code.
          if (v < 0 || static_cast<std::uint64_t>(v) >= base.size_u64())
            throw ParseError("coefficient code out of range for the base field");
          coeffs.push_back(BaseElt(v));
        }
      }
      if (tk.eof()) throw ParseError("unterminated coefficient list");
      char ch = tk.take();
      if (ch == close) break;
      if (ch != ',') throw ParseError("expected ',' in coefficient list");
    }
  }
  if (coeffs.size() > static_cast<std::size_t>(F.m()))
    throw ParseError("coefficient list longer than the extension degree");
  return F.from_coeffs(std::move(coeffs));
}

}  // namespace

ExtElt parse_element(std::string_view text, const ExtField& F) {
  Tokenizer tk{text};
  if (tk.eof()) throw ParseError("empty element expression");
  ExtElt value;
  if (tk.peek() == '[' || tk.peek() == '(') {
    value = parse_list_form(tk, F);
    if (!tk.eof()) throw ParseError("trailing characters after coefficient list");
    return value;
  }
  value = F.zero();
  bool first = true;
  while (!tk.eof()) {
    bool negate = false;
    if (tk.peek() == '+' || tk.peek() == '-') {
      negate = tk.take() == '-';
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    // term := factor ('*' factor)*
    ExtElt term = F.one();
    while (true) {
      if (tk.eof()) throw ParseError("dangling operator in element expression");
      char c = tk.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t v = tk.take_uint();
        term = F.mul(term, F.from_base(F.base().from_int(static_cast<std::int64_t>(v % std::uint64_t(F.base().p())))));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tk.take_ident();  // any identifier denotes the generator
        std::uint64_t exp = 1;
        if (!tk.eof() && tk.peek() == '^') {
          tk.take();
          exp = tk.take_uint();
        }
        term = F.mul(term, F.pow(F.gen(), exp));
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in element expression");
      }
      if (!tk.eof() && tk.peek() == '*') {
        tk.take();
        continue;
      }
      break;
    }
    if (negate) term = F.neg(term);
    value = F.add(value, term);
    first = false;
  }
  return value;
}

std::string element_to_string(const ExtField& F, const ExtElt& a) {
  const BaseField& base = F.base();
  if (F.is_zero(a)) return "0";
  if (base.degree() > 1) {
    // Nested list form is the canonical printing for towers with e > 1.
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < F.m(); ++i) {
      if (i) os << ',';
      auto d = base.digits(a.c[static_cast<std::size_t>(i)]);
      os << '[';
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (j) os << ',';
        os << d[j];
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }
  std::ostringstream os;
  bool first = true;
  for (int i = F.m(); i-- > 0;) {
    BaseElt c = a.c[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'a';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace grw

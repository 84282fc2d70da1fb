#ifndef GRW_GF_HPP
#define GRW_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grw/bigint.hpp"
#include "grw/errors.hpp"
#include "grw/polynomial.hpp"

// Exact arithmetic in the tower F_p <= F_q = F_p[x]/(f) <= F_{q^m} = F_q[y]/(g).
//
// Elements of F_q are stored as canonical codes in [0, q): the code of
// sum d_i x^i is sum d_i p^i. Elements of F_{q^m} are coefficient vectors of
// length m over F_q with respect to the polynomial basis (1, y, ..., y^{m-1}),
// which is the distinguished basis used for all coordinate expansions.
//
// Field objects are immutable after construction and all operations are pure,
// so values and fields may be shared freely across threads.

namespace grw {

using BaseElt = std::uint32_t;
using BasePoly = std::vector<BaseElt>;  // ascending coefficients over F_q

class BaseField {
 public:
  using Elt = BaseElt;

  explicit BaseField(std::int64_t p);
  // F_p[x]/(modulus): residues ascending, monic, irreducible over F_p.
  BaseField(std::int64_t p, std::vector<std::int64_t> modulus);

  std::int64_t p() const { return p_; }
  int degree() const { return e_; }  // e, with q = p^e
  std::uint64_t size_u64() const { return q_; }
  // Residues of the defining polynomial, ascending; empty when degree() == 1.
  const std::vector<std::int64_t>& modulus() const { return mod_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(Elt a) const { return a == 0; }

  Elt add(Elt a, Elt b) const {
    if (e_ == 1) {
      std::uint64_t s = std::uint64_t(a) + b;
      return Elt(s >= q_ ? s - q_ : s);
    }
    return add_general(a, b);
  }
  Elt neg(Elt a) const {
    if (e_ == 1) return a == 0 ? 0 : Elt(q_ - a);
    return neg_general(a);
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const {
    if (e_ == 1) return Elt((std::uint64_t(a) * b) % q_);
    return mul_general(a, b);
  }
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t n) const;

  Elt from_int(std::int64_t v) const;  // embeds v mod p
  Elt element_at(std::uint64_t idx) const { return Elt(idx); }
  std::uint64_t index_of(Elt a) const { return a; }

  // Coefficients over F_p, ascending, length e.
  std::vector<std::int64_t> digits(Elt a) const;
  Elt from_digits(const std::vector<std::int64_t>& d) const;

  bool operator==(const BaseField&) const = default;

 private:
  Elt add_general(Elt a, Elt b) const;
  Elt neg_general(Elt a) const;
  Elt mul_general(Elt a, Elt b) const;

  std::int64_t p_ = 0;
  int e_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::int64_t> mod_;  // empty when e_ == 1
};

struct ExtElt {
  std::vector<BaseElt> c;  // length m, ascending in the generator
  bool operator==(const ExtElt&) const = default;
};

class ExtField {
 public:
  using Elt = ExtElt;

  // F_q[y]/(modulus): coefficients over `base`, ascending, monic, irreducible.
  ExtField(BaseField base, BasePoly modulus);

  const BaseField& base() const { return base_; }
  int m() const { return m_; }
  const BasePoly& modulus() const { return mod_; }
  Count size() const;  // q^m, exact
  std::uint64_t size_u64() const;

  Elt zero() const { return Elt{std::vector<BaseElt>(static_cast<std::size_t>(m_), 0)}; }
  Elt one() const;
  Elt gen() const;  // the class of y
  bool is_zero(const Elt& a) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;
  Elt pow(const Elt& a, std::uint64_t n) const;

  // a |-> a^q, the generator of Gal(F_{q^m}/F_q); F_q-linear.
  Elt frobenius(const Elt& a) const;
  Elt frobenius_iter(const Elt& a, unsigned times) const;

  Elt from_base(BaseElt b) const;
  bool in_base(const Elt& a) const;

  // Coordinates with respect to the distinguished polynomial basis.
  std::vector<BaseElt> expand(const Elt& a) const { return a.c; }
  Elt from_coeffs(BasePoly coeffs) const;  // reduces modulo the defining polynomial

  Elt element_at(std::uint64_t idx) const;
  std::uint64_t index_of(const Elt& a) const;

  bool operator==(const ExtField&) const = default;

 private:
  BaseField base_;
  int m_ = 0;
  BasePoly mod_;  // length m+1
};

// The full tower with its distinguished basis; the object every code and
// every coordinate expansion refers to.
class FieldSpec {
 public:
  // Moduli may be omitted; absent ones are found by a deterministic seeded
  // search. base_modulus must be absent when e == 1.
  FieldSpec(std::int64_t p, int e, int m,
            std::optional<std::vector<std::int64_t>> base_modulus,
            std::optional<BasePoly> ext_modulus, std::uint64_t seed = 0);

  const BaseField& base() const { return ext_.base(); }
  const ExtField& ext() const { return ext_; }

  std::int64_t p() const { return base().p(); }
  int e() const { return base().degree(); }
  int m() const { return ext_.m(); }
  std::uint64_t q() const { return base().size_u64(); }
  Count q_pow_m() const { return ext_.size(); }

  ExtElt parse(std::string_view text) const;
  std::string to_string(const ExtElt& a) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  ExtField ext_;
};

// Deterministic seeded search for a monic irreducible polynomial of the given
// degree over k; the seed fixes the candidate order.
BasePoly find_irreducible(const BaseField& k, int degree, std::uint64_t seed);

// Accepts a polynomial expression in the generator ("a^2+a+1", any alphabetic
// identifier works as the generator symbol) or a coefficient list
// ("[0,1,1,0]"; entries are nested lists when e > 1). Integer literals embed
// via F_p. Throws ParseError on malformed input.
ExtElt parse_element(std::string_view text, const ExtField& field);

std::string element_to_string(const ExtField& field, const ExtElt& a);

bool is_prime(std::int64_t p);

}  // namespace grw

#endif

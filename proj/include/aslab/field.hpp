#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aslab {

/// Packed element of F_{p^n}: the integer sum c_i p^i of its coefficients.
/// The packing is also the canonical total order on elements.
using Elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_{p^n} = F_p[x]/(m(x)).
///
/// Instances are immutable and shared.  The default modulus is the least monic
/// irreducible of degree n, where polynomials are ordered by their packed value
/// sum c_i p^i (so x^2+2 < x^2+x+1 over F_5).
class Field {
 public:
  /// Builds F_p[x]/(modulus).  `modulus` holds n+1 coefficients, low degree
  /// first, and must be monic irreducible.
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool same_as(const Field& other) const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Class of x (for n = 1 this is the root of the linear modulus).
  Elem generator() const { return gen_; }
  Elem from_int(std::int64_t v) const;
  Elem from_digits(std::span<const std::uint32_t> c) const;
  std::vector<std::uint32_t> digits(Elem a) const;
  std::uint32_t digit(Elem a, unsigned i) const { return static_cast<std::uint32_t>((a / pw_[i]) % p_); }
  bool contains(Elem a) const { return a < size_; }
  bool in_prime_field(Elem a) const { return a < p_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem pow(Elem a, const mpz_class& e) const;
  Elem scale(Elem a, std::uint32_t c) const;  // a * (c mod p)

  /// x^r where r must be a power of p.
  Elem frobenius(Elem a, std::uint64_t r) const;
  /// x^(p^k) by repeated p-th powers.
  Elem frobenius_power(Elem a, unsigned k) const;
  /// Unique b with b^p = a.
  Elem pth_root(Elem a) const;

  /// 0, +1 or -1; throws for even characteristic.
  int quadratic_character(Elem a) const;
  /// tr_{F/F_p}(a) as a value in [0, p).
  std::uint32_t absolute_trace(Elem a) const;

  /// Least element of multiplicative order size-1.
  Elem primitive_element() const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;

  std::string format(Elem a) const;        // "[c0,c1,...]"
  Elem parse(const std::string& s) const;  // inverse of format; also accepts a bare integer
  std::string descriptor() const;          // "p^n"

 private:
  std::uint32_t p_;
  unsigned n_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> pw_;  // p^i, i = 0..n
  Elem gen_ = 0;
  // log/exp tables for small fields
  std::vector<std::uint32_t> log_, exp_;
  std::vector<std::uint32_t> add_table_;
  Elem mul_slow(Elem a, Elem b) const;
  Elem add_slow(Elem a, Elem b, bool subtract) const;
};

bool is_prime_u64(std::uint64_t n);
/// Prime factors of n without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// log_p(r) when r is a positive power of p, otherwise -1.
int log_p(std::uint64_t r, std::uint32_t p);

/// F_{p^n} with the least irreducible modulus; memoized, so equal (p, n) share one instance.
FieldPtr make_field(std::uint32_t p, unsigned n);
/// F_{p^n} with the least primitive modulus (x generates the unit group).  Used by the
/// table-driven counters, where any model of the field will do.
FieldPtr make_primitive_field(std::uint32_t p, unsigned n);
/// Parses "p^n" or "p".
FieldPtr parse_field(const std::string& s);

/// Least monic irreducible of degree n over F_p, ordered by packed value.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned n);
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);
/// Exhaustive irreducibility check by trial division by every monic polynomial of degree <= n/2.
bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f, std::uint32_t p);

/// Value type pairing an element with its field, with operator syntax and owner checks.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr F, Elem v);
  static FieldElement from_coeffs(FieldPtr F, const std::vector<std::uint32_t>& c);

  const FieldPtr& field() const { return F_; }
  Elem value() const { return v_; }
  std::vector<std::uint32_t> coeffs() const { return F_->digits(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(std::uint64_t r) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  std::string to_string() const { return F_->format(v_); }

 private:
  FieldPtr F_;
  Elem v_ = 0;
  void check_same(const FieldElement& o) const;
};

/// Sum of x^{|sub|^j}; the result lies in `sub` and is returned there.
FieldElement trace(const FieldElement& x, const FieldPtr& sub);
/// Exponent of psi_0(tr(alpha * beta)) in Z/p.
std::uint32_t additive_character(const FieldElement& beta, const FieldElement& alpha);
int quadratic_character(const FieldElement& x);

/// Least x with x^2 + x + 1 = 0, or throws if none exists in F.
Elem cube_root_of_unity(const Field& F);

}  // namespace aslab

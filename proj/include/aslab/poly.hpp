#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aslab/field.hpp"

namespace aslab {

/// Univariate polynomial over a finite field, coefficients low degree first,
/// trailing zeros stripped.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Elem> c);
  static Poly constant(FieldPtr F, Elem c);
  static Poly monomial(FieldPtr F, Elem c, std::size_t deg);
  static Poly x(FieldPtr F) { return monomial(std::move(F), 1, 1); }
  /// x - a
  static Poly linear(FieldPtr F, Elem a);

  const FieldPtr& field() const { return F_; }
  const Field& F() const { return *F_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  std::vector<Elem>& mutable_coeffs() { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Poly& normalize();

  Elem eval(Elem x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(Elem s) const;
  Poly shifted(std::size_t k) const;  // times x^k
  Poly pow(std::uint64_t e) const;
  /// p(x + a)
  Poly translate(Elem a) const;
  /// Applies an elementwise map (e.g. Frobenius on coefficients).
  template <class Fn>
  Poly map_coeffs(Fn fn) const {
    std::vector<Elem> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = fn(c_[i]);
    return Poly(F_, std::move(c));
  }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  FieldPtr F_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient required
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// a^e mod m
Poly powmod(const Poly& a, const mpz_class& e, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
/// Divides by d while it divides; returns the number of divisions.
unsigned remove_factor(Poly& a, const Poly& d);
/// Coefficient-vector product over F; picks schoolbook or Kronecker/NTT.
std::vector<Elem> poly_multiply(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b);
/// Parses a polynomial literal like "u^5 - u + [1,1]*u^2" in variable `var`.
Poly parse_poly(const FieldPtr& F, const std::string& s, const std::string& var = "x");

}  // namespace aslab

#pragma once

#include <optional>
#include <string>

#include "aslab/poly.hpp"

namespace aslab {

/// num/den in lowest terms with den monic and nonzero.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Poly num);
  RationalFunction(Poly num, Poly den);
  static RationalFunction constant(const FieldPtr& F, Elem c) { return RationalFunction(Poly::constant(F, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// max(deg num, deg den): degree as a map to the projective line.
  int height() const;
  /// Value at x, or nullopt at a pole.
  std::optional<Elem> eval(Elem x) const;
  /// Order of the pole at infinity (deg num - deg den), or <= 0 if none.
  int pole_order_at_infinity() const { return num_.degree() - den_.degree(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction pow(std::int64_t e) const;
  RationalFunction translate(Elem a) const;  // f(x + a)
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  std::string to_string(const std::string& var = "x") const;

 private:
  Poly num_, den_;
  void reduce();
};

/// Parses expressions with + - * / ^ and parentheses in one variable.
/// Coefficients are integers or element literals "[c0,c1,...]".
RationalFunction parse_ratfun(const FieldPtr& F, const std::string& s, const std::string& var = "x");

}  // namespace aslab

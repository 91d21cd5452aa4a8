#pragma once

#include <string>
#include <vector>

#include "aslab/ratfun.hpp"

namespace aslab {

/// A point of E(k(u)): the identity, or affine (X, Y) with reduced rational coordinates.
struct FFPoint {
  bool infinity = true;
  RationalFunction X, Y;

  static FFPoint identity() { return {}; }
  static FFPoint affine(RationalFunction X, RationalFunction Y) { return {false, std::move(X), std::move(Y)}; }
  bool is_identity() const { return infinity; }
  bool operator==(const FFPoint& o) const;
  bool operator!=(const FFPoint& o) const { return !(*this == o); }
  std::string to_string(const std::string& var = "u") const;
};

/// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 with a_i in k[u].
class FFEllipticCurve {
 public:
  FFEllipticCurve(Poly a1, Poly a2, Poly a3, Poly a4, Poly a6);

  const FieldPtr& field() const { return a1_.field(); }
  const Poly& a1() const { return a1_; }
  const Poly& a2() const { return a2_; }
  const Poly& a3() const { return a3_; }
  const Poly& a4() const { return a4_; }
  const Poly& a6() const { return a6_; }
  const Poly& discriminant() const { return disc_; }
  /// Monic irreducible factors of the discriminant.
  const std::vector<Poly>& bad_primes() const { return bad_; }

  /// Denominator used when rounding height estimates (12 q^2 for the families).
  long height_denominator() const { return height_den_; }
  void set_height_denominator(long d) { height_den_ = d; }

  bool contains(const FFPoint& P) const;
  std::string to_string() const;

 private:
  Poly a1_, a2_, a3_, a4_, a6_, disc_;
  std::vector<Poly> bad_;
  long height_den_;
};

enum class GroupOp { add, neg, dbl };

/// Chord-tangent law, valid in every characteristic.  Throws InvalidArgument for
/// points off the curve.
FFPoint ec_group_law(const FFEllipticCurve& E, const FFPoint& P, const FFPoint& Q, GroupOp op);
FFPoint ec_add(const FFEllipticCurve& E, const FFPoint& P, const FFPoint& Q);
FFPoint ec_neg(const FFEllipticCurve& E, const FFPoint& P);
FFPoint ec_double(const FFEllipticCurve& E, const FFPoint& P);
FFPoint ec_mul(const FFEllipticCurve& E, const FFPoint& P, long n);
/// Sum of c_i P_i.
FFPoint ec_combination(const FFEllipticCurve& E, const std::vector<FFPoint>& pts, const std::vector<long>& c);

}  // namespace aslab

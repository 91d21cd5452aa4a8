#include "aslab/ellcurve.hpp"

#include "aslab/errors.hpp"
#include "aslab/factor.hpp"

namespace aslab {

namespace {

RationalFunction rf(const Poly& p) { return RationalFunction(p); }

RationalFunction cst(const FieldPtr& F, std::int64_t c) { return RationalFunction::constant(F, F->from_int(c)); }

void require_on(const FFEllipticCurve& E, const FFPoint& P) {
  if (!E.contains(P)) throw InvalidArgument("point is not on the curve: " + P.to_string());
}

}  // namespace

bool FFPoint::operator==(const FFPoint& o) const {
  if (infinity || o.infinity) return infinity == o.infinity;
  return X == o.X && Y == o.Y;
}

std::string FFPoint::to_string(const std::string& var) const {
  if (infinity) return "O";
  return "(" + X.to_string(var) + ", " + Y.to_string(var) + ")";
}

FFEllipticCurve::FFEllipticCurve(Poly a1, Poly a2, Poly a3, Poly a4, Poly a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  const FieldPtr& F = a1_.field();
  for (const Poly* a : {&a2_, &a3_, &a4_, &a6_})
    if (!a->field() || !a->field()->same_as(*F)) throw InvalidArgument("Weierstrass coefficients over different fields");
  auto k = [&](std::int64_t c) { return Poly::constant(F, F->from_int(c)); };
  Poly b2 = a1_ * a1_ + k(4) * a2_;
  Poly b4 = k(2) * a4_ + a1_ * a3_;
  Poly b6 = a3_ * a3_ + k(4) * a6_;
  Poly b8 = a1_ * a1_ * a6_ + k(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  disc_ = -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
  if (disc_.is_zero()) throw InvalidArgument("singular Weierstrass equation (zero discriminant)");
  for (const auto& f : factor(disc_)) bad_.push_back(f.poly);
  height_den_ = 12 * static_cast<long>(F->size()) * static_cast<long>(F->size());
}

bool FFEllipticCurve::contains(const FFPoint& P) const {
  if (P.infinity) return true;
  const auto& x = P.X;
  const auto& y = P.Y;
  auto lhs = y * y + rf(a1_) * x * y + rf(a3_) * y;
  auto rhs = x * x * x + rf(a2_) * x * x + rf(a4_) * x + rf(a6_);
  return lhs == rhs;
}

std::string FFEllipticCurve::to_string() const {
  return "Y^2 + (" + a1_.to_string("u") + ")XY + (" + a3_.to_string("u") + ")Y = X^3 + (" + a2_.to_string("u") +
         ")X^2 + (" + a4_.to_string("u") + ")X + (" + a6_.to_string("u") + ")";
}

FFPoint ec_neg(const FFEllipticCurve& E, const FFPoint& P) {
  require_on(E, P);
  if (P.infinity) return P;
  return FFPoint::affine(P.X, -P.Y - rf(E.a1()) * P.X - rf(E.a3()));
}

FFPoint ec_double(const FFEllipticCurve& E, const FFPoint& P) {
  require_on(E, P);
  if (P.infinity) return P;
  const auto& F = E.field();
  auto den = cst(F, 2) * P.Y + rf(E.a1()) * P.X + rf(E.a3());
  if (den.is_zero()) return FFPoint::identity();
  auto num = cst(F, 3) * P.X * P.X + cst(F, 2) * rf(E.a2()) * P.X + rf(E.a4()) - rf(E.a1()) * P.Y;
  auto lam = num / den;
  auto x3 = lam * lam + rf(E.a1()) * lam - rf(E.a2()) - cst(F, 2) * P.X;
  auto nu = P.Y - lam * P.X;
  return FFPoint::affine(x3, -(lam + rf(E.a1())) * x3 - nu - rf(E.a3()));
}

FFPoint ec_add(const FFEllipticCurve& E, const FFPoint& P, const FFPoint& Q) {
  require_on(E, P);
  require_on(E, Q);
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  if (P.X == Q.X) {
    if ((P.Y + Q.Y + rf(E.a1()) * Q.X + rf(E.a3())).is_zero()) return FFPoint::identity();
    return ec_double(E, P);
  }
  auto dx = Q.X - P.X;
  auto lam = (Q.Y - P.Y) / dx;
  auto nu = (P.Y * Q.X - Q.Y * P.X) / dx;
  auto x3 = lam * lam + rf(E.a1()) * lam - rf(E.a2()) - P.X - Q.X;
  return FFPoint::affine(x3, -(lam + rf(E.a1())) * x3 - nu - rf(E.a3()));
}

FFPoint ec_group_law(const FFEllipticCurve& E, const FFPoint& P, const FFPoint& Q, GroupOp op) {
  switch (op) {
    case GroupOp::add: return ec_add(E, P, Q);
    case GroupOp::neg: return ec_neg(E, P);
    case GroupOp::dbl: return ec_double(E, P);
  }
  throw InvalidArgument("unknown group operation");
}

FFPoint ec_mul(const FFEllipticCurve& E, const FFPoint& P, long n) {
  FFPoint base = n < 0 ? ec_neg(E, P) : P;
  unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  FFPoint acc = FFPoint::identity();
  while (m) {
    if (m & 1) acc = ec_add(E, acc, base);
    m >>= 1;
    if (m) base = ec_double(E, base);
  }
  return acc;
}

FFPoint ec_combination(const FFEllipticCurve& E, const std::vector<FFPoint>& pts, const std::vector<long>& c) {
  if (pts.size() != c.size()) throw InvalidArgument("coefficient count does not match point count");
  FFPoint acc = FFPoint::identity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (c[i]) acc = ec_add(E, acc, ec_mul(E, pts[i], c[i]));
  return acc;
}

}  // namespace aslab

#include "aslab/height.hpp"

#include <algorithm>

#include "aslab/errors.hpp"

namespace aslab {

namespace {

// v_pi(f), stopping once `cap` is reached.
unsigned valuation(const Poly& f, const Poly& pi, unsigned cap) {
  if (f.is_zero()) return cap;
  Poly g = f;
  unsigned v = 0;
  while (v < cap) {
    auto [q, r] = divmod(g, pi);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++v;
  }
  return v;
}

Poly exact_div_pow(const Poly& f, const Poly& pi, unsigned k) {
  if (k == 0 || f.is_zero()) return f;
  return f / pi.pow(k);
}

// Weighted projective point (X : Y : Z) with x = X/Z^2, y = Y/Z^3.
class JacobianChain {
 public:
  JacobianChain(const FFEllipticCurve& E, const FFPoint& P) : E_(E) {
    if (P.is_identity()) {
      identity_ = true;
      return;
    }
    const Poly& b = P.X.den();
    const Poly& d = P.Y.den();
    auto [z, rem] = divmod(d, b);
    if (!rem.is_zero() || z * z != b)
      throw CheckFailed("point denominators are not of the form (Z^2, Z^3): " + P.to_string());
    X_ = P.X.num();
    Y_ = P.Y.num();
    Z_ = z;
  }

  bool is_identity() const { return identity_; }

  long height() const {
    if (identity_) return 0;
    return std::max<long>({0L, X_.degree(), 2L * Z_.degree()});
  }

  void step() {
    if (identity_) return;
    const FieldPtr& F = E_.field();
    auto k = [&](std::int64_t c) { return Poly::constant(F, F->from_int(c)); };
    Poly Z2 = Z_ * Z_;
    Poly Z3 = Z2 * Z_;
    Poly XZ = X_ * Z_;
    Poly N = k(3) * X_ * X_ - E_.a1() * Y_ * Z_;
    if (!E_.a2().is_zero()) N += k(2) * E_.a2() * X_ * Z2;
    if (!E_.a4().is_zero()) N += E_.a4() * Z2 * Z2;
    Poly Dn = k(2) * Y_;
    if (!E_.a1().is_zero()) Dn += E_.a1() * XZ;
    if (!E_.a3().is_zero()) Dn += E_.a3() * Z3;
    if (Dn.is_zero()) {
      identity_ = true;
      return;
    }
    Poly Zn = Z_ * Dn;
    Poly D2 = Dn * Dn;
    Poly XD2 = X_ * D2;
    Poly Xn = N * N - k(2) * XD2;
    if (!E_.a1().is_zero()) Xn += E_.a1() * N * Zn;
    if (!E_.a2().is_zero()) Xn -= E_.a2() * Zn * Zn;
    Poly Yn = N * (XD2 - Xn) - Y_ * D2 * Dn;
    if (!E_.a1().is_zero()) Yn -= E_.a1() * Xn * Zn;
    if (!E_.a3().is_zero()) Yn -= E_.a3() * Zn * Zn * Zn;
    X_ = std::move(Xn);
    Y_ = std::move(Yn);
    Z_ = std::move(Zn);
    strip();
  }

 private:
  const FFEllipticCurve& E_;
  Poly X_, Y_, Z_;
  bool identity_ = false;

  // Off the bad primes the doubling map has no base points, so common factors
  // can only appear there.
  void strip() {
    for (const Poly& pi : E_.bad_primes()) {
      unsigned k = valuation(Z_, pi, ~0u);
      if (k == 0) continue;
      k = std::min(k, valuation(X_, pi, 2 * k) / 2);
      if (k == 0) continue;
      k = std::min(k, valuation(Y_, pi, 3 * k) / 3);
      if (k == 0) continue;
      X_ = exact_div_pow(X_, pi, 2 * k);
      Y_ = exact_div_pow(Y_, pi, 3 * k);
      Z_ = exact_div_pow(Z_, pi, k);
    }
  }
};

mpq_class round_to(long h, int n, long D) {
  mpz_class num = mpz_class(h) * D;
  mpz_class den = mpz_class(1) << (2 * n);
  mpz_class r;
  mpz_class twice = 2 * num + den;
  mpz_class d2 = 2 * den;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
  mpq_class out(r, D);
  out.canonicalize();
  return out;
}

}  // namespace

long naive_height(const FFPoint& P) {
  if (P.is_identity()) return 0;
  return P.X.height();
}

std::vector<long> doubling_heights(const FFEllipticCurve& E, const FFPoint& P, int max_n) {
  JacobianChain c(E, P);
  std::vector<long> out;
  for (int n = 0; n <= max_n; ++n) {
    if (n) c.step();
    out.push_back(c.height());
  }
  return out;
}

long height_error_bound(const FFEllipticCurve& E) {
  long N = 0;
  const Poly* a[] = {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()};
  const long w[] = {1, 2, 3, 4, 6};
  for (int i = 0; i < 5; ++i)
    if (a[i]->degree() > 0) N = std::max(N, (a[i]->degree() + w[i] - 1) / w[i]);
  long C = 3 * N;
  for (const Poly& pi : E.bad_primes()) {
    unsigned v = valuation(E.discriminant(), pi, ~0u);
    C += 2 * static_cast<long>(v / 12) * pi.degree();
  }
  return C;
}

int required_doublings(const FFEllipticCurve& E) {
  const mpz_class need = mpz_class(2) * E.height_denominator() * height_error_bound(E);
  int n = 1;
  while (mpz_class(1) << (2 * (n - 1)) <= need) ++n;
  return n;
}

HeightTrace canonical_height_trace(const FFEllipticCurve& E, const FFPoint& P) {
  if (!E.contains(P)) throw InvalidArgument("point is not on the curve: " + P.to_string());
  const long D = E.height_denominator();
  const int need = required_doublings(E);
  if (need > kMaxDoublings)
    throw CheckFailed("height rounding needs " + std::to_string(need) + " doublings, cap is " +
                      std::to_string(kMaxDoublings));
  HeightTrace t;
  JacobianChain c(E, P);
  for (int n = 0; n <= need; ++n) {
    if (n) c.step();
    t.naive.push_back(c.height());
    t.rounded.push_back(round_to(t.naive.back(), n, D));
    if (c.is_identity()) {
      // torsion
      t.value = 0;
      t.doublings = n;
      return t;
    }
  }
  if (t.rounded[need] != t.rounded[need - 1])
    throw CheckFailed("canonical height did not stabilize by n = " + std::to_string(need) + " for " + P.to_string() +
                      " (estimates " + t.rounded[need - 1].get_str() + ", " + t.rounded[need].get_str() + ")");
  t.value = t.rounded[need];
  t.doublings = need;
  return t;
}

mpq_class canonical_height(const FFEllipticCurve& E, const FFPoint& P) { return canonical_height_trace(E, P).value; }

mpq_class canonical_pairing(const FFEllipticCurve& E, const FFPoint& P, const FFPoint& Q) {
  if (P.is_identity() || Q.is_identity()) return 0;
  mpq_class s = canonical_height(E, ec_add(E, P, Q)) - canonical_height(E, P) - canonical_height(E, Q);
  return s / 2;
}

}  // namespace aslab

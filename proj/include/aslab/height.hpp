#pragma once

#include <vector>

#include <gmpxx.h>

#include "aslab/ellcurve.hpp"

namespace aslab {

/// Degree of X(P) as a map to the projective line; 0 for the identity.
long naive_height(const FFPoint& P);

/// Naive heights h(2^n P) for n = 0..max_n, computed in weighted (Jacobian)
/// coordinates over k[u] with common factors stripped at the bad primes.
std::vector<long> doubling_heights(const FFEllipticCurve& E, const FFPoint& P, int max_n);

struct HeightTrace {
  mpq_class value;
  int doublings = 0;              // last n computed
  std::vector<long> naive;        // h(2^n P)
  std::vector<mpq_class> rounded;  // estimates rounded to the curve's denominator
};

inline constexpr int kMaxDoublings = 8;

/// C with |h(2^n P) - 4^n <P,P>| <= C for every P: 3N for a model of weight N
/// (deg a_i <= iN), plus slack at finite places where the model may fail to be minimal.
long height_error_bound(const FFEllipticCurve& E);
/// Least n with C / 4^(n-1) < 1 / (2D), D = E.height_denominator().
int required_doublings(const FFEllipticCurve& E);

/// <P,P> = lim 4^-n h(2^n P).  Estimates are rounded to multiples of
/// 1/E.height_denominator(); at n = required_doublings(E) the rounded estimates
/// for n-1 and n must agree and are returned.  Throws CheckFailed when they
/// differ or when n would exceed 8.
HeightTrace canonical_height_trace(const FFEllipticCurve& E, const FFPoint& P);
mpq_class canonical_height(const FFEllipticCurve& E, const FFPoint& P);
/// (<P+Q,P+Q> - <P,P> - <Q,Q>) / 2
mpq_class canonical_pairing(const FFEllipticCurve& E, const FFPoint& P, const FFPoint& Q);

}  // namespace aslab

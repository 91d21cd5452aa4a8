#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "aslab/ellcurve.hpp"

namespace aslab {

/// Y^2 + tY = X^3 over F_{q^2}(u), t = u^q - u, q = 2 mod 3.
struct IsoFamily {
  std::uint64_t q = 0;
  FieldPtr K;                 // F_{q^2}
  FFEllipticCurve E;
  Elem zeta = 0;              // least primitive cube root of unity in K
  std::vector<Elem> alphas;   // F_q inside K, ascending
  std::vector<FFPoint> points;  // P_{i,a} at index i*q + (position of a)
  std::vector<std::string> labels;
  FFPoint T1, T2;             // (0,0) and (0,-t)

  std::size_t index(unsigned i, std::size_t a) const { return i * q + a; }
  std::size_t alpha_index(Elem a) const;
};

IsoFamily iso_family(std::uint64_t q);

/// Translation u -> u + a composed with X -> zeta^j X.
FFPoint iso_act(const IsoFamily& fam, const FFPoint& P, unsigned j, Elem a);

struct IsoExtraPoints {
  std::vector<Elem> betas;      // one per orbit representative
  std::vector<FFPoint> base;    // P_beta for the representatives
  std::vector<FFPoint> orbit;   // all distinct T_a Z^j P_beta
  std::vector<std::string> orbit_labels;
};

/// P_beta for beta^(q-1) = -1 (p odd), or beta outside F_q (p = 2, one beta per
/// coset of F_q since translation permutes them), plus the full orbit of
/// 3q(q-1) points.
IsoExtraPoints iso_extra_points(const IsoFamily& fam);
IsoExtraPoints iso_extra_points(std::uint64_t q);

/// Y^2 = X(X + 16b^2)(X + t^2) over F_q(u), t = u^q - u.
struct NonIsoFamily {
  std::uint64_t q = 0;
  FieldPtr F;
  Elem b = 0;
  FFEllipticCurve E;
  std::vector<Elem> alphas;      // F_q ascending
  std::vector<FFPoint> points;   // P_alpha
  std::vector<std::string> labels;
};

NonIsoFamily noniso_family(std::uint64_t q, Elem b);

/// -1 - sum_beta chi(beta(beta+4b)(beta-gamma)(beta-gamma+4b)).
long trace_gamma(const FieldPtr& F, Elem b, Elem gamma);
/// q + 1 - #X'_gamma(F_q) from an enumeration of s3^2 = (s1^2-4a)(s1^2-2 gamma s1+gamma^2-4a),
/// a = b^2, plus the two points at infinity.
long trace_gamma_by_count(const FieldPtr& F, Elem b, Elem gamma);

}  // namespace aslab

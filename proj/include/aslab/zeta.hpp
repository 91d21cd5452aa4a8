#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "aslab/addpoly.hpp"
#include "aslab/ascurve.hpp"
#include "aslab/ratfun.hpp"

namespace aslab {

struct CurveEquation {
  enum class Kind { artin_schreier, plane_affine };
  struct Term {
    unsigned x_exp, z_exp;
    Elem coeff;
  };

  Kind kind = Kind::artin_schreier;
  FieldPtr base;
  // artin_schreier: A(z) = f(x), with A = z^q - z unless given
  std::optional<AdditivePolynomial> A;
  RationalFunction f;
  // plane_affine: sum coeff x^i z^j = 0, plus a fixed number of points at infinity
  std::vector<Term> terms;
  std::int64_t points_at_infinity = 0;

  static CurveEquation artin_schreier(const FieldPtr& base, std::uint64_t q, const RationalFunction& f);
  static CurveEquation artin_schreier(const AdditivePolynomial& A, const RationalFunction& f);
  static CurveEquation plane_affine(const FieldPtr& base, std::vector<Term> terms, std::int64_t points_at_infinity);

  /// Pole multiplicities of f over the algebraic closure (one entry per geometric pole)
  /// and the corresponding cover spec with q = deg A.  Throws if a pole order is divisible by p.
  ASCoverSpec spec() const;
};

/// Points of the smooth projective model over the degree-k extension of the base field.
mpz_class count_points(const CurveEquation& eq, unsigned k);
/// Same count for an Artin-Schreier equation, enumerating z first and histogramming A(z).
mpz_class count_points_z_major(const CurveEquation& eq, unsigned k);

struct LPolynomial {
  std::vector<mpz_class> coeffs;  // a_0 = 1, ..., a_{2g}
  mpz_class r;

  int genus() const { return static_cast<int>(coeffs.size() - 1) / 2; }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool functional_equation_holds() const;
  /// Predicted N_k from the polynomial.
  mpz_class predicted_count(unsigned k) const;
  std::string to_string(const std::string& var = "T") const;
  bool operator==(const LPolynomial& o) const { return coeffs == o.coeffs && r == o.r; }
};

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b);

/// Needs at least g counts N_1, N_2, ...; counts beyond what determines L are checked against it.
LPolynomial l_polynomial(const std::vector<mpz_class>& counts, int g, const mpz_class& r);
/// Largest relative deviation of |alpha| from sqrt(r) over the inverse roots.
long double rh_deviation(const LPolynomial& L);

SlopeSet slopes(const LPolynomial& L, std::uint32_t p);
int prank_from_L(const LPolynomial& L, std::uint32_t p);
/// Multiplicity of the factor 1 + r^nu T^{2 nu}.
int ss_divisibility(const LPolynomial& L, const mpz_class& r, unsigned nu);
/// True iff every breakpoint of the Newton polygon lies on or above the Hodge polygon
/// and both end at the same point.
bool newton_above_hodge(const SlopeSet& newton, const SlopeSet& hodge);

/// Counts k = 1..g+extra and assembles L; throws BudgetExceeded when a count is too large.
struct ZetaResult {
  std::vector<mpz_class> counts;
  LPolynomial L;
};
ZetaResult zeta_of(const CurveEquation& eq, int g, unsigned extra = 1);

struct DecomposeReport {
  LPolynomial big;
  std::vector<Elem> representatives;
  std::vector<LPolynomial> factors;
  LPolynomial product;
  bool equal = false;
};
/// Compares L(z^q - z = f) with the product of L(z^p - z = mu f) over coset representatives
/// mu of F_p^* in F_q^*, all over F_q = f's coefficient field.
DecomposeReport decompose_check(const RationalFunction& f);

/// x^{a1} + x^{-a2} + (x-1)^{-a3} + ... : a rational function over F_p with poles of the
/// requested orders at infinity, 0, 1, 2, ...
RationalFunction default_function(const FieldPtr& F, const std::vector<std::int64_t>& poles);

/// Parses "q=9,f=x^2" (optionally "A=[(0,1),(1,1)]" instead of q) over the given base field.
CurveEquation parse_as_equation(const FieldPtr& base, const std::string& s);

}  // namespace aslab

#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "aslab/families.hpp"

namespace aslab {

using RatMatrix = std::vector<std::vector<mpq_class>>;

struct Gram {
  std::vector<std::string> labels;
  RatMatrix entries;

  std::size_t size() const { return labels.size(); }
  bool symmetric() const;
  Gram submatrix(const std::vector<std::size_t>& idx) const;
};

// exact linear algebra over Q
std::size_t rational_rank(RatMatrix M);
mpq_class rational_det(RatMatrix M);
/// Solves M x = b for square nonsingular M.
std::vector<mpq_class> rational_solve(RatMatrix M, std::vector<mpq_class> b);
/// Primitive integer vectors spanning the kernel of M, one per free column.
std::vector<std::vector<mpz_class>> integer_kernel(const RatMatrix& M);
/// |det| of the lattice spanned by integer rows of full column rank.
mpz_class lattice_determinant(std::vector<std::vector<mpz_class>> rows);

/// Oracle Gram of canonical pairings; entries are computed in parallel.
Gram oracle_gram(const FFEllipticCurve& E, const std::vector<FFPoint>& pts, const std::vector<std::string>& labels);

/// Table for <P_{i,a}, P_{0,0}> translated to every pair, ordered as IsoFamily::points.
Gram iso_gram_closed(std::uint64_t q);
Gram noniso_gram_closed(std::uint64_t q, Elem b);
/// q^(2(q-2)) 3^(1-q)
mpq_class iso_discriminant_closed(std::uint64_t q);

/// {P_{i,a} : i in {1,2}, a != 0}
std::vector<std::size_t> iso_basis(std::uint64_t q);
/// {P_a : a != 0}
std::vector<std::size_t> noniso_basis(std::uint64_t q);

struct LatticeReport {
  std::size_t rank = 0;
  std::vector<std::size_t> basis;
  std::vector<std::string> basis_labels;
  mpq_class discriminant;
  std::vector<std::vector<mpz_class>> relations;
};

/// Rank over Q, discriminant of the Gram submatrix on `basis` (pivot columns
/// when empty) and an integer basis of the relations.  Throws CheckFailed when
/// the basis has rank-many elements but a singular Gram.
LatticeReport lattice_report(const Gram& g, const std::vector<std::size_t>& basis = {});

struct GramMismatch {
  std::size_t i, j;
  mpq_class lhs, rhs;
};
std::vector<GramMismatch> compare_grams(const Gram& a, const Gram& b);

struct IndexReport {
  std::uint64_t q = 0;
  mpq_class det_V, det_V1, index;
  mpz_class conjectured;
  bool integral = false;
  bool match = false;
  bool det_V_matches_closed = false;
  bool orbit_in_span = false;  // <P_b,P_b> agrees with its coordinates in V
  std::size_t orbit_size = 0;
  RatMatrix beta_rows;          // <P_b, P_{i,a}> for each representative b
};

/// [V_1 : V] from oracle pairings.  Uses the automorphism invariance
/// <T_a Z^j P_b, P_{i,c}> = <P_b, P_{i-j, c-a}>, so only the representatives'
/// pairings are computed.
IndexReport index_conjecture_check(std::uint64_t q);

}  // namespace aslab

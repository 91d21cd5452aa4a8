#pragma once

#include <vector>

#include "aslab/poly.hpp"

namespace aslab {

struct Factor {
  Poly poly;          // monic irreducible
  unsigned multiplicity;
};

/// Squarefree decomposition: pairs (g_i, i) with f = lead * prod g_i^i, g_i squarefree and coprime.
std::vector<Factor> squarefree_decomposition(const Poly& f);
/// Distinct-degree factorization of a squarefree monic polynomial: (product of degree-d factors, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f);
/// Splits a squarefree monic product of degree-d irreducibles into its factors.
std::vector<Poly> equal_degree(const Poly& f, unsigned d);
/// Complete factorization into monic irreducibles, sorted by (degree, coefficients).
std::vector<Factor> factor(const Poly& f);
/// Distinct roots in the coefficient field, ascending.
std::vector<Elem> roots(const Poly& f);

}  // namespace aslab

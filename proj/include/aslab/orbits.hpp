#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "aslab/field.hpp"

namespace aslab {

/// Partition of a Frobenius-stable set into orbits of x -> x^r.
/// Orbits are listed by least element, so {0} comes first when present.
struct OrbitPartition {
  FieldPtr field;
  std::uint64_t r = 0;
  std::vector<std::vector<Elem>> orbits;  // each orbit in the order beta, beta^r, beta^{r^2}, ...
};

OrbitPartition frobenius_orbits(const FieldPtr& F, std::vector<Elem> S, std::uint64_t r);

struct SelfDualOrbits {
  std::size_t count = 0;
  mpq_class bound;        // (r^nu - 1) / (2 nu)
  OrbitPartition orbits;  // nontrivial orbits only
  std::uint64_t root_count = 0;
};

/// Nontrivial orbits of Fr_r on the roots of z^{r^nu} + z in F_{r^{2 nu}}; each is checked
/// to be closed under negation.
SelfDualOrbits self_dual_orbits(std::uint64_t r, unsigned nu);

struct RamifiedPlace {
  std::int64_t pole_order;
  std::int64_t degree;
};

struct AwayPlace {
  std::int64_t conductor_exponent;
  std::int64_t degree;
};

struct ConductorData {
  std::vector<RamifiedPlace> ramified;
  std::vector<AwayPlace> away;
  std::int64_t rho_degree = 2;

  std::int64_t away_degree() const;
  /// Throws unless rho_degree is even and >= 2 and every pole order is prime to p.
  void validate(std::uint32_t p) const;
};

/// deg cond(rho (x) chi_beta) for beta != 0.
std::int64_t twisted_conductor_degree(const ConductorData& cd, std::uint32_t p);

struct RankBound {
  mpq_class over_k;
  mpz_class over_kprime;
  bool parity_satisfied = false;
};

RankBound analytic_rank_lower_bound(std::uint64_t r, unsigned nu, const ConductorData& cd);

/// (r^nu - 1)/2 when sum(a_i + 1) is odd, else 0.
mpz_class ss_multiplicity_lower_bound(std::uint64_t r, unsigned nu, const std::vector<std::int64_t>& pole_type);

/// Characteristic of a prime power r; throws when r is not one.
std::uint32_t characteristic_of(std::uint64_t r);

}  // namespace aslab

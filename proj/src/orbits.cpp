#include "aslab/orbits.hpp"

#include <algorithm>
#include <set>

#include "aslab/addpoly.hpp"
#include "aslab/errors.hpp"

namespace aslab {

std::uint32_t characteristic_of(std::uint64_t r) {
  if (r < 2) throw InvalidArgument("not a prime power: " + std::to_string(r));
  auto f = prime_factors(r);
  if (f.size() != 1) throw InvalidArgument("not a prime power: " + std::to_string(r));
  return static_cast<std::uint32_t>(f[0]);
}

OrbitPartition frobenius_orbits(const FieldPtr& F, std::vector<Elem> S, std::uint64_t r) {
  if (log_p(r, F->p()) < 1) throw InvalidArgument("r must be a power of p");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  std::set<Elem> seen;
  OrbitPartition out{F, r, {}};
  for (Elem s : S) {
    if (!F->contains(s)) throw InvalidArgument("element outside the field");
    if (seen.count(s)) continue;
    std::vector<Elem> orbit;
    Elem x = s;
    do {
      if (!std::binary_search(S.begin(), S.end(), x)) throw InvalidArgument("set is not Frobenius-stable");
      orbit.push_back(x);
      seen.insert(x);
      x = F->frobenius(x, r);
    } while (x != s);
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

SelfDualOrbits self_dual_orbits(std::uint64_t r, unsigned nu) {
  const std::uint32_t p = characteristic_of(r);
  if (p == 2) throw InvalidArgument("r must be odd");
  if (nu < 1) throw InvalidArgument("nu must be positive");
  const int e = log_p(r, p);
  const unsigned n = 2 * nu * static_cast<unsigned>(e);
  auto F = make_field(p, n);
  std::vector<Elem> coeffs(nu * e + 1, 0);
  coeffs.front() = 1;
  coeffs.back() = 1;
  AdditivePolynomial A(F, coeffs);
  auto roots = poly_to_roots(A, F);
  auto part = frobenius_orbits(F, roots.elements, r);

  SelfDualOrbits out;
  out.root_count = roots.elements.size();
  mpz_class rn;
  mpz_ui_pow_ui(rn.get_mpz_t(), r, nu);
  out.bound = mpq_class(rn - 1, 2 * nu);
  out.bound.canonicalize();
  out.orbits.field = F;
  out.orbits.r = r;
  for (auto& o : part.orbits) {
    if (o.size() == 1 && o[0] == 0) continue;
    std::vector<Elem> sorted = o, negated;
    for (Elem b : o) negated.push_back(F->neg(b));
    std::sort(sorted.begin(), sorted.end());
    std::sort(negated.begin(), negated.end());
    if (sorted != negated) throw CheckFailed("orbit is not closed under negation");
    if ((2 * nu) % o.size() != 0) throw CheckFailed("orbit size does not divide 2 nu");
    out.orbits.orbits.push_back(std::move(o));
  }
  out.count = out.orbits.orbits.size();
  return out;
}

std::int64_t ConductorData::away_degree() const {
  std::int64_t s = 0;
  for (const auto& a : away) s += a.conductor_exponent * a.degree;
  return s;
}

void ConductorData::validate(std::uint32_t p) const {
  if (rho_degree < 2 || rho_degree % 2 != 0) throw InvalidArgument("rho degree must be even and at least 2");
  for (const auto& v : ramified) {
    if (v.pole_order < 1 || v.degree < 1) throw InvalidArgument("pole orders and place degrees must be positive");
    if (v.pole_order % p == 0) throw InvalidArgument("pole order divisible by p");
  }
  for (const auto& a : away)
    if (a.conductor_exponent < 0 || a.degree < 1) throw InvalidArgument("bad away-part entry");
}

std::int64_t twisted_conductor_degree(const ConductorData& cd, std::uint32_t p) {
  cd.validate(p);
  std::int64_t s = cd.away_degree();
  for (const auto& v : cd.ramified) s += cd.rho_degree * (v.pole_order + 1) * v.degree;
  return s;
}

RankBound analytic_rank_lower_bound(std::uint64_t r, unsigned nu, const ConductorData& cd) {
  const std::uint32_t p = characteristic_of(r);
  if (p == 2) throw InvalidArgument("r must be odd");
  if (nu < 1) throw InvalidArgument("nu must be positive");
  cd.validate(p);
  RankBound b;
  b.parity_satisfied = cd.away_degree() % 2 != 0;
  if (b.parity_satisfied) {
    mpz_class rn;
    mpz_ui_pow_ui(rn.get_mpz_t(), r, nu);
    b.over_kprime = rn - 1;
    b.over_k = mpq_class(rn - 1, 2 * nu);
    b.over_k.canonicalize();
  }
  return b;
}

mpz_class ss_multiplicity_lower_bound(std::uint64_t r, unsigned nu, const std::vector<std::int64_t>& pole_type) {
  const std::uint32_t p = characteristic_of(r);
  if (p == 2) throw InvalidArgument("r must be odd");
  std::int64_t s = 0;
  for (auto a : pole_type) {
    if (a < 1) throw InvalidArgument("pole orders must be positive");
    if (a % p == 0) throw InvalidArgument("pole order divisible by p");
    s += a + 1;
  }
  if (s % 2 == 0) return 0;
  mpz_class rn;
  mpz_ui_pow_ui(rn.get_mpz_t(), r, nu);
  return (rn - 1) / 2;
}

}  // namespace aslab

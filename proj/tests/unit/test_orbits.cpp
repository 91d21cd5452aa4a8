#include <algorithm>
#include <map>

#include "aslab/addpoly.hpp"
#include "aslab/errors.hpp"
#include "aslab/orbits.hpp"
#include "doctest.h"

using namespace aslab;

namespace {

// roots of z^{r^nu} + z by exhaustive search
std::vector<Elem> brute_roots(const Field& F, std::uint64_t rn) {
  std::vector<Elem> out;
  for (Elem z = 0; z < F.size(); ++z)
    if (F.add(F.pow(z, rn), z) == 0) out.push_back(z);
  return out;
}

// least d with z^{r^d} = z
unsigned period(const Field& F, Elem z, std::uint64_t r) {
  unsigned d = 1;
  for (Elem w = F.pow(z, r); w != z; w = F.pow(w, r)) ++d;
  return d;
}

std::size_t oracle_orbit_count(std::uint64_t r, unsigned nu, unsigned n) {
  auto F = make_field(static_cast<std::uint32_t>(prime_factors(r)[0]), n);
  std::uint64_t rn = 1;
  for (unsigned i = 0; i < nu; ++i) rn *= r;
  std::map<unsigned, std::size_t> by_period;
  for (Elem z : brute_roots(*F, rn))
    if (z) ++by_period[period(*F, z, r)];
  std::size_t c = 0;
  for (auto [d, k] : by_period) {
    REQUIRE(k % d == 0);
    c += k / d;
  }
  return c;
}

}  // namespace

TEST_SUITE("orbits") {

TEST_CASE("frobenius_orbits examples") {
  auto F9 = make_field(3, 2);
  auto P = frobenius_orbits(F9, {0}, 3);
  CHECK(P.orbits == std::vector<std::vector<Elem>>{{0}});
  Elem i = F9->generator();
  auto Q = frobenius_orbits(F9, brute_roots(*F9, 3), 3);
  REQUIRE(Q.orbits.size() == 2);
  CHECK(Q.orbits[0] == std::vector<Elem>{0});
  auto o = Q.orbits[1];
  std::sort(o.begin(), o.end());
  std::vector<Elem> expect{i, F9->neg(i)};
  std::sort(expect.begin(), expect.end());
  CHECK(o == expect);

  auto F25 = make_field(5, 2);
  auto R = frobenius_orbits(F25, brute_roots(*F25, 5), 5);
  REQUIRE(R.orbits.size() == 3);
  CHECK(R.orbits[0] == std::vector<Elem>{0});
  CHECK(R.orbits[1].size() == 2);
  CHECK(R.orbits[2].size() == 2);
  CHECK_THROWS_AS(frobenius_orbits(F9, {0, i}, 3), InvalidArgument);
}

TEST_CASE("self_dual_orbits examples") {
  auto a = self_dual_orbits(3, 1);
  CHECK(a.count == 1);
  CHECK(a.bound == 1);
  auto b = self_dual_orbits(5, 1);
  CHECK(b.count == 2);
  CHECK(b.bound == 2);
  auto c = self_dual_orbits(3, 2);
  CHECK(c.bound == 2);
  CHECK(c.count == oracle_orbit_count(3, 2, 4));
  CHECK(c.count >= 2);
  CHECK_THROWS_AS(self_dual_orbits(4, 1), InvalidArgument);
  CHECK_THROWS_AS(self_dual_orbits(6, 1), InvalidArgument);
}

TEST_CASE("self-dual orbit properties") {
  struct Case {
    std::uint64_t r;
    unsigned nu, n;
  };
  for (auto [r, nu, n] : {Case{3, 1, 2}, Case{5, 1, 2}, Case{7, 1, 2}, Case{3, 2, 4}, Case{9, 1, 4}, Case{11, 1, 2}}) {
    auto s = self_dual_orbits(r, nu);
    const auto& F = *s.orbits.field;
    CHECK(s.count == oracle_orbit_count(r, nu, n));
    CHECK(s.count >= s.bound);
    std::uint64_t rn = 1;
    for (unsigned i = 0; i < nu; ++i) rn *= r;
    std::size_t total = 1;
    for (const auto& o : s.orbits.orbits) {
      total += o.size();
      std::vector<Elem> a = o, neg;
      for (Elem x : o) neg.push_back(F.neg(x));
      std::sort(a.begin(), a.end());
      std::sort(neg.begin(), neg.end());
      CHECK(a == neg);
      CHECK((2 * nu) % o.size() == 0);
      // minimal polynomial over F_r has degree |o| and Frobenius-fixed coefficients
      auto Fp = s.orbits.field;
      Poly m = Poly::constant(Fp, 1);
      for (Elem x : o) m = m * Poly::linear(Fp, x);
      CHECK(m.degree() == static_cast<int>(o.size()));
      for (Elem c : m.coeffs()) CHECK(F.pow(c, r) == c);
      CHECK(period(F, o[0], r) == o.size());
    }
    CHECK(total == rn);
  }
}

TEST_CASE("conductor degree") {
  ConductorData a{{{1, 1}}, {{3, 1}}, 2};
  CHECK(twisted_conductor_degree(a, 3) == 7);
  ConductorData b{{}, {{2, 1}, {1, 3}}, 2};
  CHECK(twisted_conductor_degree(b, 5) == 5);
  ConductorData c{{{2, 1}}, {}, 2};
  CHECK(twisted_conductor_degree(c, 3) == 6);
  CHECK_THROWS_AS(twisted_conductor_degree(ConductorData{{{3, 1}}, {}, 2}, 3), InvalidArgument);
  CHECK_THROWS_AS(twisted_conductor_degree(ConductorData{{}, {}, 3}, 3), InvalidArgument);
}

TEST_CASE("analytic rank lower bound") {
  ConductorData odd{{{1, 1}}, {{3, 1}}, 2};
  auto b = analytic_rank_lower_bound(3, 1, odd);
  CHECK(b.parity_satisfied);
  CHECK(b.over_k == 1);
  CHECK(b.over_kprime == 2);
  b = analytic_rank_lower_bound(5, 1, odd);
  CHECK(b.over_k == 2);
  CHECK(b.over_kprime == 4);
  ConductorData even{{{1, 1}}, {{2, 1}}, 2};
  for (std::uint64_t r : {3, 5, 9}) {
    b = analytic_rank_lower_bound(r, 2, even);
    CHECK_FALSE(b.parity_satisfied);
    CHECK(b.over_k == 0);
    CHECK(b.over_kprime == 0);
  }
  // over_kprime = 2 nu * over_k
  for (unsigned nu = 1; nu <= 4; ++nu) {
    b = analytic_rank_lower_bound(7, nu, odd);
    CHECK(mpq_class(b.over_kprime) == 2 * nu * b.over_k);
  }
}

TEST_CASE("supersingular multiplicity bound") {
  CHECK(ss_multiplicity_lower_bound(3, 1, {2}) == 1);
  CHECK(ss_multiplicity_lower_bound(5, 1, {2}) == 2);
  CHECK(ss_multiplicity_lower_bound(3, 1, {1, 1}) == 0);
  CHECK(ss_multiplicity_lower_bound(3, 2, {4}) == 4);
  CHECK_THROWS_AS(ss_multiplicity_lower_bound(3, 1, {3}), InvalidArgument);
}

}  // TEST_SUITE

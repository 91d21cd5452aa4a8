#include <numeric>
#include <random>

#include "aslab/berger.hpp"
#include "aslab/errors.hpp"
#include "doctest.h"

using namespace aslab;

namespace {

// subtractive Euclid steps from (a, b) to (gcd, 0)
std::int64_t euclid_steps(std::int64_t a, std::int64_t b) {
  std::int64_t n = 0;
  while (a && b) {
    if (a < b) std::swap(a, b);
    a -= b;
    ++n;
  }
  return n;
}

PairType random_type(std::mt19937_64& rng, int maxpole) {
  PairType t;
  int m = 1 + rng() % 3, n = 1 + rng() % 3;
  for (int i = 0; i < m; ++i) t.a.push_back(1 + rng() % maxpole);
  for (int j = 0; j < n; ++j) t.b.push_back(1 + rng() % maxpole);
  return t;
}

}  // namespace

TEST_SUITE("berger") {

TEST_CASE("delta examples") {
  CHECK(delta(2, 1) == 0);
  CHECK(delta(2, 4) == 2);
  CHECK(delta(4, 6) == 8);
  for (int a = 1; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b) {
      CHECK(delta(a, b) == delta(b, a));
      CHECK(delta(a, b) >= 0);
    }
}

TEST_CASE("resolution_counts examples") {
  auto r = resolution_counts(4, 6);
  CHECK(r.gamma == 3);
  CHECK(r.delta_stage3 == 12);
  CHECK(r.c == 2);
  CHECK(r.total_blowups == 27);
  CHECK(r.N_ij == 25);
  auto s = resolution_counts(1, 1);
  CHECK(s.gamma == 1);
  CHECK(s.delta_stage3 == 1);
  CHECK(s.total_blowups == 2);
  CHECK(s.N_ij == 1);
  for (int a = 1; a <= 10; ++a) {
    auto t = resolution_counts(a, a);
    CHECK(t.delta_stage3 == a);
    CHECK(t.total_blowups == 1 + a * a);
    CHECK(t.N_ij == 1 + a * a - a);
  }
}

TEST_CASE("resolution identities, a, b <= 30") {
  for (int a = 1; a <= 30; ++a)
    for (int b = 1; b <= 30; ++b) {
      auto r = resolution_counts(a, b);
      CHECK(r.c == std::gcd(a, b));
      CHECK(r.gamma == euclid_steps(a, b));
      CHECK(r.total_blowups == (r.gamma - 1) + 1 + r.c * r.delta_stage3);
      CHECK(r.N_ij == r.total_blowups - r.c);
      CHECK(r.alpha >= r.c);
      CHECK(r.beta >= r.c);
      auto t = resolution_counts(b, a);
      CHECK(t.total_blowups == r.total_blowups);
    }
}

TEST_CASE("genus drops along the staircase, a, b <= 12") {
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b) {
      auto r = resolution_counts(a, b);
      std::int64_t drop = 0;
      for (auto e : r.multiplicities) drop += e * (e - 1) / 2;
      PairType t{{a}, {b}, 0, 0};
      CHECK(drop == (a - 1) * (b - 1) - genus_X(t));
      CHECK(drop == delta(a, b));
    }
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto t = random_type(rng, 12);
    std::int64_t drop = 0;
    for (auto x : t.a)
      for (auto y : t.b)
        for (auto e : resolution_counts(x, y).multiplicities) drop += e * (e - 1) / 2;
    if (drop > (t.M() - 1) * (t.N() - 1)) continue;  // negative genus, not a valid type
    CHECK(drop == (t.M() - 1) * (t.N() - 1) - genus_X(t));
  }
}

TEST_CASE("genus_X examples") {
  CHECK(genus_X({{2}, {1, 1}, 0, 0}) == 1);
  CHECK(genus_X({{2}, {4}, 0, 0}) == 1);
  for (int gx = 1; gx <= 8; ++gx) CHECK(genus_X({{2}, {2 * gx + 2}, 0, 0}) == (2 * gx + 2) / 2 - 1);
  CHECK(genus_X({{1, 1}, {1, 1}, 0, 0}) == 1);
  CHECK(genus_X({{3}, {3}, 0, 0}) == 1);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    auto t = random_type(rng, 6);
    t.g_C = rng() % 3;
    t.g_D = rng() % 3;
    PairType s{t.b, t.a, t.g_D, t.g_C};
    std::int64_t g1 = -1, g2 = -2;
    try {
      g1 = genus_X(t);
    } catch (const InvalidArgument&) {
    }
    try {
      g2 = genus_X(s);
    } catch (const InvalidArgument&) {
      g2 = -1;
    }
    CHECK(g1 == g2);
  }
}

TEST_CASE("c1 and c2 examples") {
  CHECK(c2({{1, 1}, {1, 1}, 0, 0}) == 1);
  CHECK(c2({{3}, {3}, 0, 0}) == 2);
  CHECK(c2({{2}, {2, 1}, 0, 0}) == 1);
  CHECK(c1(9, {}) == 0);
  CHECK(c1(9, {{{1, 1}, {2, 1}}}) == 0);
  CHECK(c1(9, {{{1, 2}}}) == 9);
  for (std::uint64_t q : {4, 5, 8, 9}) CHECK(c1(q, {{{1, 3}}}) == 2 * static_cast<std::int64_t>(q));
}

TEST_CASE("rank formula") {
  CHECK(mw_rank(16, 9, 1) == 8);
  CHECK(mw_rank(4 * 4, 2 * 5, 2) == 8);
  CHECK(mw_rank(0, 0, 0) == 0);
  CHECK_THROWS_AS(mw_rank(0, 5, 1), CheckFailed);
  CHECK(ns_rank(0, {{1}, {1}, 0, 0}) == 4);
  CHECK(ns_rank(16, {{1, 1}, {1, 1}, 0, 0}) == 26);
}

TEST_CASE("Shioda-Tate bookkeeping") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    auto t = random_type(rng, 9);
    std::int64_t hom = rng() % 50;
    std::uint64_t q = 2 + rng() % 30;
    FiberData fd;
    for (int i = 0; i < static_cast<int>(rng() % 3); ++i)
      fd.finite_fibers.push_back({1 + static_cast<std::int64_t>(rng() % 2), 1 + static_cast<std::int64_t>(rng() % 3)});
    std::int64_t a = c1(q, fd), b = c2(t);
    if (hom - a + b < 0) continue;
    std::int64_t lhs = ns_rank(hom, t) - mw_rank(hom, a, b) - 2;
    CHECK(lhs == a + fiber_at_infinity(t) - 1);
  }
}

TEST_CASE("presets") {
  for (std::uint64_t q : {3, 5, 9, 25, 27}) {
    auto r = preset_rank(Preset::type_2_11, q);
    CHECK(r.rank == 0);
    CHECK(r.c1 == 0);
    CHECK(r.c2 == 0);
    CHECK(r.genus_X == 1);
  }
  CHECK_THROWS_AS(preset_rank(Preset::type_2_11, 4), InvalidArgument);
  auto f = preset_rank(Preset::f_eq_g_quadratic, 9);
  CHECK(f.rank == 8);
  CHECK(f.c1 == 9);
  CHECK(f.c2 == 1);
  CHECK(f.hom_rank == 16);
  auto cf = preset_rank(Preset::cubic_fermat, 5);
  CHECK(cf.rank == 8);
  CHECK(cf.c1 == 10);
  CHECK(cf.c2 == 2);
  CHECK_THROWS_AS(preset_rank(Preset::cubic_fermat, 7), InvalidArgument);
  CHECK_THROWS_AS(preset_rank(Preset::cubic_fermat, 9), InvalidArgument);
  CHECK(preset_rank(Preset::reciprocal_m, 4, 3).rank == 8);
  CHECK_THROWS_AS(preset_rank(Preset::reciprocal_m, 4, 2), InvalidArgument);
  CHECK_THROWS_AS(preset_rank(Preset::reciprocal_m, 9, 3), InvalidArgument);
  auto g = preset_rank(Preset::generic_selfpair_M, 9, 2);
  CHECK(g.rank == f.rank);

  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    const auto Q = static_cast<std::int64_t>(q);
    const std::uint64_t p = q % 2 == 0 ? 2 : (q % 3 == 0 ? 3 : q % 5 == 0 ? 5 : q);
    CHECK(preset_rank(Preset::f_eq_g_quadratic, q).rank == Q - 1);
    if (p % 3 == 2) CHECK(preset_rank(Preset::cubic_fermat, q).rank == 2 * (Q - 1));
    if (p != 2) CHECK(preset_rank(Preset::type_2_11, q).rank == 0);
    for (std::int64_t m : {3, 5, 7, 9})
      if (std::gcd<std::int64_t>(m, 2 * p) == 1) CHECK(preset_rank(Preset::reciprocal_m, q, m).rank == (Q + m - 3) * (m - 1));
    for (std::int64_t M : {2, 3, 4}) {
      auto r = preset_rank(Preset::generic_selfpair_M, q, M);
      CHECK(r.rank == 2 * (M - 1) * (Q - 1) - Q + r.c2);
      CHECK(r.genus_X == (M - 1) * (M - 1));
    }
  }
}

}  // TEST_SUITE

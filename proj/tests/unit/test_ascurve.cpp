#include <numeric>

#include "aslab/ascurve.hpp"
#include "aslab/errors.hpp"
#include "doctest.h"

using namespace aslab;

namespace {

SlopeSet slopes(std::initializer_list<std::pair<mpq_class, int>> items) {
  SlopeSet s;
  for (const auto& [v, k] : items)
    for (int i = 0; i < k; ++i) s.push_back(v);
  std::sort(s.begin(), s.end());
  return s;
}

// pole types with entries in 1..5, at most 3 poles
std::vector<std::vector<std::int64_t>> small_types() {
  std::vector<std::vector<std::int64_t>> out;
  for (int a = 1; a <= 5; ++a) {
    out.push_back({a});
    for (int b = 1; b <= a; ++b) {
      out.push_back({a, b});
      for (int c = 1; c <= b; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("ascurve") {

TEST_CASE("genus examples") {
  CHECK(as_genus({3, 9, 0, 0, {1, 1}}) == 8);
  CHECK(as_genus({2, 4, 0, 0, {3}}) == 3);
  CHECK(as_genus({3, 3, 0, 0, {2}}) == 1);
  CHECK(as_genus({2, 2, 1, 1, {1}}) == 2);
  CHECK_THROWS_AS(as_genus({3, 9, 0, 0, {3}}), InvalidArgument);
  CHECK_THROWS_AS(as_genus({3, 6, 0, 0, {1}}), InvalidArgument);
  CHECK_THROWS_AS(as_genus({3, 9, 0, 0, {}}), InvalidArgument);
}

TEST_CASE("p-rank examples") {
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 25}) {
    auto p = static_cast<std::uint32_t>(q % 2 == 0 ? 2 : (q % 3 == 0 ? 3 : 5));
    CHECK(as_prank({p, q, 0, 0, {1}}) == 0);
  }
  CHECK(as_prank({3, 9, 0, 0, {1, 1}}) == 8);
  CHECK(as_prank({3, 9, 0, 0, {1, 1}}) == as_genus({3, 9, 0, 0, {1, 1}}));
  CHECK(as_prank({2, 4, 1, 1, {1, 1}}) == 7);
}

TEST_CASE("hodge polygon examples") {
  CHECK(hodge_polygon({3, 3, 0, 0, {2}}) == slopes({{mpq_class(1, 2), 2}}));
  CHECK(hodge_polygon({5, 5, 0, 0, {4}}) == slopes({{mpq_class(1, 4), 4}, {mpq_class(1, 2), 4}, {mpq_class(3, 4), 4}}));
  CHECK(hodge_polygon({3, 9, 0, 0, {1, 1}}) == slopes({{0, 8}, {1, 8}}));
  CHECK_THROWS_AS(hodge_polygon({3, 9, 1, 0, {1}}), InvalidArgument);
}

TEST_CASE("newton equals hodge criterion") {
  CHECK(newton_equals_hodge({5, 5, 0, 0, {4}}));
  for (std::uint32_t p : {2, 3, 5, 7}) CHECK(newton_equals_hodge({p, p, 0, 0, {1, 1, 1}}));
  CHECK(newton_equals_hodge({3, 3, 0, 0, {2}}));
  CHECK_FALSE(newton_equals_hodge({2, 4, 0, 0, {3}}));
  CHECK_FALSE(newton_equals_hodge({5, 5, 0, 0, {3}}));
  CHECK(newton_equals_hodge({7, 7, 0, 0, {3, 2}}));
}

TEST_CASE("endomorphism dimensions") {
  CHECK(endo_dims({3, 9, 0, 0, {1, 1}}, EndoRegime::ordinary) == 16);
  CHECK(endo_dims({3, 9, 0, 0, {2}}, EndoRegime::image_of_group_algebra) == 8);
  CHECK(endo_dims({2, 4, 0, 0, {3}}, EndoRegime::supersingular_invariants) == 12);
  CHECK_THROWS_AS(endo_dims({2, 4, 0, 0, {3}}, EndoRegime::ordinary), InvalidArgument);
  // 4g^2/(q-1) with g = (q-1)(sum-2)/2 is always integral for P^1 covers
  for (const auto& t : small_types())
    for (std::uint32_t p : {2, 3, 5, 7}) {
      bool ok = std::all_of(t.begin(), t.end(), [&](auto a) { return a % p != 0; });
      if (!ok) continue;
      ASCoverSpec s{p, p * p, 0, 0, t};
      CHECK_NOTHROW(endo_dims(s, EndoRegime::supersingular_invariants));
    }
  CHECK(representation_multiplicity({3, 9, 0, 0, {1, 1}}) == 2);
}

TEST_CASE("decompose examples") {
  ASCoverSpec s{3, 3, 0, 0, {2}};
  CHECK(decompose(s).size() == 1);
  CHECK(decompose(s)[0].q == 3);
  auto d = decompose({2, 4, 0, 0, {3}});
  REQUIRE(d.size() == 3);
  for (const auto& f : d) {
    CHECK(f.q == 2);
    CHECK(f.poles == std::vector<std::int64_t>{3});
    CHECK(as_genus(f) == 1);
  }
  CHECK(decompose({3, 27, 0, 0, {1}}).size() == 13);
}

TEST_CASE("invariants over small pole types") {
  for (std::uint32_t p : {2, 3, 5, 7, 11, 13})
    for (std::uint64_t q = p; q <= 16; q *= p)
      for (const auto& t : small_types()) {
        if (std::any_of(t.begin(), t.end(), [&](auto a) { return a % p == 0; })) continue;
        ASCoverSpec s{p, q, 0, 0, t};
        const auto g = as_genus(s);
        const auto pr = as_prank(s);
        CHECK(0 <= pr);
        CHECK(pr <= g);
        auto hp = hodge_polygon(s);
        CHECK(hp.size() == static_cast<std::size_t>(2 * g));
        mpq_class sum = 0;
        for (const auto& v : hp) sum += v;
        CHECK(sum == g);
        for (std::size_t i = 0; i < hp.size(); ++i) CHECK(hp[i] + hp[hp.size() - 1 - i] == 1);
        std::int64_t zeros = std::count(hp.begin(), hp.end(), mpq_class(0));
        CHECK(zeros == pr);
        std::int64_t parts = 0;
        for (const auto& f : decompose(s)) parts += as_genus(f);
        CHECK(parts == g);
      }
}

TEST_CASE("base curves of positive genus") {
  ASCoverSpec s{2, 4, 1, 1, {1, 1}};
  CHECK(as_genus(s) == 7);
  CHECK(as_prank(s) == 7);
  CHECK_THROWS_AS(as_prank({2, 4, 1, 2, {1}}), InvalidArgument);
}

}  // TEST_SUITE

#include <random>
#include <set>

#include "aslab/embed.hpp"
#include "aslab/errors.hpp"
#include "aslab/factor.hpp"
#include "aslab/field.hpp"
#include "aslab/ratfun.hpp"
#include "doctest.h"

using namespace aslab;

namespace {

// Independent oracle: a monic quadratic or cubic over F_p is irreducible iff it has no root.
bool no_root(const std::vector<unsigned>& f, unsigned p) {
  for (unsigned x = 0; x < p; ++x) {
    unsigned long v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return false;
  }
  return true;
}

// least monic irreducible of degree 2 or 3, scanning packed values sum c_i p^i upward
std::vector<unsigned> oracle_modulus(unsigned p, unsigned n) {
  unsigned count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  for (unsigned v = 0; v < count; ++v) {
    std::vector<unsigned> f(n + 1, 0);
    unsigned t = v;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[n] = 1;
    if (no_root(f, p)) return f;
  }
  return {};
}

Elem naive_pow(const Field& F, Elem a, std::uint64_t e) {
  Elem r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = F.mul(r, a);
  return r;
}

}  // namespace

TEST_SUITE("ff") {

TEST_CASE("make_field picks the least irreducible modulus") {
  CHECK(make_field(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(make_field(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
  for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
    for (unsigned n : {2u, 3u}) {
      auto expect = oracle_modulus(p, n);
      auto got = make_field(p, n)->modulus();
      CHECK(std::vector<unsigned>(got.begin(), got.end()) == expect);
    }
  }
}

TEST_CASE("make_field is deterministic and validates input") {
  CHECK(make_field(3, 4)->modulus() == make_field(3, 4)->modulus());
  CHECK(Field(3, make_field(3, 4)->modulus()).modulus() == make_field(3, 4)->modulus());
  CHECK_THROWS_AS(make_field(4, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 0), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 17), InvalidArgument);
  for (unsigned n = 1; n <= 8; ++n) CHECK(irreducible_by_trial_division(make_field(2, n)->modulus(), 2));
  CHECK(irreducible_by_trial_division(make_field(3, 6)->modulus(), 3));
}

TEST_CASE("basic arithmetic examples") {
  auto F5 = make_field(5, 1);
  CHECK(F5->inv(2) == 3);
  auto F9 = make_field(3, 2);
  Elem i = F9->generator();
  CHECK(F9->mul(i, i) == 2);
  CHECK_THROWS_AS(F9->inv(0), InvalidArgument);
  for (auto F : {F5, F9, make_field(2, 6), make_field(7, 3), make_field(2, 16)}) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
      Elem g = 1 + rng() % (F->size() - 1);
      CHECK(F->pow(g, F->size() - 1) == 1);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (auto F : {make_field(2, 1), make_field(3, 2), make_field(5, 2), make_field(2, 8), make_field(3, 5),
                 make_field(7, 2), make_field(2, 16), make_field(3, 11), make_field(13, 3)}) {
    for (int t = 0; t < 120; ++t) {
      Elem a = rng() % F->size(), b = rng() % F->size(), c = rng() % F->size();
      CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, F->neg(a)) == 0);
      CHECK(F->sub(a, b) == F->add(a, F->neg(b)));
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
    }
  }
}

TEST_CASE("frobenius") {
  auto F9 = make_field(3, 2);
  Elem i = F9->generator();
  CHECK(F9->frobenius(i, 3) == F9->neg(i));
  CHECK(F9->frobenius(i, 3) == naive_pow(*F9, i, 3));
  CHECK_THROWS_AS(F9->frobenius(i, 6), InvalidArgument);
  std::mt19937_64 rng(3);
  for (auto F : {F9, make_field(2, 6), make_field(5, 3), make_field(3, 7)}) {
    const std::uint64_t q = F->size();
    for (int t = 0; t < 100; ++t) {
      Elem x = rng() % q, y = rng() % q;
      CHECK(F->frobenius(x, q) == x);
      for (std::uint64_t r = F->p(); r <= q; r *= F->p()) {
        CHECK(F->frobenius(F->add(x, y), r) == F->add(F->frobenius(x, r), F->frobenius(y, r)));
        CHECK(F->frobenius(F->mul(x, y), r) == F->mul(F->frobenius(x, r), F->frobenius(y, r)));
      }
    }
    for (Elem c = 0; c < F->p(); ++c) CHECK(F->frobenius(c, F->p()) == c);
  }
}

TEST_CASE("trace") {
  auto F9 = make_field(3, 2);
  auto F3 = make_field(3, 1);
  FieldElement i(F9, F9->generator());
  CHECK(trace(i, F3).value() == 0);
  CHECK(trace(i, F3) == FieldElement(F3, F9->add(i.value(), F9->pow(i.value(), 3))));
  for (unsigned n : {1u, 2u, 3u, 4u, 5u}) {
    auto F = make_field(3, n);
    CHECK(trace(FieldElement(F, 1), F3).value() == n % 3);
  }
  CHECK_THROWS_AS(trace(i, make_field(2, 1)), InvalidArgument);
  // linearity over the subfield and surjectivity, exhaustively for |F| <= 81
  for (auto [p, n, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {3, 2, 1}, {2, 4, 2}, {2, 6, 3}, {3, 4, 2}, {5, 2, 1}, {2, 6, 2}, {7, 2, 1}, {3, 3, 1}}) {
    auto F = make_field(p, n), S = make_field(p, m);
    Embedding e(S, F);
    std::set<Elem> hit;
    for (Elem x = 0; x < F->size(); ++x) {
      auto tx = trace(FieldElement(F, x), S);
      hit.insert(tx.value());
      for (Elem c = 0; c < S->size(); ++c) {
        Elem y = (x * 7 + 3) % F->size();
        Elem lhs = trace(FieldElement(F, F->add(F->mul(e.embed(c), x), y)), S).value();
        Elem rhs = S->add(S->mul(c, tx.value()), trace(FieldElement(F, y), S).value());
        CHECK(lhs == rhs);
      }
    }
    CHECK(hit.size() == S->size());
  }
}

TEST_CASE("characters") {
  auto F9 = make_field(3, 2);
  for (Elem a = 0; a < 9; ++a) {
    CHECK(additive_character(FieldElement(F9, 0), FieldElement(F9, a)) == 0);
    CHECK(additive_character(FieldElement(F9, a), FieldElement(F9, 0)) == 0);
  }
  for (Elem b = 0; b < 9; ++b)
    for (Elem a = 0; a < 9; ++a)
      for (Elem a2 = 0; a2 < 9; ++a2) {
        FieldElement B(F9, b), A(F9, a), A2(F9, a2);
        CHECK(additive_character(B, A + A2) == (additive_character(B, A) + additive_character(B, A2)) % 3);
      }
  auto F5 = make_field(5, 1);
  CHECK(quadratic_character(FieldElement(F5, 0)) == 0);
  CHECK(quadratic_character(FieldElement(F5, 4)) == 1);
  CHECK(quadratic_character(FieldElement(F5, 2)) == -1);
  CHECK_THROWS_AS(quadratic_character(FieldElement(make_field(2, 2), 1)), InvalidArgument);
  CHECK_THROWS_AS(FieldElement(F5, 1) + FieldElement(F9, 1), InvalidArgument);
  // squares counted directly
  for (auto F : {F5, F9, make_field(7, 2), make_field(3, 3)}) {
    std::set<Elem> sq;
    for (Elem y = 1; y < F->size(); ++y) sq.insert(F->mul(y, y));
    for (Elem x = 1; x < F->size(); ++x) CHECK(F->quadratic_character(x) == (sq.count(x) ? 1 : -1));
  }
}

TEST_CASE("element literals") {
  auto F9 = make_field(3, 2);
  CHECK(F9->parse("[1,2]") == 1 + 2 * 3);
  CHECK(F9->format(7) == "[1,2]");
  CHECK(F9->parse("-1") == 2);
  CHECK(parse_field("3^2") == F9);
  CHECK(parse_field("9") == F9);
  CHECK_THROWS_AS(parse_field("6"), InvalidArgument);
}

TEST_CASE("cube root of unity") {
  for (auto q : {2u, 5u, 8u, 11u, 17u}) {
    auto pf = prime_factors(q)[0];
    auto F = make_field(static_cast<std::uint32_t>(pf), 2 * static_cast<unsigned>(log_p(q, static_cast<std::uint32_t>(pf))));
    Elem z = cube_root_of_unity(*F);
    CHECK(F->add(F->add(F->mul(z, z), z), 1) == 0);
    for (Elem x = 0; x < z; ++x) CHECK(F->add(F->add(F->mul(x, x), x), 1) != 0);
  }
}

TEST_CASE("polynomials and rational functions") {
  auto F5 = make_field(5, 1);
  auto u = Poly::x(F5);
  auto one = Poly::constant(F5, 1);
  RationalFunction r(u * u - one, u - one);
  CHECK(r.is_polynomial());
  CHECK(r.num() == u + one);
  CHECK((r + (-r)).is_zero());
  RationalFunction t(u.pow(5) - u, u);
  CHECK(t.is_polynomial());
  CHECK(t.num() == u.pow(4) - one);
  CHECK(parse_ratfun(F5, "(u^5 - u)/u", "u") == t);
  CHECK(parse_ratfun(F5, "x^2 + 1/x").to_string() == "(x^3 + 1)/(x)");
  CHECK_THROWS_AS(RationalFunction(u) / RationalFunction(Poly(F5)), InvalidArgument);

  std::mt19937_64 rng(11);
  auto F = make_field(3, 2);
  auto rand_poly = [&](int deg) {
    std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = rng() % F->size();
    return Poly(F, c);
  };
  for (int t2 = 0; t2 < 100; ++t2) {
    auto a = rand_poly(3), b = rand_poly(2) + Poly::monomial(F, 1, 3), c = rand_poly(2), d = rand_poly(1) + Poly::monomial(F, 1, 2);
    RationalFunction f(a, b), g(c, d);
    for (auto h : {f + g, f - g, f * g, g.is_zero() ? f : f / g}) {
      CHECK(gcd(h.num(), h.den()).is_one());
      CHECK(h.den().lead() == 1);
    }
  }
}

TEST_CASE("fast multiplication matches schoolbook") {
  std::mt19937_64 rng(5);
  for (auto F : {make_field(5, 1), make_field(5, 2), make_field(2, 6), make_field(11, 2), make_field(3, 3)}) {
    for (int len : {30, 100, 700}) {
      std::vector<Elem> a(static_cast<std::size_t>(len)), b(static_cast<std::size_t>(len + 13));
      for (auto& v : a) v = rng() % F->size();
      for (auto& v : b) v = rng() % F->size();
      auto fast = poly_multiply(*F, a, b);
      std::vector<Elem> slow(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) slow[i + j] = F->add(slow[i + j], F->mul(a[i], b[j]));
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("factorization") {
  std::mt19937_64 rng(9);
  for (auto F : {make_field(2, 1), make_field(3, 1), make_field(5, 2), make_field(2, 4), make_field(7, 1)}) {
    for (int t = 0; t < 15; ++t) {
      std::vector<Elem> c(8 + rng() % 8);
      for (auto& v : c) v = rng() % F->size();
      c.back() = 1;
      Poly f(F, c);
      f = f * Poly::linear(F, 1).pow(2);  // force a repeated factor
      auto fac = factor(f);
      Poly prod = Poly::constant(F, f.lead());
      for (auto& [g, m] : fac) {
        prod = prod * g.pow(m);
        CHECK(g.lead() == 1);
        // irreducible: no factor of degree <= deg/2 found by distinct-degree splitting
        auto dd = distinct_degree(g);
        REQUIRE(dd.size() == 1);
        CHECK(dd[0].second == static_cast<unsigned>(g.degree()));
      }
      CHECK(prod == f);
    }
  }
  auto F = make_field(2, 1);
  auto x = Poly::x(F);
  auto fac = factor((x * x + x + Poly::constant(F, 1)).pow(2) * x.pow(4));  // p-th powers
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].poly == x);
  CHECK(fac[0].multiplicity == 4);
  CHECK(fac[1].multiplicity == 2);
}

TEST_CASE("embeddings") {
  for (auto [p, m, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {2, 2, 4}, {2, 3, 6}, {3, 2, 4}, {5, 1, 2}, {2, 4, 8}, {3, 1, 3}, {2, 3, 24}}) {
    auto S = make_field(p, m), A = make_primitive_field(p, n);
    Embedding e(S, A);
    std::mt19937_64 rng(p * 100 + n);
    for (int t = 0; t < 50; ++t) {
      Elem a = rng() % S->size(), b = rng() % S->size();
      CHECK(e.embed(S->add(a, b)) == A->add(e.embed(a), e.embed(b)));
      CHECK(e.embed(S->mul(a, b)) == A->mul(e.embed(a), e.embed(b)));
      CHECK(e.restrict(e.embed(a)) == a);
    }
    if (m < n) CHECK_FALSE(e.restrict(A->generator()).has_value());
  }
}

}  // TEST_SUITE

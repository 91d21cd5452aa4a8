#include <set>

#include "aslab/addpoly.hpp"
#include "aslab/errors.hpp"
#include "doctest.h"

using namespace aslab;

namespace {

// A(B(x)) by plain substitution into the expanded polynomials
Poly substitute(const Poly& A, const Poly& B) {
  Poly r(A.field());
  for (std::size_t i = A.coeffs().size(); i-- > 0;) r = r * B + Poly::constant(A.field(), A[i]);
  return r;
}

std::vector<Elem> brute_roots(const AdditivePolynomial& A) {
  std::vector<Elem> r;
  auto P = A.to_poly();
  for (Elem x = 0; x < A.field()->size(); ++x)
    if (P.eval(x) == 0) r.push_back(x);
  return r;
}

}  // namespace

TEST_SUITE("addpoly") {

TEST_CASE("roots_to_poly examples") {
  auto F3 = make_field(3, 1);
  CHECK(roots_to_poly({F3, {0}}) == AdditivePolynomial::identity(F3));
  CHECK(roots_to_poly({F3, {0, 1, 2}}) == AdditivePolynomial::wp(F3, 3));
  auto F9 = make_field(3, 2);
  Elem i = F9->generator();
  std::vector<Elem> H{0, i, F9->neg(i)};
  std::sort(H.begin(), H.end());
  auto A = roots_to_poly({F9, H});
  CHECK(A.coeffs() == std::vector<Elem>{1, 1});
  // x(x - i)(x + i) expanded by hand: x^3 - i^2 x
  Poly direct = Poly::x(F9) * Poly::linear(F9, i) * Poly::linear(F9, F9->neg(i));
  CHECK(direct == A.to_poly());
  CHECK_THROWS_AS(roots_to_poly({F9, {0, 1}}), InvalidArgument);
}

TEST_CASE("poly_to_roots examples") {
  auto F3 = make_field(3, 1), F9 = make_field(3, 2);
  auto wp3 = AdditivePolynomial::wp(F3, 3);
  CHECK(poly_to_roots(wp3, F9).elements == std::vector<Elem>{0, 1, 2});
  AdditivePolynomial A(F3, {1, 1});
  auto R = poly_to_roots(A, F9);
  CHECK(R.elements == brute_roots(A.embedded(Embedding(F3, F9))));
  CHECK(R.elements.size() == 3);
  CHECK_THROWS_AS(poly_to_roots(A, F3), InvalidArgument);
}

TEST_CASE("compose examples") {
  auto F3 = make_field(3, 1);
  auto wp3 = AdditivePolynomial::wp(F3, 3);
  AdditivePolynomial A(F3, {1, 1});
  CHECK(compose(AdditivePolynomial::identity(F3), A) == A);
  CHECK(compose(A, wp3) == AdditivePolynomial::wp(F3, 9));
  auto c = compose(wp3, wp3);
  CHECK(c.coeffs() == std::vector<Elem>{1, 1, 1});
  CHECK(c.to_poly() == substitute(wp3.to_poly(), wp3.to_poly()));
  CHECK_THROWS_AS(compose(A, AdditivePolynomial::identity(make_field(3, 2))), InvalidArgument);
}

TEST_CASE("twisted composition agrees with substitution") {
  for (auto F : {make_field(2, 3), make_field(3, 2), make_field(5, 2)}) {
    Elem g = F->generator();
    AdditivePolynomial A(F, {g, F->add(g, 1), 1});
    AdditivePolynomial B(F, {F->mul(g, g), 1});
    CHECK(compose(A, B).to_poly() == substitute(A.to_poly(), B.to_poly()));
    CHECK(compose(B, A).to_poly() == substitute(B.to_poly(), A.to_poly()));
  }
}

TEST_CASE("complement examples") {
  auto F3 = make_field(3, 1);
  auto F9 = make_field(3, 2);
  CHECK(complement(AdditivePolynomial::wp(F9, 9), 9) == AdditivePolynomial::identity(F9));
  auto B = complement(AdditivePolynomial(F3, {1, 1}), 9);
  CHECK(B == AdditivePolynomial::wp(F9, 3));
  auto F5 = make_field(5, 1), F25 = make_field(5, 2);
  AdditivePolynomial A5(F5, {1, 1});
  auto B5 = complement(A5, 25);
  CHECK(B5 == AdditivePolynomial::wp(F25, 5));
  auto A25 = A5.embedded(Embedding(F5, F25));
  CHECK(compose(A25, B5) == AdditivePolynomial::wp(F25, 25));
  // image subgroup by enumeration
  std::set<Elem> img;
  for (Elem x = 0; x < 25; ++x) img.insert(A25.eval(x));
  CHECK(roots_to_poly({F25, std::vector<Elem>(img.begin(), img.end())}) == B5);
  CHECK_THROWS_AS(complement(AdditivePolynomial(F3, {1, 1}), 3), InvalidArgument);
}

TEST_CASE("round trip and complement over all subgroups, q <= 81") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81}) {
    auto pf = static_cast<std::uint32_t>(prime_factors(q)[0]);
    auto F = make_field(pf, static_cast<unsigned>(log_p(q, pf)));
    for (const auto& H : all_subgroups(F)) {
      auto A = roots_to_poly(H);
      auto R = poly_to_roots(A, F);
      CHECK(R.elements == H.elements);
      CHECK(roots_to_poly(R) == A);
      auto B = complement(A, q);
      auto wq = AdditivePolynomial::wp(F, q);
      CHECK(compose(A, B) == wq);
      CHECK(compose(B, A) == wq);
      CHECK(R.elements.size() * image_group(A).elements.size() == q);
    }
  }
}

TEST_CASE("additivity spot checks") {
  auto F = make_field(2, 6);
  AdditivePolynomial A(F, {F->generator(), 0, 5, 1});
  for (Elem x = 0; x < 64; x += 3)
    for (Elem y = 0; y < 64; y += 5) CHECK(A.eval(F->add(x, y)) == F->add(A.eval(x), A.eval(y)));
}

TEST_CASE("literal syntax") {
  auto F3 = make_field(3, 1);
  CHECK(parse_addpoly(F3, "[(0,[1]),(1,[1])]") == AdditivePolynomial(F3, {1, 1}));
  CHECK(parse_addpoly(F3, "[(0,2),(2,1)]") == AdditivePolynomial::wp(F3, 9));
  CHECK_THROWS_AS(parse_addpoly(F3, "[(1,1)]"), InvalidArgument);
}

}  // TEST_SUITE

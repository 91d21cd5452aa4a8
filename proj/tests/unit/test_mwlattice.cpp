#include <random>

#include "aslab/errors.hpp"
#include "aslab/height.hpp"
#include "aslab/lattice.hpp"
#include "doctest.h"

using namespace aslab;

namespace {

// Weierstrass equation checked by evaluating at every non-pole u of the base field.
bool on_curve_by_values(const FFEllipticCurve& E, const FFPoint& P) {
  if (P.is_identity()) return true;
  const Field& K = *E.field();
  int checked = 0;
  for (Elem u = 0; u < K.size(); ++u) {
    auto x = P.X.eval(u), y = P.Y.eval(u);
    if (!x || !y) continue;
    Elem a1 = E.a1().eval(u), a2 = E.a2().eval(u), a3 = E.a3().eval(u), a4 = E.a4().eval(u), a6 = E.a6().eval(u);
    Elem lhs = K.add(K.mul(*y, *y), K.add(K.mul(a1, K.mul(*x, *y)), K.mul(a3, *y)));
    Elem x2 = K.mul(*x, *x);
    Elem rhs = K.add(K.add(K.mul(x2, *x), K.mul(a2, x2)), K.add(K.mul(a4, *x), a6));
    if (lhs != rhs) return false;
    ++checked;
  }
  return checked > 0;
}

// naive heights of 2^n P by repeated affine doubling with full reduction
std::vector<long> affine_doubling_heights(const FFEllipticCurve& E, FFPoint P, int n) {
  std::vector<long> out;
  for (int i = 0; i <= n; ++i) {
    out.push_back(naive_height(P));
    P = ec_double(E, P);
  }
  return out;
}

// Leibniz expansion
mpq_class leibniz_det(const RatMatrix& M) {
  const std::size_t n = M.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  mpq_class total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    mpq_class term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= M[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

RatMatrix kron(const RatMatrix& A, const RatMatrix& B) {
  RatMatrix out(A.size() * B.size(), std::vector<mpq_class>(A.size() * B.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j)
      for (std::size_t k = 0; k < B.size(); ++k)
        for (std::size_t l = 0; l < B.size(); ++l) out[i * B.size() + k][j * B.size() + l] = A[i][j] * B[k][l];
  return out;
}

std::vector<long> random_coeffs(std::mt19937_64& rng, std::size_t n) {
  std::vector<long> c(n);
  for (auto& x : c) x = static_cast<long>(rng() % 5) - 2;
  return c;
}

}  // namespace

TEST_SUITE("mwlattice") {

TEST_CASE("group law on the isotrivial curve") {
  auto fam = iso_family(5);
  const auto& E = fam.E;
  const FFPoint O = FFPoint::identity();
  for (const auto& P : fam.points) {
    CHECK(ec_add(E, P, O) == P);
    CHECK(ec_add(E, O, P) == P);
    CHECK(ec_add(E, P, ec_neg(E, P)) == O);
    CHECK(ec_group_law(E, P, P, GroupOp::dbl) == ec_add(E, P, P));
  }
  // P_{0,a} + P_{1,a} + P_{2,a} = O
  for (std::size_t a = 0; a < fam.q; ++a) {
    FFPoint s = ec_add(E, ec_add(E, fam.points[fam.index(0, a)], fam.points[fam.index(1, a)]), fam.points[fam.index(2, a)]);
    CHECK(s == O);
  }
  for (unsigned i = 0; i < 3; ++i) {
    FFPoint s = O;
    for (std::size_t a = 0; a < fam.q; ++a) s = ec_add(E, s, fam.points[fam.index(i, a)]);
    // nontrivial 3-torsion; with t = u^q - u it is (0,-t) = -(0,0)
    CHECK(s == fam.T2);
    CHECK(s == ec_neg(E, fam.T1));
  }
  CHECK(ec_mul(E, fam.T1, 3) == O);
  CHECK(ec_mul(E, fam.T2, 3) == O);
  CHECK(ec_double(E, fam.T1) == fam.T2);

  FFPoint off = FFPoint::affine(RationalFunction(Poly::x(fam.K)), RationalFunction(Poly::x(fam.K)));
  CHECK_THROWS_AS(ec_add(E, off, fam.points[0]), InvalidArgument);
  CHECK_THROWS_AS(ec_group_law(E, off, O, GroupOp::neg), InvalidArgument);
}

TEST_CASE("group law axioms on random family combinations") {
  std::mt19937_64 rng(7);
  auto fam = iso_family(5);
  const auto& E = fam.E;
  std::vector<FFPoint> gens(fam.points.begin(), fam.points.end());
  gens.push_back(fam.T1);
  for (int trial = 0; trial < 30; ++trial) {
    FFPoint P = gens[rng() % gens.size()], Q = gens[rng() % gens.size()], R = gens[rng() % gens.size()];
    if (trial % 3 == 0) P = ec_add(E, P, gens[rng() % gens.size()]);
    CHECK(ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R)));
    CHECK(ec_add(E, P, Q) == ec_add(E, Q, P));
    FFPoint S = ec_add(E, P, Q);
    CHECK(E.contains(S));
    CHECK(on_curve_by_values(E, S));
  }
  auto nf = noniso_family(5, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& P = nf.points[rng() % 5];
    const auto& Q = nf.points[rng() % 5];
    const auto& R = nf.points[rng() % 5];
    CHECK(ec_add(nf.E, ec_add(nf.E, P, Q), R) == ec_add(nf.E, P, ec_add(nf.E, Q, R)));
  }
  auto f2 = iso_family(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = random_coeffs(rng, f2.points.size());
    FFPoint P = ec_combination(f2.E, f2.points, c);
    FFPoint Q = f2.points[rng() % 6];
    CHECK(ec_add(f2.E, ec_add(f2.E, P, Q), ec_neg(f2.E, Q)) == P);
    CHECK(ec_mul(f2.E, P, 2) == ec_double(f2.E, P));
    CHECK(ec_mul(f2.E, P, -3) == ec_neg(f2.E, ec_mul(f2.E, P, 3)));
  }
}

TEST_CASE("curve construction") {
  auto F = make_field(5, 1);
  Poly z(F);
  CHECK_THROWS_AS(FFEllipticCurve(z, z, z, z, z), InvalidArgument);
  // y^2 = x^3 + 1 is smooth over F_5(u), discriminant -432
  FFEllipticCurve E(z, z, z, z, Poly::constant(F, 1));
  CHECK(E.discriminant() == Poly::constant(F, F->from_int(-432)));
  CHECK(E.bad_primes().empty());
  auto fam = iso_family(5);
  // -27 t^4
  Poly t = Poly::monomial(fam.K, 1, 5) - Poly::x(fam.K);
  CHECK(fam.E.discriminant() == t.pow(4).scaled(fam.K->from_int(-27)));
  CHECK(fam.E.bad_primes().size() == 5);
}

TEST_CASE("naive_height examples") {
  CHECK(naive_height(FFPoint::identity()) == 0);
  auto fam = iso_family(5);
  CHECK(naive_height(fam.points[0]) == 2);
  CHECK(fam.points[0].X.to_string("u") == "u^2");
  auto nf = noniso_family(5, 2);
  for (const auto& P : nf.points) {
    CHECK(P.X.is_polynomial());
    CHECK(P.Y.is_polynomial());
    CHECK(P.X.num().degree() == 9);
    CHECK(P.Y.num().degree() == 14);
    CHECK(naive_height(P) == 9);
  }
}

TEST_CASE("weighted doubling chain matches affine doubling") {
  auto fam = iso_family(5);
  auto nf = noniso_family(5, 2);
  auto f2 = iso_family(2);
  std::vector<std::pair<const FFEllipticCurve*, FFPoint>> cases = {
      {&fam.E, fam.points[0]},
      {&fam.E, ec_add(fam.E, fam.points[0], fam.points[6])},
      {&fam.E, fam.T1},
      {&nf.E, nf.points[0]},
      {&nf.E, ec_add(nf.E, nf.points[1], nf.points[4])},
      {&f2.E, ec_add(f2.E, f2.points[0], f2.points[3])},
  };
  for (auto& [E, P] : cases) CHECK(doubling_heights(*E, P, 3) == affine_doubling_heights(*E, P, 3));
}

TEST_CASE("canonical heights and pairings") {
  auto fam = iso_family(5);
  CHECK(canonical_height(fam.E, fam.T1) == 0);
  CHECK(canonical_height(fam.E, fam.T2) == 0);
  CHECK(canonical_height(fam.E, FFPoint::identity()) == 0);
  CHECK(canonical_pairing(fam.E, fam.T1, fam.points[3]) == 0);
  auto tr = canonical_height_trace(fam.E, fam.points[0]);
  CHECK(tr.value == mpq_class(8, 3));
  CHECK(tr.doublings == required_doublings(fam.E));
  CHECK(tr.naive.front() == 2);
  CHECK(canonical_pairing(fam.E, fam.points[0], fam.points[1]) == mpq_class(-2, 3));

  auto nf = noniso_family(5, 2);
  CHECK(canonical_height(nf.E, nf.points[0]) == mpq_class(33, 10));
  // the sum of all P_a is torsion
  FFPoint S = FFPoint::identity();
  for (const auto& P : nf.points) S = ec_add(nf.E, S, P);
  CHECK(canonical_height(nf.E, S) == 0);
}

TEST_CASE("required doublings") {
  auto fam = iso_family(5);
  CHECK(fam.E.height_denominator() == 300);
  CHECK(height_error_bound(fam.E) == 6);
  CHECK(required_doublings(fam.E) == 7);
  auto nf = noniso_family(5, 2);
  CHECK(height_error_bound(nf.E) == 15);
  CHECK(required_doublings(nf.E) == 8);
  // q = 11 needs 9 doublings, beyond the cap
  auto f11 = iso_family(11);
  CHECK(required_doublings(f11.E) > kMaxDoublings);
  CHECK_THROWS_AS(canonical_height(f11.E, f11.points[0]), CheckFailed);
}

TEST_CASE("height quadraticity and bilinearity") {
  std::mt19937_64 rng(11);
  auto f2 = iso_family(2);
  const auto& E = f2.E;
  auto G = iso_gram_closed(2);
  for (int trial = 0; trial < 12; ++trial) {
    auto c = random_coeffs(rng, 6);
    auto d = random_coeffs(rng, 6);
    FFPoint P = ec_combination(E, f2.points, c);
    FFPoint Q = ec_combination(E, f2.points, d);
    FFPoint R = f2.points[rng() % 6];
    CHECK(canonical_height(E, ec_double(E, P)) == 4 * canonical_height(E, P));
    CHECK(canonical_pairing(E, ec_add(E, P, Q), R) == canonical_pairing(E, P, R) + canonical_pairing(E, Q, R));
    // c^T G c from the closed-form table
    mpq_class expect = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) expect += c[i] * c[j] * G.entries[i][j];
    CHECK(canonical_height(E, P) == expect);
  }
}

TEST_CASE("iso_family") {
  auto fam = iso_family(5);
  CHECK(fam.points.size() == 15);
  CHECK(fam.alphas.size() == 5);
  CHECK(fam.K->size() == 25);
  CHECK(fam.K->add(fam.K->mul(fam.zeta, fam.zeta), fam.K->add(fam.zeta, 1)) == 0);
  for (const auto& P : fam.points) {
    CHECK(fam.E.contains(P));
    CHECK(on_curve_by_values(fam.E, P));
  }
  CHECK(on_curve_by_values(fam.E, fam.T1));
  CHECK(on_curve_by_values(fam.E, fam.T2));
  // translation and the automorphism permute the family
  for (std::size_t a = 0; a < 5; ++a)
    CHECK(iso_act(fam, fam.points[0], 1, fam.alphas[a]) == fam.points[fam.index(1, a)]);
  CHECK_THROWS_AS(iso_family(4), InvalidArgument);
  CHECK_THROWS_AS(iso_family(7), InvalidArgument);
  CHECK_THROWS_AS(iso_family(6), InvalidArgument);
  auto f8 = iso_family(8);
  CHECK(f8.points.size() == 24);
}

TEST_CASE("iso_gram_closed") {
  auto g = iso_gram_closed(5);
  CHECK(g.size() == 15);
  CHECK(g.symmetric());
  for (std::size_t i = 0; i < 15; ++i) CHECK(g.entries[i][i] == mpq_class(8, 3));
  CHECK(g.entries[0][1] == mpq_class(-2, 3));
  CHECK(g.entries[0][5] == mpq_class(-4, 3));
  CHECK(g.entries[0][6] == mpq_class(1, 3));
  // summing over i for fixed a gives zero
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t c = 0; c < 15; ++c) CHECK(g.entries[a][c] + g.entries[5 + a][c] + g.entries[10 + a][c] == 0);
  CHECK_THROWS_AS(iso_gram_closed(7), InvalidArgument);
}

TEST_CASE("isotrivial lattice is A2* tensor A*_(q-1)/3") {
  for (std::uint64_t q : {2u, 5u, 8u, 11u}) {
    auto g = iso_gram_closed(q);
    auto basis = iso_basis(q);
    auto sub = g.submatrix(basis).entries;
    RatMatrix A2 = {{2, -1}, {-1, 2}};
    RatMatrix Aq(q - 1, std::vector<mpq_class>(q - 1));
    for (std::size_t i = 0; i + 1 < q; ++i)
      for (std::size_t j = 0; j + 1 < q; ++j) Aq[i][j] = mpq_class((i == j ? static_cast<long>(q) : 0) - 1, 3);
    CHECK(sub == kron(A2, Aq));
    CHECK(rational_det(sub) == iso_discriminant_closed(q));
  }
  CHECK(iso_discriminant_closed(5) == mpq_class(15625, 81));
}

TEST_CASE("iso oracle Gram equals the table") {
  auto f2 = iso_family(2);
  auto g = oracle_gram(f2.E, f2.points, f2.labels);
  CHECK(compare_grams(g, iso_gram_closed(2)).empty());
  // invariance: the entry depends only on (i - j, a - b)
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      std::size_t di = (r / 2 + 3 - c / 2) % 3, da = (r % 2) ^ (c % 2);
      CHECK(g.entries[r][c] == g.entries[di * 2 + da][0]);
    }
  auto fam = iso_family(5);
  auto closed = iso_gram_closed(5);
  for (std::size_t c : {0u, 1u, 5u, 6u})
    CHECK(canonical_pairing(fam.E, fam.points[0], fam.points[c]) == closed.entries[0][c]);
}

TEST_CASE("iso_extra_points") {
  auto fam = iso_family(5);
  auto ex = iso_extra_points(fam);
  CHECK(ex.base.size() == 4);
  CHECK(ex.orbit.size() == 60);
  const Field& K = *fam.K;
  for (Elem b : ex.betas) CHECK(K.pow(b, 4) == K.neg(1));
  for (const auto& P : ex.base) CHECK(on_curve_by_values(fam.E, P));
  for (const auto& P : ex.orbit) CHECK(fam.E.contains(P));

  auto f2 = iso_family(2);
  auto e2 = iso_extra_points(f2);
  CHECK(e2.base.size() == 1);
  CHECK(e2.orbit.size() == 6);
  auto f8 = iso_family(8);
  auto e8 = iso_extra_points(f8);
  CHECK(e8.base.size() == 7);
  CHECK(e8.orbit.size() == 168);
  for (const auto& P : e8.base) CHECK(on_curve_by_values(f8.E, P));
}

TEST_CASE("noniso_family") {
  auto nf = noniso_family(5, 2);
  CHECK(nf.points.size() == 5);
  for (const auto& P : nf.points) CHECK(on_curve_by_values(nf.E, P));
  auto n7 = noniso_family(7, 3);
  for (const auto& P : n7.points) {
    CHECK(on_curve_by_values(n7.E, P));
    CHECK(P.X.num().degree() == 13);
  }
  CHECK_THROWS_AS(noniso_family(5, 0), InvalidArgument);
  CHECK_THROWS_AS(noniso_family(5, 1), InvalidArgument);
  CHECK_THROWS_AS(noniso_family(5, 4), InvalidArgument);
  CHECK_THROWS_AS(noniso_family(8, 2), InvalidArgument);
  CHECK_THROWS_AS(noniso_family(5, 7), InvalidArgument);
}

TEST_CASE("trace_gamma") {
  struct Case {
    std::uint64_t q;
    Elem b;
  };
  for (auto [q, b] : {Case{5, 2}, Case{7, 2}, Case{7, 3}, Case{11, 5}, Case{13, 4}}) {
    auto F = make_field(static_cast<std::uint32_t>(q), 1);
    Elem b4 = F->mul(4, b);
    long sum = 0;
    for (Elem g = 0; g < q; ++g) {
      long tr = trace_gamma(F, b, g);
      CHECK(tr == trace_gamma_by_count(F, b, g));
      if (g == 0 || g == b4 || g == F->neg(b4)) continue;
      sum += tr;
      long bound = 0;
      while ((bound + 1) * (bound + 1) <= static_cast<long>(q)) ++bound;
      CHECK(std::abs(tr) <= 2 * bound);
    }
    CHECK(sum + 2 * F->quadratic_character(F->neg(1)) + 2 == 0);
  }
  auto F9 = make_field(3, 2);
  for (Elem g = 0; g < 9; ++g) CHECK(trace_gamma(F9, 5, g) == trace_gamma_by_count(F9, 5, g));
}

TEST_CASE("noniso_gram_closed") {
  auto g = noniso_gram_closed(5, 2);
  CHECK(g.symmetric());
  for (std::size_t i = 0; i < 5; ++i) CHECK(g.entries[i][i] == mpq_class(33, 10));
  // 4b = 3 mod 5
  CHECK(g.entries[3][0] == mpq_class(-9, 20));
  CHECK(g.entries[0][3] == mpq_class(-9, 20));
  CHECK(g.entries[2][0] == mpq_class(-9, 20));
  struct Case {
    std::uint64_t q;
    Elem b;
  };
  for (auto [q, b] : {Case{5, 2}, Case{7, 2}, Case{11, 3}, Case{13, 6}, Case{9, 4}}) {
    auto G = noniso_gram_closed(q, b);
    for (const auto& row : G.entries) {
      mpq_class s = 0;
      for (const auto& x : row) s += x;
      CHECK(s == 0);
    }
    auto rep = lattice_report(G, noniso_basis(q));
    CHECK(rep.rank == q - 1);
    CHECK(rep.discriminant > 0);
  }
  CHECK_THROWS_AS(noniso_gram_closed(5, 1), InvalidArgument);
}

TEST_CASE("noniso oracle row equals the table") {
  auto nf = noniso_family(5, 2);
  auto closed = noniso_gram_closed(5, 2);
  for (std::size_t c = 0; c < 5; ++c)
    CHECK(canonical_pairing(nf.E, nf.points[0], nf.points[c]) == closed.entries[0][c]);
}

TEST_CASE("lattice_report") {
  auto g = iso_gram_closed(5);
  auto rep = lattice_report(g, iso_basis(5));
  CHECK(rep.rank == 8);
  CHECK(rep.basis.size() == 8);
  CHECK(rep.discriminant == mpq_class(15625, 81));
  CHECK(rep.relations.size() == 7);
  for (const auto& rel : rep.relations)
    for (std::size_t i = 0; i < 15; ++i) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < 15; ++j) s += g.entries[i][j] * mpq_class(rel[j]);
      CHECK(s == 0);
    }
  auto pivots = lattice_report(g);
  CHECK(pivots.basis.size() == pivots.rank);
  CHECK(pivots.discriminant != 0);
  // {P_{0,0}, P_{1,0}, P_{2,0}} sum to O, so this basis is singular
  std::vector<std::size_t> bad = {0, 5, 10, 1, 2, 3, 6, 7};
  CHECK_THROWS_AS(lattice_report(g, bad), CheckFailed);
  auto n = lattice_report(noniso_gram_closed(5, 2), noniso_basis(5));
  CHECK(n.rank == 4);
  CHECK(n.relations.size() == 1);
  for (const auto& x : n.relations[0]) CHECK(abs(x) == 1);
}

TEST_CASE("rational linear algebra") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 5;
    RatMatrix M(n, std::vector<mpq_class>(n));
    for (auto& row : M)
      for (auto& x : row) x = mpq_class(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    for (auto& row : M)
      for (auto& x : row) x.canonicalize();
    mpq_class d = leibniz_det(M);
    CHECK(rational_det(M) == d);
    CHECK((rational_rank(M) == n) == (d != 0));
    if (d != 0) {
      std::vector<mpq_class> b(n);
      for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
      auto x = rational_solve(M, b);
      for (std::size_t i = 0; i < n; ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < n; ++j) s += M[i][j] * x[j];
        CHECK(s == b[i]);
      }
    }
    std::vector<std::vector<mpz_class>> Z(n, std::vector<mpz_class>(n));
    RatMatrix Q(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long v = static_cast<long>(rng() % 11) - 5;
        Z[i][j] = v;
        Q[i][j] = v;
      }
    mpq_class dz = leibniz_det(Q);
    CHECK(mpq_class(lattice_determinant(Z)) == abs(dz));
  }
  // extra generators refine the lattice: Z^2 + Z(1/2, 1/2) has index 2
  std::vector<std::vector<mpz_class>> rows = {{2, 0}, {0, 2}, {1, 1}};
  CHECK(lattice_determinant(rows) == 2);
}

TEST_CASE("index check at q = 2") {
  auto rep = index_conjecture_check(2);
  CHECK(rep.index == 1);
  CHECK(rep.conjectured == 1);
  CHECK(rep.match);
  CHECK(rep.det_V_matches_closed);
  CHECK(rep.orbit_in_span);
  CHECK(rep.orbit_size == 6);
  CHECK_THROWS_AS(index_conjecture_check(7), InvalidArgument);
}

}  // TEST_SUITE

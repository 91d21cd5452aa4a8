#include "aslab/families.hpp"

#include <algorithm>

#include "aslab/errors.hpp"

namespace aslab {

namespace {

struct PrimePower {
  std::uint32_t p;
  unsigned m;
};

PrimePower split_prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be a prime power, got " + std::to_string(q));
  auto ps = prime_factors(q);
  if (ps.size() != 1) throw InvalidArgument("q must be a prime power, got " + std::to_string(q));
  int m = log_p(q, static_cast<std::uint32_t>(ps[0]));
  return {static_cast<std::uint32_t>(ps[0]), static_cast<unsigned>(m)};
}

Poly t_poly(const FieldPtr& F, std::uint64_t q) {
  return Poly::monomial(F, 1, q) - Poly::x(F);
}

std::vector<Elem> subfield_elements(const Field& K, std::uint64_t q) {
  std::vector<Elem> out;
  for (Elem a = 0; a < K.size(); ++a)
    if (K.frobenius(a, q) == a) out.push_back(a);
  return out;
}

void require_on(const FFEllipticCurve& E, const FFPoint& P, const std::string& what) {
  if (!E.contains(P)) throw CheckFailed(what + " is not on the curve");
}

}  // namespace

std::size_t IsoFamily::alpha_index(Elem a) const {
  auto it = std::lower_bound(alphas.begin(), alphas.end(), a);
  if (it == alphas.end() || *it != a) throw InvalidArgument("element is not in F_q");
  return static_cast<std::size_t>(it - alphas.begin());
}

IsoFamily iso_family(std::uint64_t q) {
  auto [p, m] = split_prime_power(q);
  if (q % 3 != 2) throw InvalidArgument("the isotrivial family needs q = 2 mod 3, got q = " + std::to_string(q));
  FieldPtr K = make_field(p, 2 * m);
  Poly zero(K);
  Poly t = t_poly(K, q);
  IsoFamily fam{q, K, FFEllipticCurve(zero, zero, t, zero, zero), 0, {}, {}, {}, {}, {}};
  fam.E.set_height_denominator(12 * static_cast<long>(q * q));
  fam.zeta = cube_root_of_unity(*K);
  fam.alphas = subfield_elements(*K, q);

  const std::uint64_t e = (q + 1) / 3;
  for (unsigned i = 0; i < 3; ++i) {
    Elem z = K->pow(fam.zeta, i);
    for (std::size_t k = 0; k < fam.alphas.size(); ++k) {
      Poly ua = Poly::linear(K, K->neg(fam.alphas[k]));  // u + a
      FFPoint P = FFPoint::affine(RationalFunction(ua.pow(e).scaled(z)), RationalFunction(ua));
      require_on(fam.E, P, "P[" + std::to_string(i) + "," + std::to_string(k) + "]");
      fam.points.push_back(std::move(P));
      fam.labels.push_back("P[" + std::to_string(i) + "," + std::to_string(k) + "]");
    }
  }
  fam.T1 = FFPoint::affine(RationalFunction(zero), RationalFunction(zero));
  fam.T2 = FFPoint::affine(RationalFunction(zero), RationalFunction(-t));
  for (const FFPoint* T : {&fam.T1, &fam.T2}) {
    require_on(fam.E, *T, "torsion point");
    if (ec_mul(fam.E, *T, 3) != FFPoint::identity() || *T == FFPoint::identity())
      throw CheckFailed("torsion point does not have order 3");
  }
  return fam;
}

FFPoint iso_act(const IsoFamily& fam, const FFPoint& P, unsigned j, Elem a) {
  if (P.is_identity()) return P;
  const Field& K = *fam.K;
  Elem z = K.pow(fam.zeta, j % 3);
  RationalFunction X = P.X.translate(a);
  X = X * RationalFunction::constant(fam.K, z);
  return FFPoint::affine(X, P.Y.translate(a));
}

IsoExtraPoints iso_extra_points(const IsoFamily& fam) {
  const FieldPtr& K = fam.K;
  const std::uint64_t q = fam.q;
  const std::uint64_t e = (q + 1) / 3;
  IsoExtraPoints out;
  Poly u = Poly::x(K);

  if (K->p() != 2) {
    Elem minus1 = K->neg(1);
    for (Elem b = 1; b < K->size(); ++b)
      if (K->pow(b, q - 1) == minus1) out.betas.push_back(b);
    Elem two = K->from_int(2);
    for (Elem b : out.betas) {
      Elem inv2b = K->inv(K->mul(two, b));
      Poly base = (u * u - Poly::constant(K, K->mul(b, b))).scaled(inv2b);
      Poly X = -base.pow(e);
      Poly Y = Poly::linear(K, b).pow(q + 1).scaled(inv2b);
      out.base.push_back(FFPoint::affine(RationalFunction(X), RationalFunction(Y)));
    }
  } else {
    auto in_fq = [&](Elem a) { return std::binary_search(fam.alphas.begin(), fam.alphas.end(), a); };
    for (Elem b = 0; b < K->size(); ++b) {
      if (in_fq(b)) continue;
      bool fresh = true;
      for (Elem r : out.betas)
        if (in_fq(K->sub(b, r))) {
          fresh = false;
          break;
        }
      if (fresh) out.betas.push_back(b);
    }
    for (Elem b : out.betas) {
      Elem bq = K->frobenius(b, q);
      Elem s = K->inv(K->add(b, bq));
      Poly ub = Poly::linear(K, K->neg(b));
      Poly X = (ub * Poly::linear(K, K->neg(bq))).scaled(s).pow(e);
      Poly Y = ub.pow(q + 1).scaled(s);
      out.base.push_back(FFPoint::affine(RationalFunction(X), RationalFunction(Y)));
    }
  }
  for (std::size_t k = 0; k < out.base.size(); ++k) require_on(fam.E, out.base[k], "P_beta #" + std::to_string(k));

  for (std::size_t k = 0; k < out.base.size(); ++k)
    for (unsigned j = 0; j < 3; ++j)
      for (std::size_t a = 0; a < fam.alphas.size(); ++a) {
        FFPoint P = iso_act(fam, out.base[k], j, fam.alphas[a]);
        if (std::find(out.orbit.begin(), out.orbit.end(), P) != out.orbit.end()) continue;
        require_on(fam.E, P, "orbit point");
        out.orbit.push_back(std::move(P));
        out.orbit_labels.push_back("T[" + std::to_string(a) + "]Z^" + std::to_string(j) + "Pb[" + std::to_string(k) + "]");
      }
  return out;
}

IsoExtraPoints iso_extra_points(std::uint64_t q) { return iso_extra_points(iso_family(q)); }

NonIsoFamily noniso_family(std::uint64_t q, Elem b) {
  auto [p, m] = split_prime_power(q);
  if (p == 2) throw InvalidArgument("the nonisotrivial family needs odd q");
  FieldPtr F = make_field(p, m);
  if (!F->contains(b) || b == 0 || b == 1 || b == F->neg(1))
    throw InvalidArgument("b must lie in F_q outside {0, 1, -1}, got " + F->format(b));
  Poly zero(F);
  Poly t = t_poly(F, q);
  Elem b4 = F->mul(F->from_int(4), b);
  Elem b16sq = F->mul(b4, b4);
  Poly a2 = t * t + Poly::constant(F, b16sq);
  Poly a4 = (t * t).scaled(b16sq);
  NonIsoFamily fam{q, F, b, FFEllipticCurve(zero, a2, zero, a4, zero), {}, {}, {}};
  fam.E.set_height_denominator(12 * static_cast<long>(q * q));
  for (Elem a = 0; a < F->size(); ++a) fam.alphas.push_back(a);

  Poly u = Poly::x(F);
  RationalFunction ur(u);
  RationalFunction X0 = RationalFunction((t * (Poly::monomial(F, 1, q) + Poly::constant(F, b4))).scaled(b4)) / ur;
  Poly ypoly = (t * (t + Poly::constant(F, b4))).scaled(b4) *
               (u * u + u.scaled(b4)).pow((q + 1) / 2);
  RationalFunction Y0 = RationalFunction(ypoly) / (ur * ur);
  for (std::size_t k = 0; k < fam.alphas.size(); ++k) {
    Elem na = F->neg(fam.alphas[k]);
    FFPoint P = FFPoint::affine(X0.translate(na), Y0.translate(na));
    require_on(fam.E, P, "P[" + std::to_string(k) + "]");
    fam.points.push_back(std::move(P));
    fam.labels.push_back("P[" + std::to_string(k) + "]");
  }
  return fam;
}

long trace_gamma(const FieldPtr& F, Elem b, Elem gamma) {
  const Field& k = *F;
  Elem b4 = k.mul(k.from_int(4), b);
  long s = 0;
  for (Elem x = 0; x < k.size(); ++x) {
    Elem v = k.mul(k.mul(x, k.add(x, b4)), k.mul(k.sub(x, gamma), k.add(k.sub(x, gamma), b4)));
    s += k.quadratic_character(v);
  }
  return -1 - s;
}

long trace_gamma_by_count(const FieldPtr& F, Elem b, Elem gamma) {
  const Field& k = *F;
  Elem a4 = k.mul(k.from_int(4), k.mul(b, b));
  Elem g2 = k.mul(k.from_int(2), gamma);
  Elem c0 = k.sub(k.mul(gamma, gamma), a4);
  std::vector<Elem> squares(k.size());
  for (Elem s = 0; s < k.size(); ++s) squares[s] = k.mul(s, s);
  long count = 2;
  for (Elem s1 = 0; s1 < k.size(); ++s1) {
    Elem s1sq = k.mul(s1, s1);
    Elem rhs = k.mul(k.sub(s1sq, a4), k.add(k.sub(s1sq, k.mul(g2, s1)), c0));
    for (Elem s3 = 0; s3 < k.size(); ++s3)
      if (squares[s3] == rhs) ++count;
  }
  return static_cast<long>(k.size()) + 1 - count;
}

}  // namespace aslab

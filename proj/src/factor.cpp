#include "aslab/factor.hpp"

#include <algorithm>
#include <random>

#include "aslab/errors.hpp"

namespace aslab {

namespace {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

mpz_class field_size(const Field& F) { return mpz_class(std::to_string(F.size())); }

// coefficientwise p-th root of a polynomial in x^p
Poly pth_root_poly(const Poly& f) {
  const Field& F = f.F();
  const std::size_t p = F.p();
  std::vector<Elem> c(f.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c[i / p] = F.pth_root(f[i]);
  return Poly(f.field(), std::move(c));
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Poly& f0) {
  if (f0.degree() < 1) return {};
  std::vector<Factor> out;
  Poly f = f0.monic();
  const unsigned p = f.F().p();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.push_back({z, i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root_poly(c))) out.push_back({g, m * p});
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f0) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = f0.monic();
  const mpz_class q = field_size(f.F());
  Poly x = Poly::x(f.field());
  Poly h = x % f;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f0, unsigned d) {
  Poly f = f0.monic();
  if (f.degree() == static_cast<int>(d)) return {f};
  const Field& F = f.F();
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(f.degree()) * 131 + d);
  std::uniform_int_distribution<Elem> coef(0, F.size() - 1);
  const mpz_class q = field_size(F);
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  std::vector<Poly> work{f}, done;
  while (!work.empty()) {
    Poly g = work.back();
    work.pop_back();
    if (g.degree() == static_cast<int>(d)) {
      done.push_back(g);
      continue;
    }
    while (true) {
      std::vector<Elem> c(static_cast<std::size_t>(g.degree()));
      for (auto& v : c) v = coef(rng);
      Poly a(g.field(), c);
      if (a.degree() < 1) continue;
      Poly b;
      if (F.p() == 2) {
        // trace map a + a^2 + ... + a^(2^(k-1)) with 2^k = q^d
        const std::size_t k = d * F.n();
        Poly t = a % g, s = a % g;
        for (std::size_t i = 1; i < k; ++i) {
          t = mulmod(t, t, g);
          s += t;
        }
        b = s;
      } else {
        b = powmod(a, (qd - 1) / 2, g) - Poly::constant(g.field(), 1);
      }
      Poly h = gcd(b, g);
      if (h.degree() > 0 && h.degree() < g.degree()) {
        work.push_back(h);
        work.push_back(g / h);
        break;
      }
    }
  }
  std::sort(done.begin(), done.end(), poly_less);
  return done;
}

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    for (const auto& [h, d] : distinct_degree(g))
      for (auto& irr : equal_degree(h, d)) out.push_back({irr, m});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

std::vector<Elem> roots(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial has every element as a root");
  std::vector<Elem> out;
  if (f.degree() < 1) return out;
  const Field& F = f.F();
  if (F.size() <= 4096) {
    for (Elem a = 0; a < F.size(); ++a)
      if (f.eval(a) == 0) out.push_back(a);
    return out;
  }
  Poly g = f.monic();
  // restrict to the product of linear factors: gcd(x^q - x, f)
  Poly x = Poly::x(f.field());
  Poly h = powmod(x, field_size(F), g) - x;
  Poly lin = gcd(h, g);
  if (lin.degree() < 1) return out;
  for (const auto& l : equal_degree(lin, 1)) out.push_back(F.neg(l[0]));
  std::sort(out.begin(), out.end());
  return out;
}

Elem cube_root_of_unity(const Field& F) {
  if (F.p() == 3) throw InvalidArgument("no primitive cube root of unity in characteristic 3");
  auto Fp = std::shared_ptr<const Field>(&F, [](const Field*) {});
  auto r = roots(Poly(Fp, {1, 1, 1}));
  if (r.empty()) throw InvalidArgument("field " + F.descriptor() + " has no primitive cube root of unity");
  return r.front();
}

}  // namespace aslab

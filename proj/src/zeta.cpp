#include "aslab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <thread>

#include "aslab/budget.hpp"
#include "aslab/embed.hpp"
#include "aslab/errors.hpp"
#include "aslab/factor.hpp"

namespace aslab {

namespace {

constexpr std::uint32_t kZero = 0xFFFFFFFFu;

// Zech-logarithm model of F_{p^n} built from a primitive modulus.
class LogField {
 public:
  explicit LogField(const FieldPtr& E) : E_(E), p_(E->p()), n_(E->n()), N_(E->size()), order_(N_ - 1) {
    if (order_ >= kZero) throw BudgetExceeded("extension field too large for log tables");
    std::vector<std::uint64_t> pw(n_ + 1, 1);
    for (unsigned i = 1; i <= n_; ++i) pw[i] = pw[i - 1] * p_;
    const auto& m = E->modulus();
    // reduce[t] = -t * (m_0 + m_1 x + ... + m_{n-1} x^{n-1}), packed
    std::vector<std::uint64_t> reduce(p_, 0);
    for (std::uint32_t t = 0; t < p_; ++t)
      for (unsigned i = 0; i < n_; ++i) reduce[t] += ((p_ - (t * m[i]) % p_) % p_) * pw[i];
    exp_.resize(order_);
    log_.assign(N_, kZero);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < order_; ++i) {
      if (log_[v] != kZero) throw CheckFailed("modulus is not primitive");
      exp_[i] = static_cast<std::uint32_t>(v);
      log_[v] = static_cast<std::uint32_t>(i);
      const std::uint64_t top = v / pw[n_ - 1];
      v = (v - top * pw[n_ - 1]) * p_;
      if (top) v = packed_add(v, reduce[top], pw);
    }
    if (v != 1) throw CheckFailed("modulus is not primitive");
    zech_.resize(order_);
    for (std::uint64_t i = 0; i < order_; ++i) {
      std::uint64_t w = exp_[i];
      w = (w % p_ == p_ - 1) ? w - (p_ - 1) : w + 1;
      zech_[i] = w == 0 ? kZero : log_[w];
    }
    neg_one_ = p_ == 2 ? 0 : static_cast<std::uint32_t>(order_ / 2);
  }

  std::uint64_t size() const { return N_; }
  std::uint64_t order() const { return order_; }
  std::uint32_t to_log(Elem a) const { return a == 0 ? kZero : log_[a]; }
  Elem from_log(std::uint32_t l) const { return l == kZero ? 0 : exp_[l]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == kZero || b == kZero) return kZero;
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<std::uint32_t>(s >= order_ ? s - order_ : s);
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    if (a == kZero) return kZero;
    return static_cast<std::uint32_t>(a >= b ? a - b : a + order_ - b);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (a == kZero) return b;
    if (b == kZero) return a;
    std::uint64_t d = b >= a ? b - a : b + order_ - a;
    std::uint32_t z = zech_[d];
    if (z == kZero) return kZero;
    return mul(a, z);
  }
  std::uint32_t neg(std::uint32_t a) const { return mul(a, neg_one_); }
  // a^e for a log value
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (a == kZero) return e ? kZero : 0;
    return static_cast<std::uint32_t>(static_cast<unsigned __int128>(a) * e % order_);
  }

 private:
  FieldPtr E_;
  std::uint32_t p_;
  unsigned n_;
  std::uint64_t N_, order_;
  std::vector<std::uint32_t> exp_, log_, zech_;
  std::uint32_t neg_one_ = 0;

  std::uint64_t packed_add(std::uint64_t a, std::uint64_t b, const std::vector<std::uint64_t>& pw) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n_; ++i) {
      std::uint64_t d = a % p_ + b % p_;
      if (d >= p_) d -= p_;
      r += d * pw[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }
};

std::vector<std::uint32_t> logs_of(const LogField& L, const Embedding& e, const Poly& f) {
  std::vector<std::uint32_t> out;
  for (Elem c : f.coeffs()) out.push_back(L.to_log(e.embed(c)));
  return out;
}

std::uint32_t horner(const LogField& L, const std::vector<std::uint32_t>& c, std::uint32_t x) {
  std::uint32_t acc = kZero;
  for (std::size_t i = c.size(); i-- > 0;) acc = L.add(L.mul(acc, x), c[i]);
  return acc;
}

// Splits [0, n) across worker threads and sums fn(lo, hi).
template <class Fn>
std::uint64_t parallel_sum(std::uint64_t n, Fn fn) {
  unsigned T = std::max(1u, std::min<unsigned>(worker_threads(), static_cast<unsigned>(std::max<std::uint64_t>(1, n / 4096))));
  if (T == 1) return fn(std::uint64_t(0), n);
  std::vector<std::uint64_t> part(T, 0);
  std::vector<std::thread> th;
  for (unsigned t = 0; t < T; ++t)
    th.emplace_back([&, t] { part[t] = fn(n * t / T, n * (t + 1) / T); });
  for (auto& x : th) x.join();
  std::uint64_t s = 0;
  for (auto v : part) s += v;
  return s;
}

struct ExtensionSetup {
  FieldPtr E;
  std::unique_ptr<LogField> L;
  std::unique_ptr<Embedding> emb;
};

ExtensionSetup setup(const FieldPtr& base, unsigned k, std::uint64_t cost_factor, const std::string& what) {
  if (k < 1) throw InvalidArgument("extension degree must be positive");
  const unsigned nk = base->n() * k;
  long double size = std::pow(static_cast<long double>(base->p()), nk);
  long double cost = size * cost_factor;
  if (cost > static_cast<long double>(evaluation_budget()) || size > 4e9L)
    throw BudgetExceeded(what + " over F_" + std::to_string(base->p()) + "^" + std::to_string(nk) +
                         " exceeds the evaluation budget of " + std::to_string(evaluation_budget()));
  ExtensionSetup s;
  s.E = make_primitive_field(base->p(), nk);
  s.L = std::make_unique<LogField>(s.E);
  s.emb = std::make_unique<Embedding>(base, s.E);
  return s;
}

struct AdditiveImage {
  std::vector<std::uint8_t> in_image;  // indexed by log
  std::uint64_t kernel = 0;
};

std::vector<std::uint32_t> additive_values(const LogField& L, const Embedding& e, const AdditivePolynomial& A,
                                           std::uint32_t p) {
  std::vector<std::uint32_t> coeff_log;
  for (Elem c : A.coeffs()) coeff_log.push_back(L.to_log(e.embed(c)));
  std::vector<std::uint32_t> out(L.order());
  for (std::uint64_t l = 0; l < L.order(); ++l) {
    std::uint32_t acc = kZero;
    std::uint64_t pk = 1;
    for (std::size_t i = 0; i < coeff_log.size(); ++i, pk *= p)
      acc = L.add(acc, L.mul(coeff_log[i], L.pow(static_cast<std::uint32_t>(l), pk)));
    out[l] = acc;
  }
  return out;
}

AdditiveImage image_of(const LogField& L, const Embedding& e, const AdditivePolynomial& A, std::uint32_t p) {
  AdditiveImage img;
  img.in_image.assign(L.order(), 0);
  std::uint64_t zeros = 1;  // A(0) = 0
  for (std::uint32_t v : additive_values(L, e, A, p)) {
    if (v == kZero)
      ++zeros;
    else
      img.in_image[v] = 1;
  }
  img.kernel = zeros;
  return img;
}

// poles of f over the algebraic closure: (multiplicity, place degree over base), infinity first
std::vector<std::pair<std::int64_t, std::int64_t>> pole_places(const RationalFunction& f) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::uint32_t p = f.field()->p();
  const int e = f.pole_order_at_infinity();
  if (e > 0) {
    if (e % p == 0) throw InvalidArgument("pole order at infinity divisible by p");
    out.emplace_back(e, 1);
  }
  if (!f.den().is_constant())
    for (const auto& fac : factor(f.den())) {
      if (fac.multiplicity % p == 0) throw InvalidArgument("pole order divisible by p");
      out.emplace_back(fac.multiplicity, fac.poly.degree());
    }
  return out;
}

// count contributions of poles and of x = infinity when f is regular there
mpz_class boundary_points(const CurveEquation& eq, unsigned k, const LogField& L, const Embedding& emb,
                          const std::vector<std::uint8_t>& in_image, std::uint64_t kernel,
                          const std::vector<std::uint32_t>* hist) {
  mpz_class total = 0;
  for (auto [mult, deg] : pole_places(eq.f))
    if (k % deg == 0) total += deg;
  const auto& f = eq.f;
  if (f.pole_order_at_infinity() <= 0) {
    Elem c = 0;
    if (f.num().degree() == f.den().degree()) c = f.field()->div(f.num().lead(), f.den().lead());
    std::uint32_t lc = L.to_log(emb.embed(c));
    if (hist)
      total += (*hist)[lc == kZero ? L.order() : lc];
    else if (lc == kZero || in_image[lc])
      total += kernel;
  }
  return total;
}

const AdditivePolynomial& additive_of(const CurveEquation& eq) {
  if (eq.kind != CurveEquation::Kind::artin_schreier || !eq.A) throw InvalidArgument("not an Artin-Schreier equation");
  return *eq.A;
}

}  // namespace

CurveEquation CurveEquation::artin_schreier(const FieldPtr& base, std::uint64_t q, const RationalFunction& f) {
  return artin_schreier(AdditivePolynomial::wp(base, q), f);
}

CurveEquation CurveEquation::artin_schreier(const AdditivePolynomial& A, const RationalFunction& f) {
  if (!A.field()->same_as(*f.field())) throw InvalidArgument("A and f must share the base field");
  CurveEquation e;
  e.kind = Kind::artin_schreier;
  e.base = A.field();
  e.A = A;
  e.f = f;
  pole_places(f);
  return e;
}

CurveEquation CurveEquation::plane_affine(const FieldPtr& base, std::vector<Term> terms, std::int64_t points_at_infinity) {
  CurveEquation e;
  e.kind = Kind::plane_affine;
  e.base = base;
  for (const auto& t : terms)
    if (!base->contains(t.coeff)) throw InvalidArgument("coefficient outside the base field");
  e.terms = std::move(terms);
  e.points_at_infinity = points_at_infinity;
  return e;
}

ASCoverSpec CurveEquation::spec() const {
  const auto& A = additive_of(*this);
  ASCoverSpec s;
  s.p = base->p();
  s.q = A.degree();
  for (auto [mult, deg] : pole_places(f))
    for (std::int64_t i = 0; i < deg; ++i) s.poles.push_back(mult);
  s.validate();
  return s;
}

mpz_class count_points(const CurveEquation& eq, unsigned k) {
  if (eq.kind == CurveEquation::Kind::plane_affine) {
    auto S = setup(eq.base, k, 1, "plane count");
    const LogField& L = *S.L;
    const std::uint64_t N = L.size();
    require_budget(N * N, "plane count over F_" + S.E->descriptor());
    std::vector<std::uint32_t> cl;
    for (const auto& t : eq.terms) cl.push_back(L.to_log(S.emb->embed(t.coeff)));
    // index N-1 stands for the zero element
    auto lg = [&](std::uint64_t i) { return i + 1 == N ? kZero : static_cast<std::uint32_t>(i); };
    std::uint64_t affine = parallel_sum(N, [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t c = 0;
      for (std::uint64_t xi = lo; xi < hi; ++xi) {
        std::uint32_t x = lg(xi);
        for (std::uint64_t zi = 0; zi < N; ++zi) {
          std::uint32_t z = lg(zi), acc = kZero;
          for (std::size_t t = 0; t < cl.size(); ++t)
            acc = L.add(acc, L.mul(cl[t], L.mul(L.pow(x, eq.terms[t].x_exp), L.pow(z, eq.terms[t].z_exp))));
          if (acc == kZero) ++c;
        }
      }
      return c;
    });
    return mpz_class(std::to_string(affine)) + eq.points_at_infinity;
  }

  const auto& A = additive_of(eq);
  auto S = setup(eq.base, k, 2, "point count");
  const LogField& L = *S.L;
  const std::uint32_t p = eq.base->p();
  auto img = image_of(L, *S.emb, A, p);
  auto num = logs_of(L, *S.emb, eq.f.num());
  auto den = logs_of(L, *S.emb, eq.f.den());
  auto value = [&](std::uint32_t x, std::uint32_t& out) {
    std::uint32_t d = horner(L, den, x);
    if (d == kZero) return false;
    out = L.div(horner(L, num, x), d);
    return true;
  };
  std::uint64_t hits = parallel_sum(L.order(), [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t c = 0;
    for (std::uint64_t x = lo; x < hi; ++x) {
      std::uint32_t v;
      if (value(static_cast<std::uint32_t>(x), v) && (v == kZero || img.in_image[v])) ++c;
    }
    return c;
  });
  std::uint32_t v0;
  if (value(kZero, v0) && (v0 == kZero || img.in_image[v0])) ++hits;
  mpz_class total = mpz_class(std::to_string(hits)) * mpz_class(std::to_string(img.kernel));
  total += boundary_points(eq, k, L, *S.emb, img.in_image, img.kernel, nullptr);
  return total;
}

mpz_class count_points_z_major(const CurveEquation& eq, unsigned k) {
  const auto& A = additive_of(eq);
  auto S = setup(eq.base, k, 2, "point count");
  const LogField& L = *S.L;
  // hist[log] = #{z : A(z) = value}, slot order() for the value zero
  std::vector<std::uint32_t> hist(L.order() + 1, 0);
  hist[L.order()] = 1;  // z = 0
  for (std::uint32_t v : additive_values(L, *S.emb, A, eq.base->p())) ++hist[v == kZero ? L.order() : v];
  auto num = logs_of(L, *S.emb, eq.f.num());
  auto den = logs_of(L, *S.emb, eq.f.den());
  mpz_class total = 0;
  std::uint64_t affine = 0;
  for (std::uint64_t xi = 0; xi <= L.order(); ++xi) {
    std::uint32_t x = xi == L.order() ? kZero : static_cast<std::uint32_t>(xi);
    std::uint32_t d = horner(L, den, x);
    if (d == kZero) continue;
    std::uint32_t v = L.div(horner(L, num, x), d);
    affine += hist[v == kZero ? L.order() : v];
  }
  total = mpz_class(std::to_string(affine));
  total += boundary_points(eq, k, L, *S.emb, {}, 0, &hist);
  return total;
}

// ---- L-polynomials ----

namespace {

mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// power sums s_1..s_K of the inverse roots from coefficients a_0..a_d (Newton's identities)
std::vector<mpz_class> power_sums(const std::vector<mpz_class>& a, unsigned K) {
  std::vector<mpz_class> s(K + 1, 0);
  auto coef = [&](unsigned i) { return i < a.size() ? a[i] : mpz_class(0); };
  for (unsigned k = 1; k <= K; ++k) {
    mpz_class v = -mpz_class(k) * coef(k);
    for (unsigned i = 1; i < k; ++i) v -= s[i] * coef(k - i);
    s[k] = v;
  }
  return s;
}

}  // namespace

bool LPolynomial::functional_equation_holds() const {
  if (coeffs.empty() || coeffs[0] != 1 || coeffs.size() % 2 == 0) return false;
  const int g = genus();
  for (int i = 0; i <= 2 * g; ++i) {
    const int j = 2 * g - i;
    // a_{2g-i} = r^{g-i} a_i, read for i <= g
    if (i <= g && coeffs[j] != ipow(r, g - i) * coeffs[i]) return false;
  }
  return true;
}

mpz_class LPolynomial::predicted_count(unsigned k) const {
  auto s = power_sums(coeffs, k);
  return ipow(r, k) + 1 - s[k];
}

std::string LPolynomial::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    mpz_class c = coeffs[i];
    std::string term;
    bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0 || c != 1) term = c.get_str();
    if (i > 0) term += (i == 0 || c != 1 ? "*" : "") + var + (i > 1 ? "^" + std::to_string(i) : "");
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

LPolynomial operator*(const LPolynomial& a, const LPolynomial& b) {
  if (a.r != b.r) throw InvalidArgument("L-polynomials over different fields");
  LPolynomial c;
  c.r = a.r;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return c;
}

LPolynomial l_polynomial(const std::vector<mpz_class>& counts, int g, const mpz_class& r) {
  if (g < 0) throw InvalidArgument("genus must be nonnegative");
  if (static_cast<int>(counts.size()) < g)
    throw InvalidArgument("need at least " + std::to_string(g) + " counts, got " + std::to_string(counts.size()));
  const unsigned K = static_cast<unsigned>(counts.size());
  std::vector<mpz_class> s(K + 1, 0);
  for (unsigned k = 1; k <= K; ++k) s[k] = ipow(r, k) + 1 - counts[k - 1];
  LPolynomial L;
  L.r = r;
  L.coeffs.assign(2 * g + 1, 0);
  L.coeffs[0] = 1;
  for (int k = 1; k <= g; ++k) {
    mpz_class v = 0;
    for (int i = 1; i <= k; ++i) v -= s[i] * L.coeffs[k - i];
    if (v % k != 0) throw CheckFailed("Newton identity gives a non-integral coefficient");
    L.coeffs[k] = v / k;
  }
  for (int i = 0; i < g; ++i) L.coeffs[2 * g - i] = ipow(r, g - i) * L.coeffs[i];
  auto pred = power_sums(L.coeffs, K);
  for (unsigned k = 1; k <= K; ++k)
    if (pred[k] != s[k])
      throw CheckFailed("functional equation fails: N_" + std::to_string(k) + " = " + counts[k - 1].get_str() +
                        " but the genus-" + std::to_string(g) + " L-polynomial predicts " +
                        mpz_class(ipow(r, k) + 1 - pred[k]).get_str());
  return L;
}

namespace {

using QPoly = std::vector<mpq_class>;  // low degree first

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  qtrim(a);
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

QPoly qdiv(QPoly a, const QPoly& b) {
  qtrim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    q[sh] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  return q;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    auto r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

long double rh_deviation(const LPolynomial& L) {
  const int d = L.degree();
  if (d <= 0) return 0;
  // reciprocal polynomial sum a_i alpha^{d-i}, whose roots are the inverse roots
  QPoly P(d + 1);
  for (int i = 0; i <= d; ++i) P[d - i] = mpq_class(L.coeffs[i]);
  QPoly dP;
  for (int i = 1; i <= d; ++i) dP.push_back(P[i] * i);
  QPoly sq = qdiv(P, qgcd(P, dP));
  const int m = static_cast<int>(sq.size()) - 1;
  if (m <= 0) return 0;
  // scale alpha = sqrt(r) beta so that all roots should lie on the unit circle
  using C = std::complex<long double>;
  const long double sr = std::sqrt(static_cast<long double>(L.r.get_d()));
  std::vector<C> c(m + 1);
  for (int i = 0; i <= m; ++i) {
    mpq_class v = sq[i] / sq[m];
    long double num = std::stold(v.get_num().get_str()), den = std::stold(v.get_den().get_str());
    c[i] = C(num / den * std::pow(sr, static_cast<long double>(i - m)), 0);
  }
  auto eval = [&](C z) {
    C acc = 0;
    for (int i = m; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
  auto deriv = [&](C z) {
    C acc = 0;
    for (int i = m; i >= 1; --i) acc = acc * z + c[i] * static_cast<long double>(i);
    return acc;
  };
  std::vector<C> z(m);
  for (int i = 0; i < m; ++i) z[i] = std::pow(C(0.4L, 0.9L), i);
  for (int it = 0; it < 5000; ++it) {
    long double change = 0;
    for (int i = 0; i < m; ++i) {
      C den = 1;
      for (int j = 0; j < m; ++j)
        if (j != i) den *= z[i] - z[j];
      C step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  long double dev = 0;
  for (auto w : z) {
    for (int it = 0; it < 5; ++it) {
      C dv = deriv(w);
      if (std::abs(dv) == 0) break;
      w -= eval(w) / dv;
    }
    dev = std::max(dev, std::fabs(std::abs(w) - 1.0L));
  }
  return dev;
}

SlopeSet slopes(const LPolynomial& L, std::uint32_t p) {
  const int e = log_p(L.r.get_ui(), p);
  if (e < 1 || L.r != mpz_class(L.r.get_ui())) throw InvalidArgument("r is not a power of p");
  struct Pt {
    long long i, v;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= L.degree(); ++i) {
    if (L.coeffs[i] == 0) continue;
    mpz_class t = L.coeffs[i];
    long long v = 0;
    while (t % p == 0) {
      t /= p;
      ++v;
    }
    pts.push_back({i, v});
  }
  std::vector<Pt> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b unless it lies strictly below the segment a-q
      if ((b.v - a.v) * (q.i - a.i) >= (q.v - a.v) * (b.i - a.i))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  SlopeSet out;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    mpq_class s(static_cast<long>(hull[k].v - hull[k - 1].v), static_cast<long>((hull[k].i - hull[k - 1].i) * e));
    s.canonicalize();
    for (long long t = 0; t < hull[k].i - hull[k - 1].i; ++t) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int prank_from_L(const LPolynomial& L, std::uint32_t p) {
  auto s = slopes(L, p);
  return static_cast<int>(std::count(s.begin(), s.end(), mpq_class(0)));
}

int ss_divisibility(const LPolynomial& L, const mpz_class& r, unsigned nu) {
  if (nu < 1) throw InvalidArgument("nu must be positive");
  const mpz_class c = ipow(r, nu);
  const std::size_t step = 2 * nu;
  std::vector<mpz_class> a = L.coeffs;
  int mult = 0;
  while (a.size() > step) {
    // divide by 1 + c T^step from the low end, then confirm the product
    std::vector<mpz_class> q(a.size() - step);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = a[i] - (i >= step ? c * q[i - step] : mpz_class(0));
    std::vector<mpz_class> back(a.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      back[i] += q[i];
      back[i + step] += c * q[i];
    }
    if (back != a) break;
    a = std::move(q);
    ++mult;
  }
  return mult;
}

bool newton_above_hodge(const SlopeSet& newton, const SlopeSet& hodge) {
  if (newton.size() != hodge.size()) return false;
  mpq_class n = 0, h = 0;
  for (std::size_t i = 0; i < newton.size(); ++i) {
    n += newton[i];
    h += hodge[i];
    if (n < h) return false;
  }
  return n == h;
}

ZetaResult zeta_of(const CurveEquation& eq, int g, unsigned extra) {
  ZetaResult z;
  const unsigned K = static_cast<unsigned>(std::max(g, 0)) + extra;
  for (unsigned k = 1; k <= K; ++k) z.counts.push_back(count_points(eq, k));
  z.L = l_polynomial(z.counts, g, mpz_class(std::to_string(eq.base->size())));
  return z;
}

DecomposeReport decompose_check(const RationalFunction& f) {
  const FieldPtr& F = f.field();
  const std::uint32_t p = F->p();
  const std::uint64_t q = F->size();
  DecomposeReport rep;
  auto C = CurveEquation::artin_schreier(F, q, f);
  rep.big = zeta_of(C, static_cast<int>(as_genus(C.spec()))).L;
  std::vector<bool> covered(q, false);
  for (Elem mu = 1; mu < q; ++mu) {
    if (covered[mu]) continue;
    rep.representatives.push_back(mu);
    for (std::uint32_t c = 1; c < p; ++c) covered[F->scale(mu, c)] = true;
  }
  rep.product.r = mpz_class(std::to_string(q));
  rep.product.coeffs = {1};
  for (Elem mu : rep.representatives) {
    auto Z = CurveEquation::artin_schreier(F, p, RationalFunction::constant(F, mu) * f);
    auto L = zeta_of(Z, static_cast<int>(as_genus(Z.spec()))).L;
    rep.factors.push_back(L);
    rep.product = rep.product * L;
  }
  rep.equal = rep.product == rep.big;
  return rep;
}

RationalFunction default_function(const FieldPtr& F, const std::vector<std::int64_t>& poles) {
  if (poles.empty()) throw InvalidArgument("need at least one pole");
  if (poles.size() - 1 > F->size()) throw InvalidArgument("not enough rational points for the requested poles");
  RationalFunction x(Poly::x(F));
  RationalFunction f = x.pow(poles[0]);
  for (std::size_t i = 1; i < poles.size(); ++i) {
    Elem c = F->from_int(static_cast<std::int64_t>(i - 1));
    f = f + RationalFunction(Poly::linear(F, c)).pow(-poles[i]);
  }
  if (F->n() > 1 && poles.size() - 1 > F->p()) throw InvalidArgument("pole points beyond the prime field");
  return f;
}

CurveEquation parse_as_equation(const FieldPtr& base, const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  std::optional<std::uint64_t> q;
  std::optional<AdditivePolynomial> A;
  std::optional<RationalFunction> f;
  for (auto& part : parts) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected key=value in '" + part + "'");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    if (key == "q") {
      try {
        q = std::stoull(val);
      } catch (const std::exception&) {
        throw InvalidArgument("bad q: " + val);
      }
    } else if (key == "A") {
      A = parse_addpoly(base, val);
    } else if (key == "f") {
      f = parse_ratfun(base, val, "x");
    } else {
      throw InvalidArgument("unknown key '" + key + "'");
    }
  }
  if (!f) throw InvalidArgument("missing f");
  if (A) return CurveEquation::artin_schreier(*A, *f);
  if (!q) throw InvalidArgument("missing q or A");
  if (log_p(*q, base->p()) < 1) throw InvalidArgument("q must be a power of p");
  return CurveEquation::artin_schreier(base, *q, *f);
}

}  // namespace aslab

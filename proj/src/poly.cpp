#include "aslab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "aslab/errors.hpp"
#include "aslab/ntt.hpp"

namespace aslab {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field() || !a.F().same_as(b.F())) throw InvalidArgument("polynomials over different fields");
}

std::vector<Elem> schoolbook(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> r(a.size() + b.size() - 1, 0);
  if (F.n() == 1) {
    const std::uint64_t p = F.p();
    if (p < (1u << 16)) {
      std::vector<std::uint64_t> acc(r.size(), 0);
      // flush before the accumulators can overflow
      const std::size_t limit = std::max<std::size_t>(1, (std::uint64_t(1) << 62) / ((p - 1) * (p - 1) + 1));
      std::size_t used = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
        if (++used == limit) {
          for (auto& x : acc) x %= p;
          used = 0;
        }
      }
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = acc[k] % p;
    } else {
      std::vector<unsigned __int128> acc(r.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<Elem>(acc[k] % p);
    }
    return r;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

// Kronecker substitution: coefficient i, digit j goes to slot i*s + j with s = 2n-1,
// so digit products never collide; one integer convolution does the whole product.
std::vector<Elem> kronecker(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  const unsigned n = F.n();
  const std::uint64_t p = F.p();
  const std::size_t s = 2 * n - 1;
  auto pack = [&](const std::vector<Elem>& v) {
    std::vector<std::uint64_t> out(v.size() * s, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      Elem x = v[i];
      for (unsigned j = 0; j < n && x; ++j) {
        out[i * s + j] = x % p;
        x /= p;
      }
    }
    return out;
  };
  auto A = pack(a);
  std::vector<std::uint64_t> C;
  if (&a == &b) {
    C = ntt::convolve(A, A);
  } else {
    auto B = pack(b);
    C = ntt::convolve(A, B);
  }
  const std::size_t out = a.size() + b.size() - 1;
  std::vector<Elem> r(out);
  const auto& m = F.modulus();
  std::vector<std::uint64_t> y(s);
  for (std::size_t k = 0; k < out; ++k) {
    if (n == 1) {
      r[k] = C[k] % p;
      continue;
    }
    for (std::size_t j = 0; j < s; ++j) {
      std::size_t idx = k * s + j;
      y[j] = idx < C.size() ? C[idx] % p : 0;
    }
    for (std::size_t d = s - 1; d >= n; --d) {
      std::uint64_t c = y[d];
      if (!c) continue;
      for (unsigned i = 0; i < n; ++i) y[d - n + i] = (y[d - n + i] + (p - c) * m[i]) % p;
    }
    Elem v = 0;
    for (unsigned i = n; i-- > 0;) v = v * p + y[i];
    r[k] = v;
  }
  return r;
}

}  // namespace

std::vector<Elem> poly_multiply(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t shorter = std::min(a.size(), b.size());
  if (shorter <= 24) return schoolbook(F, a, b);
  const unsigned __int128 bound =
      static_cast<unsigned __int128>(shorter) * F.n() * (F.p() - 1) * (F.p() - 1);
  if (bound >= ntt::kPrime) return schoolbook(F, a, b);
  return kronecker(F, a, b);
}

Poly::Poly(FieldPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { normalize(); }

Poly Poly::constant(FieldPtr F, Elem c) { return Poly(std::move(F), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr F, Elem c, std::size_t deg) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(std::move(F), std::move(v));
}

Poly Poly::linear(FieldPtr F, Elem a) {
  Elem na = F->neg(a);
  return Poly(std::move(F), std::vector<Elem>{na, 1});
}

Poly& Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  return *this;
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(F_);
  std::vector<Elem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = F_->scale(c_[i], static_cast<std::uint32_t>(i % F_->p()));
  return Poly(F_, std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(F_->inv(c_.back()));
}

Poly Poly::scaled(Elem s) const {
  if (s == 1) return *this;
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], s);
  return Poly(F_, std::move(r));
}

Poly Poly::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
  return Poly(F_, std::move(r));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(F_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::translate(Elem a) const {
  Poly r(F_);
  Poly lin(F_, std::vector<Elem>{a, 1});
  for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(F_, c_[i]);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!F_) F_ = o.F_;
  if (o.c_.empty()) return *this;
  require_same(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
  return normalize();
}

Poly& Poly::operator-=(const Poly& o) {
  if (!F_) F_ = o.F_;
  if (o.c_.empty()) return *this;
  require_same(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
  return normalize();
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return Poly(a.field(), poly_multiply(a.F(), a.coeffs(), b.coeffs()));
}

Poly Poly::operator-() const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
  return Poly(F_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
  if (c_ != o.c_) return false;
  if (c_.empty()) return true;
  return F_->same_as(*o.F_);
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    std::string coef = F_->n() == 1 ? std::to_string(c_[i]) : F_->format(c_[i]);
    if (i == 0) {
      os << coef;
    } else {
      if (c_[i] != 1) os << coef << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const Field& F = a.F();
  if (a.degree() < b.degree()) return {Poly(a.field()), a};
  std::vector<Elem> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Elem> q(r.size() - db, 0);
  const Elem li = F.inv(d.back());
  const bool monic = d.back() == 1;
  for (std::size_t k = r.size(); k-- > db;) {
    Elem c = r[k];
    if (!c) continue;
    if (!monic) c = F.mul(c, li);
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i)
      if (d[i]) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, d[i]));
  }
  r.resize(db);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw CheckFailed("inexact polynomial division");
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  if (!a.field()) return b.monic();
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, const mpz_class& e, const Poly& m) {
  Poly r = Poly::constant(m.field(), 1) % m;
  Poly base = a % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
  }
  return r;
}

unsigned remove_factor(Poly& a, const Poly& d) {
  unsigned k = 0;
  if (a.is_zero() || d.degree() < 1) return 0;
  while (true) {
    auto [q, r] = divmod(a, d);
    if (!r.is_zero()) break;
    a = std::move(q);
    ++k;
  }
  return k;
}

}  // namespace aslab

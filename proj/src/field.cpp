#include "aslab/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "aslab/errors.hpp"

namespace aslab {

namespace {

using Vec = std::vector<std::uint64_t>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f over F_p, f monic
Vec mod_p(Vec a, const Vec& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    std::uint64_t c = a.back();
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

Vec mulmod_p(const Vec& a, const Vec& b, const Vec& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return mod_p(std::move(r), f, p);
}

Vec powmod_p(Vec base, std::uint64_t e, const Vec& f, std::uint64_t p) {
  Vec r{1};
  base = mod_p(base, f, p);
  while (e) {
    if (e & 1) r = mulmod_p(r, base, f, p);
    e >>= 1;
    if (e) base = mulmod_p(base, base, f, p);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * a % p);
    a = static_cast<std::uint64_t>((unsigned __int128)a * a % p);
    e >>= 1;
  }
  return r;
}

Vec gcd_p(Vec a, Vec b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = c * li % p;
    a = mod_p(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

Vec to_vec(const std::vector<std::uint32_t>& f) { return Vec(f.begin(), f.end()); }

// x^{(N-1)/l} != 1 for every prime l | N-1, with N = p^n
bool x_is_primitive(const Vec& f, std::uint64_t p, std::uint64_t N) {
  for (auto l : prime_factors(N - 1)) {
    Vec r = powmod_p(Vec{0, 1}, (N - 1) / l, f, p);
    if (r.size() == 1 && r[0] == 1) return false;
  }
  // degree-1 moduli: x is the constant -f0; it must also be nonzero
  return !(f.size() == 2 && f[0] == 0);
}

std::uint64_t checked_power(std::uint64_t p, unsigned n) {
  unsigned __int128 s = 1;
  for (unsigned i = 0; i < n; ++i) {
    s *= p;
    if (s >= (static_cast<unsigned __int128>(1) << 62)) throw InvalidArgument("field too large: p^n must be below 2^62");
  }
  return static_cast<std::uint64_t>(s);
}

}  // namespace

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod64(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  for (std::uint64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int log_p(std::uint64_t r, std::uint32_t p) {
  if (r < p || p < 2) return -1;
  int k = 0;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  return r == 1 ? k : -1;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& fin, std::uint32_t p) {
  Vec f = to_vec(fin);
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  std::uint64_t li = inv_mod(f.back(), p);
  for (auto& c : f) c = c * li % p;
  Vec h{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = powmod_p(h, p, f, p);
    Vec d = h;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    Vec g = gcd_p(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

bool irreducible_by_trial_division(const std::vector<std::uint32_t>& fin, std::uint32_t p) {
  Vec f = to_vec(fin);
  trim(f);
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = checked_power(p, static_cast<unsigned>(d));
    for (std::uint64_t v = 0; v < count; ++v) {
      Vec g(d + 1);
      std::uint64_t t = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned n) {
  const std::uint64_t count = checked_power(p, n);
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<std::uint32_t> f(n + 1);
    std::uint64_t t = v;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[n] = 1;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw CheckFailed("no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime_u64(p)) throw InvalidArgument("p must be prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw InvalidArgument("modulus must be monic of degree >= 1");
  n_ = static_cast<unsigned>(modulus_.size() - 1);
  size_ = checked_power(p, n_);
  pw_.resize(n_ + 1);
  pw_[0] = 1;
  for (unsigned i = 1; i <= n_; ++i) pw_[i] = pw_[i - 1] * p;
  gen_ = n_ >= 2 ? Elem(p) : Elem((p - modulus_[0] % p) % p);

  if (p_ != 2 && size_ <= 256) {
    add_table_.resize(size_ * size_);
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b) add_table_[a * size_ + b] = static_cast<std::uint32_t>(add_slow(a, b, false));
  }
  if (size_ <= (1u << 20)) {
    Elem g = 0;
    auto factors = prime_factors(size_ - 1);
    auto pow_slow = [&](Elem a, std::uint64_t e) {
      Elem r = 1;
      while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
      }
      return r;
    };
    for (Elem a = 1; a < size_; ++a) {
      bool ok = true;
      for (auto l : factors)
        if (pow_slow(a, (size_ - 1) / l) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        g = a;
        break;
      }
    }
    if (size_ == 2) g = 1;
    exp_.resize(size_ - 1);
    log_.assign(size_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i + 1 < size_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(cur);
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = mul_slow(cur, g);
    }
  }
}

bool Field::same_as(const Field& o) const { return this == &o || (p_ == o.p_ && modulus_ == o.modulus_); }

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::from_digits(std::span<const std::uint32_t> c) const {
  if (c.size() > n_) throw InvalidArgument("too many coefficients for field " + descriptor());
  Elem v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return v;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(n_);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

Elem Field::add_slow(Elem a, Elem b, bool subtract) const {
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t x = a % p_, y = b % p_;
    a /= p_;
    b /= p_;
    std::uint64_t s = subtract ? (x + p_ - y) % p_ : (x + y) % p_;
    r += s * pw_[i];
  }
  return r;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  return add_slow(a, b, false);
}

Elem Field::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  if (n_ == 1) return p_ - a;
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t x = a % p_;
    a /= p_;
    r += (x ? p_ - x : 0) * pw_[i];
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return a >= b ? a - b : a + p_ - b;
  if (!add_table_.empty()) return add_table_[a * size_ + neg(b)];
  return add_slow(a, b, true);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (n_ == 1) return static_cast<Elem>((unsigned __int128)a * b % p_);
  std::vector<std::uint64_t> x(n_), y(n_), r(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < n_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
  }
  for (unsigned k = 2 * n_ - 2; k >= n_; --k) {
    std::uint64_t c = r[k];
    if (!c) continue;
    for (unsigned i = 0; i < n_; ++i) r[k - n_ + i] = (r[k - n_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  Elem v = 0;
  for (unsigned i = n_; i-- > 0;) v = v * p_ + r[i];
  return v;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  return mul_slow(a, b);
}

Elem Field::scale(Elem a, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return 0;
  if (c == 1) return a;
  if (n_ == 1) return static_cast<Elem>((std::uint64_t)a * c % p_);
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t x = a % p_;
    a /= p_;
    r += (x * c % p_) * pw_[i];
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("division by zero in " + descriptor());
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[static_cast<std::uint64_t>((unsigned __int128)log_[a] * e % (size_ - 1))];
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Elem Field::pow(Elem a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), mpz_class(-e));
  if (e == 0) return 1;
  if (a == 0) return 0;
  mpz_class r = e % mpz_class(std::to_string(size_ - 1));
  return pow(a, static_cast<std::uint64_t>(std::stoull(r.get_str())));
}

Elem Field::frobenius_power(Elem a, unsigned k) const {
  k %= n_;
  for (unsigned i = 0; i < k; ++i) a = pow(a, p_);
  return a;
}

Elem Field::frobenius(Elem a, std::uint64_t r) const {
  int k = log_p(r, p_);
  if (k < 1) throw InvalidArgument("Frobenius exponent must be a positive power of p");
  return frobenius_power(a, static_cast<unsigned>(k));
}

Elem Field::pth_root(Elem a) const { return frobenius_power(a, n_ - 1); }

int Field::quadratic_character(Elem a) const {
  if (p_ == 2) throw InvalidArgument("quadratic character needs odd characteristic");
  if (a == 0) return 0;
  return pow(a, (size_ - 1) / 2) == 1 ? 1 : -1;
}

std::uint32_t Field::absolute_trace(Elem a) const {
  Elem s = 0, x = a;
  for (unsigned i = 0; i < n_; ++i) {
    s = add(s, x);
    x = pow(x, p_);
  }
  return static_cast<std::uint32_t>(s);
}

std::uint64_t Field::order(Elem a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t ord = size_ - 1;
  for (auto l : prime_factors(size_ - 1))
    while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
  return ord;
}

Elem Field::primitive_element() const {
  if (!exp_.empty()) {
    // the table generator is the least primitive element by construction
    return size_ == 2 ? 1 : exp_[1];
  }
  for (Elem a = 1; a < size_; ++a)
    if (order(a) == size_ - 1) return a;
  throw CheckFailed("no primitive element");
}

std::string Field::format(Elem a) const {
  auto d = digits(a);
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < n_; ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}

Elem Field::parse(const std::string& s) const {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw InvalidArgument("empty element literal");
  if (t.front() != '[') return from_int(std::stoll(t));
  if (t.back() != ']') throw InvalidArgument("bad element literal: " + s);
  std::vector<std::uint32_t> c;
  std::string body = t.substr(1, t.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidArgument("bad element literal: " + s);
    long long v = std::stoll(item);
    c.push_back(static_cast<std::uint32_t>(from_int(v)));
  }
  return from_digits(c);
}

std::string Field::descriptor() const { return std::to_string(p_) + "^" + std::to_string(n_); }

FieldPtr make_field(std::uint32_t p, unsigned n) {
  if (!is_prime_u64(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (n < 1 || n > 16) throw InvalidArgument("extension degree must satisfy 1 <= n <= 16");
  checked_power(p, n);
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto m = least_irreducible(p, n);
  // exhaustive confirmation whenever the number of trial divisors is modest
  unsigned __int128 divisors = 0, pd = 1;
  for (unsigned d = 1; d <= n / 2; ++d) {
    pd *= p;
    divisors += pd;
  }
  if (divisors <= (1u << 22) && !irreducible_by_trial_division(m, p)) throw CheckFailed("modulus failed trial division");
  auto F = std::make_shared<const Field>(p, std::move(m));
  cache.emplace(key, F);
  return F;
}

FieldPtr make_primitive_field(std::uint32_t p, unsigned n) {
  if (!is_prime_u64(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidArgument("extension degree must be positive");
  const std::uint64_t N = checked_power(p, n);
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::uint32_t> f(n + 1);
  for (std::uint64_t v = 0; v < N; ++v) {
    std::uint64_t t = v;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[n] = 1;
    if (!is_irreducible_mod_p(f, p)) continue;
    if (!x_is_primitive(to_vec(f), p, N)) continue;
    auto F = std::make_shared<const Field>(p, f);
    cache.emplace(key, F);
    return F;
  }
  throw CheckFailed("no primitive polynomial found");
}

FieldPtr parse_field(const std::string& s) {
  auto caret = s.find('^');
  try {
    if (caret != std::string::npos) {
      auto p = std::stoul(s.substr(0, caret));
      auto n = std::stoul(s.substr(caret + 1));
      return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(n));
    }
    auto q = std::stoull(s);
    auto f = prime_factors(q);
    if (f.size() != 1) throw InvalidArgument("field size must be a prime power: " + s);
    return make_field(static_cast<std::uint32_t>(f[0]), static_cast<unsigned>(log_p(q, static_cast<std::uint32_t>(f[0]))));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidArgument*>(&e)) throw;
    throw InvalidArgument("bad field literal: " + s);
  }
}

FieldElement::FieldElement(FieldPtr F, Elem v) : F_(std::move(F)), v_(v) {
  if (!F_ || !F_->contains(v_)) throw InvalidArgument("element out of range");
}

FieldElement FieldElement::from_coeffs(FieldPtr F, const std::vector<std::uint32_t>& c) {
  Elem v = F->from_digits(c);
  return FieldElement(std::move(F), v);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!F_ || !o.F_ || !F_->same_as(*o.F_)) throw InvalidArgument("elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {F_, F_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {F_, F_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {F_, F_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {F_, F_->div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {F_, F_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {F_, F_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {F_, F_->pow(v_, e)}; }
FieldElement FieldElement::frobenius(std::uint64_t r) const { return {F_, F_->frobenius(v_, r)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return v_ == o.v_;
}

int quadratic_character(const FieldElement& x) { return x.field()->quadratic_character(x.value()); }

std::uint32_t additive_character(const FieldElement& beta, const FieldElement& alpha) {
  FieldElement prod = beta * alpha;
  return prod.field()->absolute_trace(prod.value());
}

}  // namespace aslab

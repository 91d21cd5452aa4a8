#include "aslab/ntt.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace aslab::ntt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 reduce128(u128 x) {
  u64 lo = static_cast<u64>(x), hi = static_cast<u64>(x >> 64);
  u64 hh = hi >> 32, hl = hi & 0xFFFFFFFFULL;
  // x = lo + hl*2^64 + hh*2^96 with 2^64 = 2^32-1 and 2^96 = -1
  u64 t = lo - hh;
  if (lo < hh) t += kPrime;
  u64 m = (hl << 32) - hl;
  u64 r = t + m;
  if (r < t || r >= kPrime) r -= kPrime;
  return r;
}

inline u64 mulm(u64 a, u64 b) { return reduce128(static_cast<u128>(a) * b); }
inline u64 addm(u64 a, u64 b) {
  u64 r = a + b;
  if (r < a || r >= kPrime) r -= kPrime;
  return r;
}
inline u64 subm(u64 a, u64 b) { return a >= b ? a - b : a + (kPrime - b); }

u64 powm(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}

// roots for every level of a size-2^k transform: entries [h, 2h) hold w_{2h}^j
const std::vector<u64>& twiddles(unsigned logn, bool inverse) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, bool>, std::vector<u64>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(logn, inverse);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const u64 n = u64(1) << logn;
  std::vector<u64> t(std::max<u64>(n, 2));
  for (unsigned l = 1; l <= logn; ++l) {
    const u64 h = u64(1) << (l - 1);
    u64 w = powm(7, (kPrime - 1) >> l);
    if (inverse) w = powm(w, kPrime - 2);
    t[h] = 1;
    for (u64 j = 1; j < h; ++j) t[h + j] = mulm(t[h + j - 1], w);
  }
  return cache.emplace(key, std::move(t)).first->second;
}

void transform(std::vector<u64>& a, unsigned logn, bool inverse) {
  const u64 n = u64(1) << logn;
  for (u64 i = 1, j = 0; i < n; ++i) {
    u64 bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& tw = twiddles(logn, inverse);
  for (u64 len = 2; len <= n; len <<= 1) {
    const u64 half = len >> 1;
    const u64* w = tw.data() + half;
    for (u64 i = 0; i < n; i += len) {
      for (u64 j = 0; j < half; ++j) {
        u64 u = a[i + j];
        u64 v = mulm(a[i + j + half], w[j]);
        a[i + j] = addm(u, v);
        a[i + j + half] = subm(u, v);
      }
    }
  }
  if (inverse) {
    u64 ninv = powm(n % kPrime, kPrime - 2);
    for (auto& x : a) x = mulm(x, ninv);
  }
}

}  // namespace

std::vector<u64> convolve(const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out = a.size() + b.size() - 1;
  if (std::min(a.size(), b.size()) <= 32) {
    std::vector<u128> acc(out, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i])
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(a[i]) * b[j];
    std::vector<u64> r(out);
    for (std::size_t i = 0; i < out; ++i) r[i] = static_cast<u64>(acc[i] % kPrime);
    return r;
  }
  unsigned logn = 0;
  while ((std::size_t(1) << logn) < out) ++logn;
  const std::size_t n = std::size_t(1) << logn;
  std::vector<u64> fa(n, 0), fb(n, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  transform(fa, logn, false);
  if (&a == &b) {
    fb = fa;
  } else {
    transform(fb, logn, false);
  }
  for (std::size_t i = 0; i < n; ++i) fa[i] = mulm(fa[i], fb[i]);
  transform(fa, logn, true);
  fa.resize(out);
  return fa;
}

}  // namespace aslab::ntt

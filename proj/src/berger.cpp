#include "aslab/berger.hpp"

#include <numeric>

#include "aslab/ascurve.hpp"
#include "aslab/errors.hpp"
#include "aslab/field.hpp"

namespace aslab {

std::int64_t PairType::M() const { return std::accumulate(a.begin(), a.end(), std::int64_t(0)); }
std::int64_t PairType::N() const { return std::accumulate(b.begin(), b.end(), std::int64_t(0)); }

void PairType::validate(std::uint32_t p) const {
  if (a.empty() || b.empty()) throw InvalidArgument("pole types must be nonempty");
  if (g_C < 0 || g_D < 0) throw InvalidArgument("genera must be nonnegative");
  for (const auto* v : {&a, &b})
    for (auto x : *v) {
      if (x < 1) throw InvalidArgument("pole orders must be positive");
      if (p && x % p == 0) throw InvalidArgument("pole order " + std::to_string(x) + " divisible by p");
    }
}

std::int64_t delta(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidArgument("delta needs a, b >= 1");
  return (a * b - a - b + std::gcd(a, b)) / 2;
}

ResolutionCounts resolution_counts(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidArgument("resolution needs a, b >= 1");
  ResolutionCounts r;
  r.c = std::gcd(a, b);
  std::int64_t alpha = a, beta = b, steps = 0;
  while (a != b) {
    r.multiplicities.push_back(std::min(a, b));
    if (a < b) {
      b -= a;
      beta += alpha - a;
    } else {
      a -= b;
      alpha += beta - b;
    }
    ++steps;
  }
  r.multiplicities.push_back(r.c);
  r.gamma = steps + 1;
  r.alpha = alpha;
  r.beta = beta;
  r.delta_stage3 = alpha + beta - r.c;
  r.total_blowups = (r.gamma - 1) + 1 + r.c * r.delta_stage3;
  r.N_ij = r.total_blowups - r.c;
  return r;
}

std::int64_t genus_X(const PairType& pt) {
  pt.validate();
  std::int64_t g = pt.M() * pt.g_D + pt.N() * pt.g_C + (pt.M() - 1) * (pt.N() - 1);
  for (auto x : pt.a)
    for (auto y : pt.b) g -= delta(x, y);
  if (g < 0) throw InvalidArgument("negative genus: invalid type combination");
  return g;
}

std::int64_t c2(const PairType& pt) {
  pt.validate();
  std::int64_t s = 0;
  for (auto x : pt.a)
    for (auto y : pt.b) s += std::gcd(x, y);
  return s - static_cast<std::int64_t>(pt.a.size()) - static_cast<std::int64_t>(pt.b.size()) + 1;
}

std::int64_t c1(std::uint64_t q, const FiberData& fd) {
  std::int64_t s = 0;
  for (const auto& f : fd.finite_fibers) {
    if (f.components < 1 || f.place_degree < 1) throw InvalidArgument("bad fiber data");
    s += (f.components - 1) * f.place_degree;
  }
  return static_cast<std::int64_t>(q) * s;
}

std::int64_t mw_rank(std::int64_t hom_rank, std::int64_t c1v, std::int64_t c2v) {
  std::int64_t r = hom_rank - c1v + c2v;
  if (r < 0) throw CheckFailed("negative rank: inconsistent inputs");
  return r;
}

std::int64_t fiber_at_infinity(const PairType& pt) {
  pt.validate();
  std::int64_t s = static_cast<std::int64_t>(pt.a.size() + pt.b.size());
  for (auto x : pt.a)
    for (auto y : pt.b) s += resolution_counts(x, y).N_ij;
  return s;
}

std::int64_t ns_rank(std::int64_t hom_rank, const PairType& pt) {
  pt.validate();
  std::int64_t s = hom_rank + 2;
  for (auto x : pt.a)
    for (auto y : pt.b) s += resolution_counts(x, y).total_blowups;
  return s;
}

Preset parse_preset(const std::string& s) {
  if (s == "type_2_11") return Preset::type_2_11;
  if (s == "f_eq_g_quadratic") return Preset::f_eq_g_quadratic;
  if (s == "cubic_fermat") return Preset::cubic_fermat;
  if (s == "reciprocal_m") return Preset::reciprocal_m;
  if (s == "generic_selfpair_M") return Preset::generic_selfpair_M;
  throw InvalidArgument("unknown preset: " + s);
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::type_2_11: return "type_2_11";
    case Preset::f_eq_g_quadratic: return "f_eq_g_quadratic";
    case Preset::cubic_fermat: return "cubic_fermat";
    case Preset::reciprocal_m: return "reciprocal_m";
    case Preset::generic_selfpair_M: return "generic_selfpair_M";
  }
  return "?";
}

PresetResult preset_rank(Preset example, std::uint64_t q, std::int64_t param) {
  const std::uint32_t p = q >= 2 && prime_factors(q).size() == 1 ? static_cast<std::uint32_t>(prime_factors(q)[0]) : 0;
  if (p == 0) throw InvalidArgument("q must be a prime power");
  PresetResult r;
  FiberData fd;
  auto simple_poles = [](std::int64_t k) { return std::vector<std::int64_t>(k, 1); };
  switch (example) {
    case Preset::type_2_11: {
      if (p == 2) throw InvalidArgument("type (2,1+1) needs p > 2");
      r.type = {{2}, {1, 1}, 0, 0};
      // J_{C_q} has p-rank 0 and J_{D_q} is ordinary, so Hom vanishes
      ASCoverSpec C{p, q, 0, 0, {2}}, D{p, q, 0, 0, {1, 1}};
      if (as_prank(C) != 0 || as_prank(D) != as_genus(D)) throw CheckFailed("unexpected p-ranks");
      r.hom_rank = 0;
      break;
    }
    case Preset::f_eq_g_quadratic: {
      r.type = {{1, 1}, {1, 1}, 0, 0};
      r.hom_rank = endo_dims({p, q, 0, 0, {1, 1}}, EndoRegime::ordinary);
      fd.finite_fibers.push_back({1, 2});  // I_2 at t = 0 (type III when p = 2)
      break;
    }
    case Preset::cubic_fermat: {
      if (p % 3 != 2) throw InvalidArgument("cubic_fermat needs p = 2 mod 3");
      r.type = {{3}, {3}, 0, 0};
      r.hom_rank = endo_dims({p, q, 0, 0, {3}}, EndoRegime::supersingular_invariants);
      fd.finite_fibers.push_back({1, 3});  // type IV at t = 0
      break;
    }
    case Preset::reciprocal_m: {
      const std::int64_t m = param;
      if (m <= 1 || std::gcd<std::int64_t>(m, 2 * p) != 1) throw InvalidArgument("reciprocal_m needs m > 1 prime to 2p");
      r.type = {simple_poles(m), simple_poles(m), 0, 0};
      r.hom_rank = endo_dims({p, q, 0, 0, simple_poles(m)}, EndoRegime::ordinary);
      fd.finite_fibers.push_back({1, m});
      break;
    }
    case Preset::generic_selfpair_M: {
      const std::int64_t M = param;
      if (M < 2) throw InvalidArgument("generic_selfpair_M needs M >= 2");
      r.type = {simple_poles(M), simple_poles(M), 0, 0};
      r.hom_rank = endo_dims({p, q, 0, 0, simple_poles(M)}, EndoRegime::ordinary);
      fd.finite_fibers.push_back({1, 2});
      break;
    }
  }
  r.type.validate(p);
  r.c1 = c1(q, fd);
  r.c2 = c2(r.type);
  r.rank = mw_rank(r.hom_rank, r.c1, r.c2);
  r.genus_X = genus_X(r.type);
  return r;
}

}  // namespace aslab

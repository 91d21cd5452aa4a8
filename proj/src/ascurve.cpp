#include "aslab/ascurve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aslab/errors.hpp"
#include "aslab/field.hpp"

namespace aslab {

void ASCoverSpec::validate() const {
  if (!is_prime_u64(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (log_p(q, p) < 1) throw InvalidArgument("q = " + std::to_string(q) + " is not a power of p");
  if (base_genus < 0 || base_prank < 0 || base_prank > base_genus)
    throw InvalidArgument("need 0 <= base p-rank <= base genus");
  if (poles.empty()) throw InvalidArgument("f must have at least one pole");
  for (auto a : poles) {
    if (a < 1) throw InvalidArgument("pole multiplicities must be positive");
    if (a % p == 0) throw InvalidArgument("pole multiplicity " + std::to_string(a) + " divisible by p");
  }
}

std::int64_t ASCoverSpec::pole_sum() const {
  std::int64_t s = 0;
  for (auto a : poles) s += a + 1;
  return s;
}

std::string ASCoverSpec::to_string() const {
  std::ostringstream os;
  os << "p=" << p << ",q=" << q << ",poles=";
  for (std::size_t i = 0; i < poles.size(); ++i) os << (i ? "+" : "") << poles[i];
  if (base_genus) os << ",gC=" << base_genus << ",sC=" << base_prank;
  return os.str();
}

std::int64_t as_genus(const ASCoverSpec& spec) {
  spec.validate();
  const auto q = static_cast<std::int64_t>(spec.q);
  std::int64_t twice = q * (2 * spec.base_genus - 2) + (q - 1) * spec.pole_sum() + 2;
  if (twice < 0 || twice % 2 != 0) throw InvalidArgument("genus formula gives no valid genus");
  return twice / 2;
}

std::int64_t as_prank(const ASCoverSpec& spec) {
  spec.validate();
  const auto q = static_cast<std::int64_t>(spec.q);
  return 1 + q * (spec.base_prank - 1) + static_cast<std::int64_t>(spec.poles.size()) * (q - 1);
}

SlopeSet hodge_polygon(const ASCoverSpec& spec) {
  spec.validate();
  if (spec.base_genus != 0) throw InvalidArgument("Hodge polygon needs base genus 0");
  const auto q = static_cast<std::int64_t>(spec.q);
  const auto m = static_cast<std::int64_t>(spec.poles.size());
  SlopeSet s;
  for (std::int64_t k = 0; k < (m - 1) * (q - 1); ++k) {
    s.emplace_back(0);
    s.emplace_back(1);
  }
  for (auto a : spec.poles)
    for (std::int64_t j = 1; j < a; ++j)
      for (std::int64_t k = 0; k < q - 1; ++k) {
        mpq_class v(j, a);
        v.canonicalize();
        s.push_back(v);
      }
  std::sort(s.begin(), s.end());
  return s;
}

bool newton_equals_hodge(const ASCoverSpec& spec) {
  spec.validate();
  if (spec.base_genus != 0) throw InvalidArgument("criterion needs base genus 0");
  std::int64_t l = 1;
  for (auto a : spec.poles) l = std::lcm(l, a);
  return spec.p % l == 1 % l;
}

EndoRegime parse_endo_regime(const std::string& s) {
  if (s == "image_of_group_algebra") return EndoRegime::image_of_group_algebra;
  if (s == "ordinary") return EndoRegime::ordinary;
  if (s == "supersingular_invariants") return EndoRegime::supersingular_invariants;
  throw InvalidArgument("unknown regime: " + s);
}

std::int64_t endo_dims(const ASCoverSpec& spec, EndoRegime regime) {
  const auto q = static_cast<std::int64_t>(spec.q);
  const std::int64_t g = as_genus(spec);
  switch (regime) {
    case EndoRegime::image_of_group_algebra:
      return q - 1;
    case EndoRegime::ordinary:
      if (as_prank(spec) != g) throw InvalidArgument("ordinary regime requested for a non-ordinary spec");
      return 2 * g;
    case EndoRegime::supersingular_invariants:
      if ((4 * g * g) % (q - 1) != 0)
        throw InvalidArgument("4g^2 is not divisible by q-1 for " + spec.to_string());
      return 4 * g * g / (q - 1);
  }
  throw InvalidArgument("unknown regime");
}

std::vector<ASCoverSpec> decompose(const ASCoverSpec& spec) {
  spec.validate();
  if (spec.base_genus != 0) throw InvalidArgument("decomposition needs base genus 0");
  ASCoverSpec f = spec;
  f.q = spec.p;
  return std::vector<ASCoverSpec>((spec.q - 1) / (spec.p - 1), f);
}

std::int64_t representation_multiplicity(const ASCoverSpec& spec) {
  spec.validate();
  if (spec.base_genus != 0) throw InvalidArgument("needs base genus 0");
  return spec.pole_sum() - 2;
}

std::string format_slope(const mpq_class& s) {
  return s.get_den() == 1 ? s.get_num().get_str() : s.get_str();
}

}  // namespace aslab

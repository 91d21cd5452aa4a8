#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aslab {

/// z^q - z = f over a base curve C; only the pole multiplicities of f are recorded.
struct ASCoverSpec {
  std::uint32_t p = 0;
  std::uint64_t q = 0;
  std::int64_t base_genus = 0;
  std::int64_t base_prank = 0;
  std::vector<std::int64_t> poles;

  void validate() const;
  std::int64_t pole_sum() const;  // sum (a_i + 1)
  std::string to_string() const;
};

/// Ascending multiset of slopes in [0, 1].
using SlopeSet = std::vector<mpq_class>;

std::int64_t as_genus(const ASCoverSpec& spec);
std::int64_t as_prank(const ASCoverSpec& spec);
SlopeSet hodge_polygon(const ASCoverSpec& spec);
bool newton_equals_hodge(const ASCoverSpec& spec);

enum class EndoRegime { image_of_group_algebra, ordinary, supersingular_invariants };
EndoRegime parse_endo_regime(const std::string& s);

std::int64_t endo_dims(const ASCoverSpec& spec, EndoRegime regime);
/// (q-1)/(p-1) copies of the same cover with q replaced by p.
std::vector<ASCoverSpec> decompose(const ASCoverSpec& spec);
/// R = 2g/(q-1) = -2 + sum (a_i + 1), the multiplicity of the regular representation.
std::int64_t representation_multiplicity(const ASCoverSpec& spec);

std::string format_slope(const mpq_class& s);

}  // namespace aslab

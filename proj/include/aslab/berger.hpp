#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aslab {

/// Pole types of f on C and g on D.
struct PairType {
  std::vector<std::int64_t> a, b;
  std::int64_t g_C = 0, g_D = 0;

  std::int64_t M() const;
  std::int64_t N() const;
  /// Throws on nonpositive entries or, when p > 0, entries divisible by p.
  void validate(std::uint32_t p = 0) const;
};

struct FiberData {
  struct Fiber {
    std::int64_t place_degree;
    std::int64_t components;
  };
  std::vector<Fiber> finite_fibers;
};

struct ResolutionCounts {
  std::int64_t gamma = 0;
  std::int64_t delta_stage3 = 0;
  std::int64_t total_blowups = 0;
  std::int64_t N_ij = 0;
  std::int64_t c = 0;
  std::int64_t alpha = 0, beta = 0;  // exponents at the end of stage 1
  /// Multiplicity of the tangent cone of a general pencil member at each blown-up
  /// point of stages 1 and 2; the genus drops by e(e-1)/2 at each.
  std::vector<std::int64_t> multiplicities;
};

std::int64_t delta(std::int64_t a, std::int64_t b);
ResolutionCounts resolution_counts(std::int64_t a, std::int64_t b);
std::int64_t genus_X(const PairType& pt);
std::int64_t c2(const PairType& pt);
std::int64_t c1(std::uint64_t q, const FiberData& fd);
std::int64_t mw_rank(std::int64_t hom_rank, std::int64_t c1, std::int64_t c2);
std::int64_t ns_rank(std::int64_t hom_rank, const PairType& pt);
/// Number of components of the fiber at infinity, sum N_ij + m + n.
std::int64_t fiber_at_infinity(const PairType& pt);

enum class Preset { type_2_11, f_eq_g_quadratic, cubic_fermat, reciprocal_m, generic_selfpair_M };
Preset parse_preset(const std::string& s);
std::string preset_name(Preset p);

struct PresetResult {
  PairType type;
  std::int64_t hom_rank = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t rank = 0;
  std::int64_t genus_X = 0;
};

/// `param` is m for reciprocal_m and M for generic_selfpair_M, ignored otherwise.
PresetResult preset_rank(Preset example, std::uint64_t q, std::int64_t param = 0);

}  // namespace aslab

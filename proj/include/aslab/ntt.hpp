#pragma once

#include <cstdint>
#include <vector>

namespace aslab::ntt {

/// Modulus 2^64 - 2^32 + 1.
inline constexpr std::uint64_t kPrime = 0xFFFFFFFF00000001ULL;

/// Exact convolution of nonnegative integer sequences, valid when every output
/// coefficient is below kPrime (the caller bounds this).
std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

}  // namespace aslab::ntt

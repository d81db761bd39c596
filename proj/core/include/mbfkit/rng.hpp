#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mbfkit {

/// Stable 64-bit sub-seed for a (seed, label) pair. Labels keep the random
/// streams of one run (levels, permutation, beta, samplers) independent, so
/// adding a consumer never shifts the draws of another.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

/// Engine seeded from derive_seed(seed, label).
std::mt19937_64 named_stream(std::uint64_t seed, std::string_view label);

}  // namespace mbfkit

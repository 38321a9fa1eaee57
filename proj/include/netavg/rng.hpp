#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace netavg::rng {

// splitmix64 finalizer. This is the single integer hash behind every random
// stream and every seed-mixing step in the project, so a (seed, stream, index)
// triple always maps to the same value regardless of call order.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream tags keep unrelated uses of the same seed from colliding.
enum Domain : std::uint64_t {
  kRggPoint = 1,
  kEdgeActivation = 2,
  kSample = 3,
  kBelief = 4,
  kEdgeDeletion = 5,
  kRepetition = 6,
};

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept {
  return splitmix64(splitmix64(a) ^ b);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) noexcept {
  return splitmix64(mix(a, b) ^ c);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                            std::uint64_t d) noexcept {
  return splitmix64(mix(a, b, c) ^ d);
}

// Uniform double in [0, 1) from 64 hash bits.
constexpr double uniform01(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller from two independent hash words.
inline double standard_normal(std::uint64_t u_bits,
                              std::uint64_t v_bits) noexcept {
  const double u = 1.0 - uniform01(u_bits);  // (0, 1], keeps log finite
  const double v = uniform01(v_bits);
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace netavg::rng

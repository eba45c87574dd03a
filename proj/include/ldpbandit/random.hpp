#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace ldpb {

/// Deterministic random stream derived from a 64-bit seed.
///
/// Streams form a tree: `child(label, index)` depends only on this stream's
/// seed and the (label, index) pair, never on how many draws have been taken
/// from this stream or its siblings. Trials and arms get their own children,
/// so results do not depend on execution order.
///
/// A stream is single-owner; never share one across threads.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed);

  RandomStream child(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t seed() const { return seed_; }

  // UniformRandomBitGenerator interface, so std distributions accept a stream.
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01();
  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform_open01();
  /// Standard normal draw.
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Anything that hands out open-interval uniforms. Curators are written
/// against this so tests can substitute a fixed-value source.
template <class S>
concept UniformSource = requires(S& s) {
  { s.uniform_open01() } -> std::convertible_to<double>;
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace ldpb

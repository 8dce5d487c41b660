#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

namespace chiralsim {

/// Seeded, deterministic random source. The engine (mt19937_64) has a
/// standard-mandated stream; doubles are drawn from the top 53 bits, so a
/// given seed reproduces the same values on any platform. Substreams are
/// derived from (seed, index) so independent settings can be sampled in
/// any order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static std::string name() { return "mt19937_64"; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  /// Standard normal (Box-Muller; deterministic for a fixed seed).
  double normal();

  /// Index sampled from an unnormalized weight vector.
  std::size_t discrete(std::span<const double> weights);

  /// Deterministically derived independent substream.
  Rng substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// splitmix64 mixing step, used for substream seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace chiralsim

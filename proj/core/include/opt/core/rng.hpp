#pragma once

#include <cstdint>
#include <random>

namespace opt {

/// Deterministic random source shared by every optimizer in the project.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not (libstdc++ and libc++ give
/// different draws), so all derived variates are computed here from raw
/// 64-bit words:
///
///   uniform()       (w >> 11) * 2^-53, in [0, 1)
///   uniform_open()  ((w >> 11) + 0.5) * 2^-53, in (0, 1)
///   uniform_index() Lemire's multiply-shift with rejection, unbiased
///   normal()        Box-Muller on two uniform_open() draws, cosine branch only
///
/// Child streams are seeded with splitmix64 so that sibling streams do not
/// overlap in practice.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  double uniform();
  double uniform_open();
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);
  double normal();

  /// Independent generator for sub-stream `stream`, derived from this seed.
  Rng child(std::uint64_t stream) const;

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for run `run` of method `method` under a master seed.
/// derive_seed(m, a, b) = splitmix64(splitmix64(m + (a+1)·φ) + (b+1)·φ),
/// with φ = 0x9E3779B97F4A7C15.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t method, std::uint64_t run);

}  // namespace opt

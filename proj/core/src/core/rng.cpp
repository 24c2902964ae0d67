#include "opt/core/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opt {

namespace {
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t method, std::uint64_t run) {
  const std::uint64_t a = splitmix64(master + (method + 1) * kGolden);
  return splitmix64(a + (run + 1) * kGolden);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * kTwoPow53Inv; }

double Rng::uniform_open() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * kTwoPow53Inv;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

__extension__ using u128 = unsigned __int128;

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
  const auto range = static_cast<std::uint64_t>(n);
  u128 m = static_cast<u128>(engine_()) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      m = static_cast<u128>(engine_()) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::size_t>(m >> 64);
}

double Rng::normal() {
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::child(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream, 0)); }

}  // namespace opt

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace opt::hraha {

enum class FlightKind { Omnidirectional = 0, Axial = 1, Diagonal = 2 };
inline constexpr std::size_t kFlightKinds = 3;

/// Local move selected by the per-member step size δ. Intervals are
/// right-inclusive: (0.5, 0.75], (0.75, 0.85], (0.85, 0.95], (0.95, 1].
enum class LocalStrategy {
  None = 0,
  StayAndDisguise = 1,
  TerritorialForaging = 2,
  Migration = 3,
  MoveCloser = 4,
};
inline constexpr std::size_t kLocalStrategies = 5;

std::string_view to_string(FlightKind kind);
std::string_view to_string(LocalStrategy s);

struct AlphaThresholds {
  double a1 = 1.0 / 3.0;
  double a2 = 2.0 / 3.0;
  double a3 = 1.0;
};

struct HrahaConfig {
  /// Weight of fitness spread vs. iteration schedule in the scaling factor α.
  double omega = 0.5;
  AlphaThresholds alpha_thresholds;
  /// Radius scale a for stay-and-disguise; nr = a·θ. Must lie in [0, 0.2].
  double scaling_a = 0.2;
  /// Share of the population replaced by one move-closer reproduction.
  double worst_fraction = 0.05;
  /// Minimum iterations between migrations; unset means 2·pop_size.
  std::optional<std::size_t> migration_coefficient;
  double nomad_probability = 0.5;
  /// Step scale λ of territorial foraging. The orbit radius r is the member's
  /// distance to the current best.
  double territorial_lambda = 0.5;
  std::size_t max_iters = 500;
  std::optional<double> target_fitness;
  bool elitism = true;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct StrategyTally {
  std::array<std::size_t, kLocalStrategies> local{};
  std::array<std::size_t, kFlightKinds> flight{};

  std::size_t& operator[](LocalStrategy s) { return local[static_cast<std::size_t>(s)]; }
  std::size_t& operator[](FlightKind f) { return flight[static_cast<std::size_t>(f)]; }
  std::size_t operator[](LocalStrategy s) const { return local[static_cast<std::size_t>(s)]; }
  std::size_t operator[](FlightKind f) const { return flight[static_cast<std::size_t>(f)]; }

  friend bool operator==(const StrategyTally&, const StrategyTally&) = default;
};

/// Shared result shape of HRAHA and all baselines.
struct OptimizationResult {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  /// Best fitness after each completed iteration.
  std::vector<double> history;
  std::size_t evaluations = 0;
  StrategyTally strategy_counts;

  friend bool operator==(const OptimizationResult&, const OptimizationResult&) = default;
};

}  // namespace opt::hraha

#pragma once

// Building blocks of the hybrid red-fox / hummingbird search. The pure
// position maps take every random quantity as an argument so they can be
// checked against hand-evaluated cases; the population-level steps draw those
// quantities from an Rng and apply greedy acceptance where the algorithm
// calls for it.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opt/core/population.hpp"
#include "opt/hraha/types.hpp"

namespace opt::hraha {

// --- global phase -----------------------------------------------------------

/// α = clamp01( ω·(f̄ − f*)/(f_worst − f* + 1e-12) + (1 − ω)·(1 − t/T) ).
/// Requires an evaluated population and t < T.
double compute_alpha(const Population& pop, double omega, std::size_t t, std::size_t max_iters);

FlightKind select_flight(double alpha, const AlphaThresholds& thresholds);

/// 0/1 direction mask. Axial activates one uniformly chosen axis; Diagonal a
/// uniformly sized (2..dims-1) random subset, or every axis when dims <= 2;
/// Omnidirectional every axis.
std::vector<double> flight_mask(FlightKind kind, std::size_t dims, Rng& rng);

/// clamp(x + α·g·mask ⊙ (best − x)).
std::vector<double> flight_candidate(std::span<const double> x, std::span<const double> best, double alpha,
                                     double g, std::span<const double> mask, const SearchSpace& space);

/// Moves every member toward `best` with the chosen flight, keeping a
/// candidate only when it is no worse. Tallies one flight per member.
void global_search_step(Population& pop, const Individual& best, double alpha, FlightKind flight, Rng& rng,
                        const SearchSpace& space, Evaluator& eval, StrategyTally* tally = nullptr);

// --- local phase ------------------------------------------------------------

double draw_delta(Rng& rng);
LocalStrategy classify_delta(double delta);

/// Circular approach chain. phis holds φ_1, φ_2, … (at least max(1, dims-1)
/// angles):
///   x'_0     = nr·sin φ_1 + x_0
///   x'_k     = nr·Σ_{j<=k} sin φ_j + nr·cos φ_{k+1} + x_k     (1 <= k <= dims-2)
///   x'_{d-1} = nr·Σ_{j<=d-1} sin φ_j + x_{d-1}
/// The result is clamped.
std::vector<double> stay_and_disguise(std::span<const double> x, double nr, std::span<const double> phis,
                                      const SearchSpace& space);

/// Planar circling applied to consecutive coordinate pairs (2k, 2k+1):
///   x' = x + λ·cos φ·(r·cos φ + θ·cos φ0)
///   y' = y + λ·sin φ·(r·cos φ + θ·cos φ0)
/// Pair k uses phis[k] and phi0s[k]; a trailing odd coordinate uses the x'
/// update alone. The result is clamped.
std::vector<double> territorial_foraging(std::span<const double> x, double lambda, double r,
                                         std::span<const double> phis, std::span<const double> phi0s, double theta,
                                         const SearchSpace& space);

/// Same angles for every pair.
std::vector<double> territorial_foraging(std::span<const double> x, double lambda, double r, double phi,
                                         double phi0, double theta, const SearchSpace& space);

/// L + r ⊙ (U − L).
std::vector<double> migration_position(const SearchSpace& space, std::span<const double> r);

struct MigrationGate {
  std::size_t coefficient = 1;
  std::size_t last_migration = 0;

  bool open(std::size_t iter) const { return iter >= last_migration + coefficient; }
};

/// When the gate is open, moves the worst member to a uniformly random point
/// and re-evaluates it unconditionally. Returns the per-axis uniforms that were
/// drawn, or nullopt when the gate was closed.
std::optional<std::vector<double>> migrate_worst(Population& pop, const SearchSpace& space, Rng& rng,
                                                 MigrationGate& gate, std::size_t iter, Evaluator& eval);

// --- move-closer reproduction ----------------------------------------------

std::vector<double> habitat_center(std::span<const double> p1, std::span<const double> p2);
/// Σ_j (p1_j − C_j)² + (p2_j − C_j)², which equals ‖p1 − p2‖²/2.
double habitat_size(std::span<const double> p1, std::span<const double> p2, std::span<const double> center);
/// r1·(p1 − p2) + p2.
std::vector<double> crossover(std::span<const double> parent1, std::span<const double> parent2, double r1);
/// x + r2·(C − x).
std::vector<double> mutate(std::span<const double> child, std::span<const double> center, double r2);

/// max(1, floor(worst_fraction · size)).
std::size_t replacement_count(double worst_fraction, std::size_t size);

struct ReproductionStats {
  std::size_t replaced = 0;
  std::size_t nomads = 0;
};

/// Replaces the worst members using the habitat of the two best ("alpha
/// couple"). Each replacement is either a nomad drawn uniformly from
/// [C − √D/2, C + √D/2] ∩ [L, U] (probability nomad_probability) or an
/// offspring mutate(crossover(p1, p2, r1), C, r2) of two random non-alpha
/// members. Requires an evaluated population of at least 4.
ReproductionStats move_closer_reproduce(Population& pop, const HrahaConfig& cfg, Rng& rng,
                                        const SearchSpace& space, Evaluator& eval);

}  // namespace opt::hraha

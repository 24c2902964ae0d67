#include "opt/hraha/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace opt::hraha {

namespace {

constexpr double kSpreadEps = 1e-12;

void require_same_length(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

void require_evaluated(const Population& pop, const char* what) {
  if (pop.size() == 0 || !pop.all_evaluated()) {
    throw std::invalid_argument(std::string(what) + ": unevaluated population");
  }
}

// Greedy replacement of member i; returns true when accepted.
bool accept_if_better(Individual& member, std::vector<double> candidate, Evaluator& eval) {
  const double f = eval(candidate);
  if (f <= *member.fitness) {
    member.position = std::move(candidate);
    member.fitness = f;
    return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(FlightKind kind) {
  switch (kind) {
    case FlightKind::Omnidirectional: return "omnidirectional";
    case FlightKind::Axial: return "axial";
    case FlightKind::Diagonal: return "diagonal";
  }
  return "?";
}

std::string_view to_string(LocalStrategy s) {
  switch (s) {
    case LocalStrategy::None: return "none";
    case LocalStrategy::StayAndDisguise: return "stay_and_disguise";
    case LocalStrategy::TerritorialForaging: return "territorial_foraging";
    case LocalStrategy::Migration: return "migration";
    case LocalStrategy::MoveCloser: return "move_closer";
  }
  return "?";
}

void HrahaConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("hraha config: " + msg); };
  if (!(omega >= 0.0 && omega <= 1.0)) fail("omega must lie in [0, 1]");
  const auto& t = alpha_thresholds;
  if (!(0.0 < t.a1 && t.a1 < t.a2 && t.a2 < t.a3 && t.a3 <= 1.0)) {
    fail("alpha thresholds must satisfy 0 < a1 < a2 < a3 <= 1");
  }
  if (!(scaling_a >= 0.0 && scaling_a <= 0.2)) fail("scaling_a must lie in [0, 0.2]");
  if (!(worst_fraction > 0.0 && worst_fraction <= 0.5)) fail("worst_fraction must lie in (0, 0.5]");
  if (migration_coefficient && *migration_coefficient == 0) fail("migration_coefficient must be positive");
  if (!(nomad_probability >= 0.0 && nomad_probability <= 1.0)) fail("nomad_probability must lie in [0, 1]");
  if (!(territorial_lambda >= 0.0) || !std::isfinite(territorial_lambda)) {
    fail("territorial_lambda must be finite and non-negative");
  }
  if (max_iters == 0) fail("max_iters must be positive");
  if (target_fitness && std::isnan(*target_fitness)) fail("target_fitness is NaN");
}

double compute_alpha(const Population& pop, double omega, std::size_t t, std::size_t max_iters) {
  require_evaluated(pop, "compute_alpha");
  if (max_iters == 0 || t >= max_iters) throw std::invalid_argument("compute_alpha: requires t < T");
  double best = *pop[0].fitness;
  double worst = best;
  double sum = 0.0;
  for (const auto& m : pop.members) {
    best = std::min(best, *m.fitness);
    worst = std::max(worst, *m.fitness);
    sum += *m.fitness;
  }
  const double mean = sum / static_cast<double>(pop.size());
  const double spread = (mean - best) / (worst - best + kSpreadEps);
  const double schedule = 1.0 - static_cast<double>(t) / static_cast<double>(max_iters);
  return std::clamp(omega * spread + (1.0 - omega) * schedule, 0.0, 1.0);
}

FlightKind select_flight(double alpha, const AlphaThresholds& thresholds) {
  if (alpha <= thresholds.a1) return FlightKind::Omnidirectional;
  if (alpha <= thresholds.a2) return FlightKind::Axial;
  return FlightKind::Diagonal;
}

std::vector<double> flight_mask(FlightKind kind, std::size_t dims, Rng& rng) {
  std::vector<double> mask(dims, 0.0);
  switch (kind) {
    case FlightKind::Omnidirectional:
      std::fill(mask.begin(), mask.end(), 1.0);
      break;
    case FlightKind::Axial:
      mask[rng.uniform_index(dims)] = 1.0;
      break;
    case FlightKind::Diagonal: {
      if (dims <= 2) {
        std::fill(mask.begin(), mask.end(), 1.0);
        break;
      }
      const std::size_t count = 2 + rng.uniform_index(dims - 2);  // 2..dims-1
      // Partial Fisher-Yates over axis indices.
      std::vector<std::size_t> axes(dims);
      std::iota(axes.begin(), axes.end(), std::size_t{0});
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.uniform_index(dims - i);
        std::swap(axes[i], axes[j]);
        mask[axes[i]] = 1.0;
      }
      break;
    }
  }
  return mask;
}

std::vector<double> flight_candidate(std::span<const double> x, std::span<const double> best, double alpha,
                                     double g, std::span<const double> mask, const SearchSpace& space) {
  require_same_length(x, best, "flight_candidate");
  require_same_length(x, mask, "flight_candidate");
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] + alpha * g * mask[j] * (best[j] - x[j]);
  clamp_inplace(out, space);
  return out;
}

void global_search_step(Population& pop, const Individual& best, double alpha, FlightKind flight, Rng& rng,
                        const SearchSpace& space, Evaluator& eval, StrategyTally* tally) {
  require_evaluated(pop, "global_search_step");
  for (auto& member : pop.members) {
    const auto mask = flight_mask(flight, space.dims(), rng);
    const double g = rng.normal();
    if (tally) ++(*tally)[flight];
    accept_if_better(member, flight_candidate(member.position, best.position, alpha, g, mask, space), eval);
  }
  pop.update_best();
}

double draw_delta(Rng& rng) { return rng.uniform(); }

LocalStrategy classify_delta(double delta) {
  if (delta <= 0.5) return LocalStrategy::None;
  if (delta <= 0.75) return LocalStrategy::StayAndDisguise;
  if (delta <= 0.85) return LocalStrategy::TerritorialForaging;
  if (delta <= 0.95) return LocalStrategy::Migration;
  return LocalStrategy::MoveCloser;
}

std::vector<double> stay_and_disguise(std::span<const double> x, double nr, std::span<const double> phis,
                                      const SearchSpace& space) {
  const std::size_t d = x.size();
  if (d < 1) throw std::invalid_argument("stay_and_disguise: dims < 1");
  const std::size_t needed = std::max<std::size_t>(1, d - 1);
  if (phis.size() < needed) {
    throw std::invalid_argument("stay_and_disguise: need " + std::to_string(needed) + " angles, got " +
                                std::to_string(phis.size()));
  }
  std::vector<double> out(x.begin(), x.end());
  out[0] += nr * std::sin(phis[0]);
  // sin_sum holds Σ_{j<=k} sin φ_j in 1-based angle numbering.
  double sin_sum = std::sin(phis[0]);
  for (std::size_t k = 1; k + 1 < d; ++k) {
    out[k] += nr * sin_sum + nr * std::cos(phis[k]);
    sin_sum += std::sin(phis[k]);
  }
  if (d >= 2) out[d - 1] += nr * sin_sum;
  clamp_inplace(out, space);
  return out;
}

std::vector<double> territorial_foraging(std::span<const double> x, double lambda, double r,
                                         std::span<const double> phis, std::span<const double> phi0s, double theta,
                                         const SearchSpace& space) {
  const std::size_t pairs = (x.size() + 1) / 2;
  if (phis.size() < pairs || phi0s.size() < pairs) {
    throw std::invalid_argument("territorial_foraging: need one angle pair per coordinate pair");
  }
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t k = 0; k < pairs; ++k) {
    const double phi = phis[k];
    const double radial = r * std::cos(phi) + theta * std::cos(phi0s[k]);
    out[2 * k] += lambda * std::cos(phi) * radial;
    if (2 * k + 1 < out.size()) out[2 * k + 1] += lambda * std::sin(phi) * radial;
  }
  clamp_inplace(out, space);
  return out;
}

std::vector<double> territorial_foraging(std::span<const double> x, double lambda, double r, double phi,
                                         double phi0, double theta, const SearchSpace& space) {
  const std::size_t pairs = (x.size() + 1) / 2;
  const std::vector<double> phis(pairs, phi);
  const std::vector<double> phi0s(pairs, phi0);
  return territorial_foraging(x, lambda, r, phis, phi0s, theta, space);
}

std::vector<double> migration_position(const SearchSpace& space, std::span<const double> r) {
  if (r.size() != space.dims()) throw std::invalid_argument("migration_position: length mismatch");
  std::vector<double> out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) out[j] = space.lower(j) + r[j] * space.width(j);
  return out;
}

std::optional<std::vector<double>> migrate_worst(Population& pop, const SearchSpace& space, Rng& rng,
                                                 MigrationGate& gate, std::size_t iter, Evaluator& eval) {
  require_evaluated(pop, "migrate_worst");
  if (!gate.open(iter)) return std::nullopt;
  std::vector<double> r(space.dims());
  for (auto& v : r) v = rng.uniform();
  const std::size_t w = pop.worst();
  pop[w].position = migration_position(space, r);
  pop[w].fitness = eval(pop[w].position);
  gate.last_migration = iter;
  pop.update_best();
  return r;
}

std::vector<double> habitat_center(std::span<const double> p1, std::span<const double> p2) {
  require_same_length(p1, p2, "habitat_center");
  std::vector<double> c(p1.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = 0.5 * (p1[j] + p2[j]);
  return c;
}

double habitat_size(std::span<const double> p1, std::span<const double> p2, std::span<const double> center) {
  require_same_length(p1, p2, "habitat_size");
  require_same_length(p1, center, "habitat_size");
  double d = 0.0;
  for (std::size_t j = 0; j < p1.size(); ++j) {
    const double a = p1[j] - center[j];
    const double b = p2[j] - center[j];
    d += a * a + b * b;
  }
  return d;
}

std::vector<double> crossover(std::span<const double> parent1, std::span<const double> parent2, double r1) {
  require_same_length(parent1, parent2, "crossover");
  std::vector<double> child(parent1.size());
  for (std::size_t j = 0; j < child.size(); ++j) child[j] = r1 * (parent1[j] - parent2[j]) + parent2[j];
  return child;
}

std::vector<double> mutate(std::span<const double> child, std::span<const double> center, double r2) {
  require_same_length(child, center, "mutate");
  std::vector<double> out(child.begin(), child.end());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += r2 * (center[j] - out[j]);
  return out;
}

std::size_t replacement_count(double worst_fraction, std::size_t size) {
  const auto k = static_cast<std::size_t>(std::floor(worst_fraction * static_cast<double>(size)));
  return std::max<std::size_t>(1, k);
}

ReproductionStats move_closer_reproduce(Population& pop, const HrahaConfig& cfg, Rng& rng,
                                        const SearchSpace& space, Evaluator& eval) {
  if (pop.size() < 4) {
    throw std::invalid_argument("move_closer_reproduce: population size must be at least 4");
  }
  require_evaluated(pop, "move_closer_reproduce");

  const auto ranked = select_best_indices(pop, pop.size());
  const std::size_t alpha1 = ranked[0];
  const std::size_t alpha2 = ranked[1];
  const auto center = habitat_center(pop[alpha1].position, pop[alpha2].position);
  const double size = habitat_size(pop[alpha1].position, pop[alpha2].position, center);
  const double side = std::sqrt(size);

  // Never more than the non-alpha members.
  const std::size_t k = std::min(replacement_count(cfg.worst_fraction, pop.size()), pop.size() - 2);

  // Parents are drawn from the non-alpha members as they were before any
  // replacement in this call.
  std::vector<std::vector<double>> parents;
  parents.reserve(pop.size() - 2);
  for (std::size_t idx = 2; idx < ranked.size(); ++idx) parents.push_back(pop[ranked[idx]].position);

  ReproductionStats stats;
  for (std::size_t n = 0; n < k; ++n) {
    const std::size_t target = ranked[ranked.size() - 1 - n];
    std::vector<double> fresh(space.dims());
    if (rng.uniform() < cfg.nomad_probability) {
      for (std::size_t j = 0; j < space.dims(); ++j) {
        const double lo = std::max(space.lower(j), center[j] - 0.5 * side);
        const double hi = std::min(space.upper(j), center[j] + 0.5 * side);
        fresh[j] = lo + rng.uniform() * (hi - lo);
      }
      ++stats.nomads;
    } else {
      const std::size_t i1 = rng.uniform_index(parents.size());
      std::size_t i2 = rng.uniform_index(parents.size() - 1);
      if (i2 >= i1) ++i2;
      const double r1 = rng.uniform();
      const double r2 = rng.uniform();
      fresh = mutate(crossover(parents[i1], parents[i2], r1), center, r2);
    }
    clamp_inplace(fresh, space);
    pop[target].fitness = eval(fresh);
    pop[target].position = std::move(fresh);
    ++stats.replaced;
  }
  pop.update_best();
  return stats;
}

}  // namespace opt::hraha

#pragma once

#include <span>
#include <string>
#include <vector>

namespace opt::metrics {

using Tokens = std::vector<std::string>;

/// Smoothing added to numerator and denominator of an n-gram precision that
/// would otherwise be zero.
inline constexpr double kBleuSmoothing = 1e-9;

/// Sentence BLEU with n = 1..4, clipped counts against the maximum count over
/// references, uniform weights and a brevity penalty against the reference
/// length closest to the candidate (shorter wins ties). An empty candidate
/// scores 0. Throws std::invalid_argument when references is empty or every
/// reference is empty.
double bleu4(std::span<const std::string> candidate, std::span<const Tokens> references);
double bleu4(std::span<const std::string> candidate, std::span<const std::string> reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

/// LCS-based F1. Empty candidate scores 0; empty reference throws.
double rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);

/// Throws std::invalid_argument on length mismatch or empty input.
double accuracy(std::span<const std::string> pred, std::span<const std::string> gold);

/// Unweighted mean of per-class F1 over the union of labels in pred and gold.
/// A class with zero precision and recall contributes 0.
double macro_f1(std::span<const std::string> pred, std::span<const std::string> gold);

struct MetricReport {
  double bleu = 0.0;
  double rouge_l = 0.0;
  double accuracy = 0.0;
  double f_score = 0.0;
};

}  // namespace opt::metrics

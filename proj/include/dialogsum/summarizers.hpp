// Copyright 2026 The dialogsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIALOGSUM_SUMMARIZERS_HPP_
#define DIALOGSUM_SUMMARIZERS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dialogsum/corpus.hpp"
#include "dialogsum/nrp.hpp"

namespace dialogsum {

struct ExtractiveSummary {
  std::string dialog_id;
  std::vector<int> selected;  // strictly increasing global indices
  std::map<int, double> per_sentence_scores;

  bool operator==(const ExtractiveSummary&) const = default;
};

// Sentences taken per speaker by every summarizer.
inline constexpr int kPerSpeakerBudget = 2;

// Global indices of each speaker's sentences, in dialog order.
std::vector<int> speaker_sentences(const Dialog& dialog, Speaker speaker);

/// Top `per_speaker` sentences of each speaker by score (scores within a
/// relative 1e-12 tie, and ties go to the earlier sentence), returned in dialog order with the scores attached. Throws
/// DataError when a speaker has no sentence or the score count differs from
/// the sentence count.
ExtractiveSummary select_top_per_speaker(const Dialog& dialog, std::span<const double> scores,
                                         int per_speaker = kPerSpeakerBudget);

ExtractiveSummary random_summary(const Dialog& dialog, std::uint64_t seed);
ExtractiveSummary lead_summary(const Dialog& dialog);

enum class Representation { Tf, TfIdf };

struct LexRankConfig {
  Representation representation = Representation::Tf;
  double similarity_threshold = 0.1;
  double damping = 0.15;  // uniform-jump weight
  double convergence_epsilon = 1e-8;
  int max_iterations = 1000;

  void validate() const;
};

// Thresholded cosine graph over bag-of-words vectors, row-normalized.
// All-zero rows become uniform.
std::vector<std::vector<double>> lexrank_matrix(const Dialog& dialog, const LexRankConfig& config);

/// Stationary distribution of (damping/N)·J + (1−damping)·M by power
/// iteration from the uniform vector, stopping when the L1 change drops
/// below epsilon. Throws ConvergenceError carrying the last residual.
std::vector<double> lexrank_power_method(const std::vector<std::vector<double>>& stochastic,
                                         const LexRankConfig& config);

// Centrality per global index; sums to 1.
std::vector<double> lexrank_scores(const Dialog& dialog, const LexRankConfig& config = {});
ExtractiveSummary lexrank_summary(const Dialog& dialog, const LexRankConfig& config = {});

/// Σ√(p·q) over aligned distributions. Throws DataError unless both are
/// non-negative, equally sized and sum to 1 within 1e-9.
double bhattacharyya(std::span<const double> p, std::span<const double> q);

using TermCounts = std::map<std::string, int>;
using TermDistribution = std::map<std::string, double>;

TermDistribution term_distribution(const TermCounts& counts);
double bhattacharyya(const TermDistribution& p, const TermDistribution& q);

// Lowercase alphanumeric word counts of one sentence (no stemming).
TermCounts sentence_terms(const Sentence& sentence);

// Indices of the k sentences most Bhattacharyya-similar to `global_index`
// (ties to earlier), in dialog order. Fewer when the dialog is short.
std::vector<int> expansion_neighbors(const Dialog& dialog, int global_index, int k = 2);

/// Token multiset of the sentence together with its k nearest neighbours.
TermCounts expand_sentence(const Dialog& dialog, int global_index, int k = 2);

struct CesWeights {
  double coverage = 1.0;
  double centrality = 1.0;
  double position = 1.0;
};

struct CesConfig {
  int samples_per_iteration = 1000;
  double elite_fraction = 0.05;
  double smoothing = 0.7;
  int iterations = 30;
  int expansion_k = 2;
  CesWeights objective_weights;
  int customer_budget = kPerSpeakerBudget;
  int agent_budget = kPerSpeakerBudget;
  std::uint64_t seed = 0;
  LexRankConfig lexrank;

  void validate() const;
};

struct CesTerms {
  double coverage = 0.0;    // Bhattacharyya(expanded candidate, dialog)
  double centrality = 0.0;  // mean LexRank of the candidate / dialog max
  double position = 0.0;    // mean 1/(1 + utterance index)
};

/// Objective factors of a candidate. With `enforce_budget` a candidate that
/// does not take exactly min(budget, available) sentences per speaker throws
/// DataError.
CesTerms ces_objective_terms(const Dialog& dialog, std::span<const int> candidate,
                             std::span<const double> lexrank, const CesConfig& config,
                             bool enforce_budget = true);

// coverage^w1 · centrality^w2 · position^w3
double ces_objective(const Dialog& dialog, std::span<const int> candidate,
                     std::span<const double> lexrank, const CesConfig& config,
                     bool enforce_budget = true);

struct CesResult {
  std::vector<int> best;  // sorted
  double best_objective = 0.0;
  std::vector<double> trace;       // best objective seen up to each iteration
  std::vector<double> elite_best;  // best objective among each iteration's samples
  std::vector<double> inclusion;   // final inclusion probabilities per sentence
};

/// Cross-entropy search over feasible subsets: per-speaker weighted sampling
/// without replacement, top-ρ elite, smoothed frequency update. Deterministic
/// per seed.
CesResult ces_optimize(const Dialog& dialog, std::span<const double> lexrank,
                       const CesConfig& config);
ExtractiveSummary ces_summary(const Dialog& dialog, const CesConfig& config = {});

/// Top two sentences per speaker by averaged influence score.
ExtractiveSummary nrp_summary(const Dialog& dialog, const ResponseScorer& fw_scorer,
                              const ResponseScorer& bw_scorer,
                              const InfluenceOptions& options = {});

}  // namespace dialogsum

#endif  // DIALOGSUM_SUMMARIZERS_HPP_

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

#ifndef DIALOGSUM_ANALYSIS_HPP_
#define DIALOGSUM_ANALYSIS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dialogsum/corpus.hpp"
#include "dialogsum/rng.hpp"
#include "dialogsum/rouge.hpp"

namespace dialogsum {

enum class StdKind { Population, Sample };

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// Throws SizeError for no values (or fewer than two with StdKind::Sample).
MeanStd mean_std(std::span<const double> values, StdKind kind = StdKind::Population);

struct SpeakerSplit {
  MeanStd overall;
  MeanStd customer;
  MeanStd agent;
};

struct LengthStats {
  SpeakerSplit utterances;
  SpeakerSplit sentences;
  SpeakerSplit tokens;  // stats tokens
  std::size_t n = 0;
};

LengthStats dialog_length_stats(std::span<const Dialog> dialogs, StdKind kind = StdKind::Population);

// Token counts of one summary, split by speaker.
struct SummaryTokens {
  int customer = 0;
  int agent = 0;
  int total() const { return customer + agent; }
};

SummaryTokens abstractive_tokens(const AbstractiveSummary& summary);
SummaryTokens extractive_tokens(const Dialog& dialog, std::span<const int> selected);

struct SummaryLengthStats {
  SpeakerSplit abstractive;
  SpeakerSplit extractive;
  std::size_t n_abstractive = 0;
  std::size_t n_extractive = 0;
};

// Empty summaries are left out of their side.
SummaryLengthStats summary_length_stats(const Corpus& corpus, StdKind kind = StdKind::Population);

/// 1 − summary_tokens / dialog_tokens. Throws DataError for a dialog
/// without tokens.
double compression_rate(double dialog_tokens, double summary_tokens);
double compression_rate(const Dialog& dialog, std::span<const int> selected);
double compression_rate(const Dialog& dialog, const AbstractiveSummary& summary);

struct CompressionRates {
  double abstractive = 0.0;
  double extractive = 0.0;
};

// Means of the per-summary rates.
CompressionRates corpus_compression(const Corpus& corpus);

struct SelectionRates {
  double customer = 0.0;
  double agent = 0.0;
  std::size_t n = 0;
};

// Index of the speaker's first utterance, or -1.
int first_utterance_of(const Dialog& dialog, Speaker speaker);

/// Share of non-empty extractive summaries holding at least one sentence
/// of the customer's (agent's) first utterance.
SelectionRates first_utterance_selection_rate(const Corpus& corpus);

/// ROUGE-L recall (unstemmed, summary-level) of `text` as the reference
/// against each utterance as the candidate.
double utterance_recall(std::string_view text, const Utterance& utterance);

/// Utterance index with the highest utterance_recall among the speaker's
/// utterances; ties go to the earlier one. Throws DataError when the
/// speaker has no utterance.
int attribute_abstractive_part(std::string_view part_text, const Dialog& dialog, Speaker speaker);

// Share of customer (agent) parts attributed to that speaker's first utterance.
SelectionRates attribution_rates(const Corpus& corpus);

enum class SpeakerCoverage { Both, CustomerOnly, AgentOnly };

std::string_view to_string(SpeakerCoverage coverage);

/// Classifies by the speakers of the two utterances with the highest
/// utterance_recall of the summary. Throws SizeError for fewer than two
/// utterances.
SpeakerCoverage speaker_representation(std::string_view summary_text, const Dialog& dialog);
SpeakerCoverage coverage_of(Speaker a, Speaker b);

// Two distinct utterances drawn uniformly.
SpeakerCoverage random_pair_coverage(const Dialog& dialog, Rng& rng);
// Exact probability that a random pair covers both speakers.
double both_speakers_probability(const Dialog& dialog);

struct CoverageCounts {
  std::size_t both = 0;
  std::size_t customer_only = 0;
  std::size_t agent_only = 0;

  std::size_t total() const { return both + customer_only + agent_only; }
  double both_rate() const;
  void add(SpeakerCoverage c);
};

CoverageCounts random_pair_baseline(std::span<const Dialog> dialogs, std::uint64_t seed);

struct QaSheet {
  std::string dialog_id;
  std::vector<double> weights;              // w_j in (0, 1]
  std::vector<std::vector<int>> indicators;  // 3 rows of K_d values in {0, 1}
};

// Weight of a question answered by `answering` of the three reference summaries.
double qa_weight(int answering);

/// S_d = 100 / (3 Σ w_j) · Σ_i Σ_j w_j I_ij. Throws DataError for a
/// malformed sheet.
double qa_score(const QaSheet& sheet);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p_two_sided = 1.0;
};

/// Regularized incomplete beta I_x(a, b) by continued fraction.
double incomplete_beta(double a, double b, double x);
double student_t_two_sided(double t, double df);

/// Welch's unequal-variance t-test. Zero variance on both sides gives t = 0,
/// p = 1 for equal means and |t| = inf, p = 0 otherwise. Throws SizeError
/// for a sample smaller than two.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

struct SystemEvaluation {
  std::vector<std::pair<std::string, RougeReport>> per_dialog;
  RougeReport mean;
  std::vector<std::string> skipped;  // dialogs without candidate or references
};

/// Scores candidate summaries (sentence lists keyed by dialog id) against
/// one side of the corpus references.
SystemEvaluation evaluate_system(const Corpus& corpus,
                                 const std::map<std::string, std::vector<std::string>>& candidates,
                                 ReferenceSide side, const RougeConfig& config = {});

}  // namespace dialogsum

#endif  // DIALOGSUM_ANALYSIS_HPP_

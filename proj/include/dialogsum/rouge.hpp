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

#ifndef DIALOGSUM_ROUGE_HPP_
#define DIALOGSUM_ROUGE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dialogsum/corpus.hpp"

namespace dialogsum {

using Tokens = std::vector<std::string>;
using TokenSentences = std::vector<Tokens>;

// Per-dialog score over several references: mean of the per-reference
// precision, recall and F values.
enum class MultiRef { Average };

/// Mirrors `ROUGE-1.5.5.pl -a -c 95 -m -n 2 -2 4 -u -p 0.5`.
struct RougeConfig {
  int ngram_max = 2;
  int skip_gap = 4;
  bool include_unigrams_in_su = true;
  double f_alpha = 0.5;
  bool stem = true;
  std::optional<int> length_limit;  // candidate tokens; nullopt = unlimited
  MultiRef multi_ref = MultiRef::Average;

  // Throws DataError on out-of-range fields.
  void validate() const;
};

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;

  bool operator==(const RougeScore&) const = default;
};

/// Score from raw counts: P = hits/candidate, R = hits/reference and
/// F = P·R / (α·P + (1−α)·R), which is hits / (α·reference + (1−α)·candidate).
/// Any zero count gives an all-zero score.
RougeScore score_from_counts(std::size_t hits, std::size_t candidate_units,
                             std::size_t reference_units, double f_alpha);

struct RougeReport {
  RougeScore r1;
  RougeScore r2;
  RougeScore rsu4;
  RougeScore rl;

  bool operator==(const RougeReport&) const = default;
};

// Clipped n-gram overlap. Tokens must already be ROUGE-tokenized (and
// stemmed when wanted).
RougeScore rouge_n(const Tokens& candidate, std::span<const Tokens> references, int n,
                   const RougeConfig& config = {});
RougeScore rouge_n(const Tokens& candidate, const Tokens& reference, int n,
                   const RougeConfig& config = {});

// Skip-bigrams with j − i ≤ skip_gap + 1, plus unigrams when enabled.
RougeScore rouge_su(const Tokens& candidate, std::span<const Tokens> references,
                    const RougeConfig& config = {});
RougeScore rouge_su(const Tokens& candidate, const Tokens& reference,
                    const RougeConfig& config = {});

/// Summary-level ROUGE-L. For each reference sentence the union of its LCS
/// positions against every candidate sentence is taken; hits are clipped by
/// the token counts on both sides.
RougeScore rouge_l(const TokenSentences& candidate, std::span<const TokenSentences> references,
                   const RougeConfig& config = {});
RougeScore rouge_l(const TokenSentences& candidate, const TokenSentences& reference,
                   const RougeConfig& config = {});

// Longest common subsequence length of two token sequences.
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

/// Keeps the first `limit` tokens across sentences; the last kept sentence
/// may be cut. Emptied sentences are dropped. Throws DataError if limit < 1.
TokenSentences apply_length_limit(const TokenSentences& summary, int limit);

/// ROUGE-tokenizes each sentence, applies the length limit when
/// `truncate` is set and stems tokens longer than three characters when
/// config.stem is set.
TokenSentences prepare_rouge_tokens(std::span<const std::string> sentences,
                                    const RougeConfig& config, bool truncate);

Tokens flatten(const TokenSentences& sentences);

/// All four metrics for one candidate against one or more references, each
/// given as a list of sentence texts. Only the candidate is length-limited.
/// Throws SizeError when there is no reference.
RougeReport evaluate_summary(std::span<const std::string> candidate_sentences,
                             std::span<const std::vector<std::string>> references,
                             const RougeConfig& config = {});

enum class ReferenceSide { Extractive, Abstractive };

// Selected sentence texts in dialog order.
std::vector<std::string> extractive_sentences(const Dialog& dialog, std::span<const int> selected);
// Customer part then agent part, each segmented into sentences.
std::vector<std::string> abstractive_sentences(const AbstractiveSummary& summary);

/// One sentence list per annotator for the chosen side. Empty summaries are
/// left out.
std::vector<std::vector<std::string>> reference_sentences(const AnnotatedDialog& entry,
                                                          ReferenceSide side);

RougeReport mean_report(std::span<const RougeReport> reports);

/// Percentile bootstrap interval of the mean. Throws SizeError for fewer
/// than two scores and DataError for a confidence outside (0, 1).
std::pair<double, double> bootstrap_ci(std::span<const double> scores, double confidence = 0.95,
                                       int resamples = 1000, std::uint64_t seed = 0);

}  // namespace dialogsum

#endif  // DIALOGSUM_ROUGE_HPP_

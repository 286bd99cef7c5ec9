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

#ifndef DIALOGSUM_QUALITY_HPP_
#define DIALOGSUM_QUALITY_HPP_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dialogsum/corpus.hpp"

namespace dialogsum {

enum class DiscardReason { OneSentence, OneSideOnly, StartsWithAgent, RepeatedAbstractive };

std::string_view to_string(DiscardReason reason);

struct Discarded {
  std::string dialog_id;
  std::string annotator_id;
  DiscardReason reason = DiscardReason::OneSentence;

  bool operator==(const Discarded&) const = default;
};

struct AnnotatorStats {
  std::size_t n_annotations = 0;
  std::size_t n_discarded = 0;
  // Mean adapted Jaccard against the other annotators of the same dialogs;
  // 0 when there was nothing to compare.
  double mean_adapted_jaccard = 0.0;
  std::size_t n_compared = 0;

  bool operator==(const AnnotatorStats&) const = default;
};

struct QcReport {
  std::size_t kept = 0;
  std::vector<Discarded> discarded;
  std::map<std::string, AnnotatorStats> per_annotator;

  std::size_t total() const { return kept + discarded.size(); }
};

/// Reason an extractive selection fails the heuristics, checked in order:
/// fewer than two sentences, a single speaker, an Agent sentence first.
std::optional<DiscardReason> extractive_defect(const Dialog& dialog, std::span<const int> selected);

QcReport filter_extractive(std::span<const AnnotatedDialog> entries);

/// |a ∩ b| / |a|. Throws DataError for an empty `a`.
double adapted_jaccard(const std::set<int>& a, const std::set<int>& b);
double jaccard(const std::set<int>& a, const std::set<int>& b);

// Adapted Jaccard of one annotator against the union of the others' selections.
double adapted_jaccard_union(const AnnotationSet& set, std::string_view annotator_id);
// One value per other annotator, in annotation order.
std::vector<double> adapted_jaccard_per_other(const AnnotationSet& set,
                                              std::string_view annotator_id);

struct RepeatedPair {
  std::string annotator_id;
  std::string dialog_a;
  std::string dialog_b;
  double similarity = 0.0;  // ROUGE-L F over unstemmed ROUGE tokens

  bool operator==(const RepeatedPair&) const = default;
};

/// Pairs of one annotator's abstractive summaries on different dialogs with
/// similarity >= threshold. Exact duplicates are always reported.
std::vector<RepeatedPair> detect_repeated_abstractive(std::span<const AnnotatedDialog> entries,
                                                      double similarity_threshold = 0.9);

// ROUGE-L F between two texts as used by the duplicate detector.
double abstractive_similarity(std::string_view a, std::string_view b);

struct QcOptions {
  double similarity_threshold = 0.9;
  bool check_abstractive = true;
};

/// Extractive heuristics, then (for annotations that passed) membership in
/// a repeated abstractive pair. One reason per discarded annotation.
QcReport quality_control(std::span<const AnnotatedDialog> entries, const QcOptions& options = {});

// Annotations that passed, per dialog; dialogs left without any are dropped.
Corpus apply_qc(const Corpus& corpus, const QcReport& report);

using Ratings = std::map<std::string, std::map<std::string, int>>;  // item -> annotator -> rating

struct KappaReport {
  std::map<std::pair<std::string, std::string>, double> pairs;
  double mean = 0.0;
  std::vector<std::string> warnings;
};

/// Unweighted Cohen's kappa over co-rated items. Two constant, identical
/// raters get 1. Throws SizeError unless some pair shares two items.
double cohen_kappa(std::span<const int> a, std::span<const int> b);
KappaReport pairwise_kappa(const Ratings& ratings);

}  // namespace dialogsum

#endif  // DIALOGSUM_QUALITY_HPP_

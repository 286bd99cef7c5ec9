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

#ifndef DIALOGSUM_NRP_HPP_
#define DIALOGSUM_NRP_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialogsum/corpus.hpp"

namespace dialogsum {

// Forward predicts the next sentence from what precedes it; Backward
// predicts the previous sentence from what follows it.
enum class Direction { Forward, Backward };

// "fw" / "bw", as on the wire and in triple files.
std::string_view to_string(Direction direction);
Direction parse_direction(std::string_view name);

struct NrpTriple {
  std::string group_id;
  Direction direction = Direction::Forward;
  std::vector<std::string> context;
  std::string candidate;
  int label = 0;

  bool operator==(const NrpTriple&) const = default;
};

struct ScoreRequest {
  std::vector<std::string> context;
  std::string candidate;

  bool operator==(const ScoreRequest&) const = default;
};

/// Probability that `candidate` is the true response to `context`.
///
/// Implementations are deterministic for identical inputs. score_batch must
/// preserve order; the default loops over score().
class ResponseScorer {
 public:
  virtual ~ResponseScorer() = default;

  virtual Direction direction() const = 0;
  virtual double score(const std::vector<std::string>& context,
                       const std::string& candidate) const = 0;
  virtual std::vector<double> score_batch(std::span<const ScoreRequest> requests) const;
  // Whether one instance may be used from several threads at once.
  virtual bool shareable() const { return true; }
};

using ProbabilityFn =
    std::function<double(const std::vector<std::string>& context, const std::string& candidate)>;

// Adapts a plain function. Shareable only if the function is thread-safe.
class FunctionScorer : public ResponseScorer {
 public:
  FunctionScorer(Direction direction, ProbabilityFn fn)
      : direction_(direction), fn_(std::move(fn)) {}

  Direction direction() const override { return direction_; }
  double score(const std::vector<std::string>& context,
               const std::string& candidate) const override {
    return fn_(context, candidate);
  }

 private:
  Direction direction_;
  ProbabilityFn fn_;
};

/// Deterministic mock probability: share of the candidate's word types that
/// occur anywhere in the context (0 for a candidate without words).
double overlap_probability(const std::vector<std::string>& context, const std::string& candidate);

enum class ContextUnit { Sentence, Utterance };

struct TripleOptions {
  int k_negatives = 5;
  Direction direction = Direction::Forward;
  std::uint64_t seed = 0;
  ContextUnit unit = ContextUnit::Sentence;
};

/// One group per split point of every dialog: a positive (the true next or
/// previous unit) plus k negatives drawn uniformly from the units of other
/// dialogs, never equal in text to the positive. The positive sits at a
/// seeded random position within its group.
///
/// Throws SizeError for fewer than two dialogs or a dialog with fewer than
/// two units, and DataError for a negative k.
std::vector<NrpTriple> build_nrp_triples(std::span<const Dialog> dialogs,
                                         const TripleOptions& options = {});

void write_triples(std::ostream& out, std::span<const NrpTriple> triples);
std::vector<NrpTriple> read_triples(std::istream& in);

// Groups in order of first appearance.
std::vector<std::vector<NrpTriple>> group_triples(std::span<const NrpTriple> triples);

inline constexpr std::size_t kLexicalFeatureCount = 4;
using LexicalFeatures = std::array<double, kLexicalFeatureCount>;

/// Features of (context, candidate), each in [0, 1]:
///   0  share of candidate word types found in the adjacent context sentence
///      (last for Forward, first for Backward)
///   1  cosine between candidate and whole-context term counts
///   2  min/max length ratio of candidate and adjacent sentence
///   3  speaker alternation between adjacent sentence and candidate, read
///      from the mention masks (0.5 when unknown)
LexicalFeatures lexical_features(const std::vector<std::string>& context,
                                 const std::string& candidate, Direction direction);

struct LogisticOptions {
  double learning_rate = 0.5;
  int epochs = 400;
  double l2 = 0.0;
};

struct LogisticModel {
  // Feature weights followed by the bias.
  std::array<double, kLexicalFeatureCount + 1> weights{};
  std::vector<double> loss_trace;

  double predict(const LexicalFeatures& x) const;
};

/// Full-batch gradient descent on mean log loss. Initial weights are small
/// seeded draws. Throws DataError when only one label is present.
LogisticModel train_logistic(std::span<const LexicalFeatures> features,
                             std::span<const int> labels, std::uint64_t seed,
                             const LogisticOptions& options = {});

/// Built-in scorer: logistic regression over lexical_features.
class LexicalScorer : public ResponseScorer {
 public:
  LexicalScorer(Direction direction, LogisticModel model)
      : direction_(direction), model_(std::move(model)) {}

  Direction direction() const override { return direction_; }
  double score(const std::vector<std::string>& context,
               const std::string& candidate) const override;
  const LogisticModel& model() const { return model_; }

  std::string to_json() const;
  static LexicalScorer from_json(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static LexicalScorer load(const std::filesystem::path& path);

 private:
  Direction direction_;
  LogisticModel model_;
};

/// Trains on the triples of the given direction.
LexicalScorer train_builtin_scorer(std::span<const NrpTriple> triples, Direction direction,
                                   std::uint64_t seed, const LogisticOptions& options = {});

struct InfluenceScore {
  int global_index = 0;
  double drop_fw = 0.0;
  double drop_bw = 0.0;
  double averaged = 0.0;

  bool operator==(const InfluenceScore&) const = default;
};

struct InfluenceOptions {
  // Average drops over every split point instead of the single full-context
  // probe per direction.
  bool multi_split = false;
};

/// Leave-one-out probability drops.
///
/// Forward: context s_1..s_{N-1}, response s_N, drop_fw(i) = p - p(without
/// s_i) for i < N. Backward: context s_2..s_N, target s_1, drop_bw(i) for
/// i > 1. Sentences outside a pass's context get 0 for that pass.
/// Throws SizeError when N < 3; scorer failures surface as ScorerError.
std::vector<InfluenceScore> sentence_influence_scores(const Dialog& dialog,
                                                      const ResponseScorer& fw_scorer,
                                                      const ResponseScorer& bw_scorer,
                                                      const InfluenceOptions& options = {});

/// Recall@k over groups of equal size with exactly one positive each. Ties
/// keep input order. Throws DataError on malformed groups.
std::map<int, double> evaluate_recall_at_k(const ResponseScorer& scorer,
                                           std::span<const std::vector<NrpTriple>> groups,
                                           std::span<const int> ks = std::array{1, 2, 5});

}  // namespace dialogsum

#endif  // DIALOGSUM_NRP_HPP_

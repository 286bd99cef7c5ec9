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

#ifndef DIALOGSUM_CORPUS_HPP_
#define DIALOGSUM_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialogsum/textproc.hpp"

namespace dialogsum {

enum class Speaker { Customer, Agent };

std::string_view to_string(Speaker speaker);
Speaker parse_speaker(std::string_view name);

struct TweetRecord {
  std::string tweet_id;
  std::string author_id;
  bool inbound = false;  // consumer -> company
  std::string text;
  std::vector<std::string> response_tweet_ids;
  std::optional<std::string> in_response_to_tweet_id;
  std::int64_t created_at = 0;  // seconds since the Unix epoch, UTC
};

struct Sentence {
  int global_index = 0;
  int utterance_index = 0;
  Speaker speaker = Speaker::Customer;
  std::string text;
  std::vector<std::string> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Utterance {
  int index = 0;
  Speaker speaker = Speaker::Customer;
  std::vector<std::string> tweet_ids;
  std::string text;
  std::vector<Sentence> sentences;

  bool operator==(const Utterance&) const = default;
};

struct Dialog {
  std::string dialog_id;
  std::vector<Utterance> utterances;
  int speaker_count = 0;

  int sentence_count() const;
  // Sentences in global order. References stay valid while the dialog is
  // not modified.
  std::vector<std::reference_wrapper<const Sentence>> sentences() const;
  const Sentence& sentence(int global_index) const;
  int token_count() const;

  bool operator==(const Dialog&) const = default;
};

// One turn's worth of already-segmented text, used to assemble a Dialog.
struct RawTurn {
  Speaker speaker = Speaker::Customer;
  std::vector<std::string> tweet_ids;
  std::vector<std::string> sentence_texts;
};

/// Assigns utterance/global indices and stats tokens. Turns without
/// sentences are dropped.
Dialog assemble_dialog(std::string dialog_id, std::span<const RawTurn> turns,
                       int speaker_count);

struct AbstractiveSummary {
  std::string customer_part;
  std::string agent_part;

  std::string full_text() const;
  bool empty() const { return customer_part.empty() && agent_part.empty(); }
  bool operator==(const AbstractiveSummary&) const = default;
};

struct Annotation {
  std::string annotator_id;
  std::vector<int> extractive;  // sorted, unique sentence global indices
  AbstractiveSummary abstractive;

  bool operator==(const Annotation&) const = default;
};

struct AnnotationSet {
  std::string dialog_id;
  std::vector<Annotation> annotations;

  bool operator==(const AnnotationSet&) const = default;
};

struct AnnotatedDialog {
  Dialog dialog;
  AnnotationSet annotations;

  bool operator==(const AnnotatedDialog&) const = default;
};

using Corpus = std::map<std::string, AnnotatedDialog>;

// ---------------------------------------------------------------------------
// Raw tweet CSV

/// Parses "Tue Oct 31 22:10:47 +0000 2017", falling back to ISO-8601
/// ("2017-10-31T22:10:47Z", "2017-10-31 22:10:47", optional +hh:mm offset).
std::optional<std::int64_t> parse_timestamp(std::string_view text);

/// RFC-4180 CSV with a header naming tweet_id, author_id, inbound,
/// created_at, text, response_tweet_id, in_response_to_tweet_id (any order,
/// extra columns ignored). Throws SchemaError for a missing column and
/// DataError("row N: ...") for a bad value, N counting data rows from 1.
std::vector<TweetRecord> parse_tweet_csv(std::istream& source);
std::vector<TweetRecord> parse_tweet_csv_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Reconstruction

struct ReconstructionOptions {
  // Consecutive tweets by the same author form one utterance.
  bool merge_consecutive = true;
  TokenizerConfig tokenizer;
};

struct ReconstructionReport {
  std::vector<std::vector<std::string>> cycles;  // tweet ids per cycle
  std::size_t cyclic_tweets_skipped = 0;         // cycle members plus their descendants
  std::size_t dangling_parents = 0;              // tweets promoted to roots
  std::size_t duplicate_records = 0;
  std::vector<std::string> warnings;
};

struct ReconstructionResult {
  std::vector<Dialog> dialogs;
  ReconstructionReport report;
};

/// One dialog per root tweet: the thread is flattened depth-first with
/// siblings ordered by created_at (then tweet id). inbound tweets are
/// Customer, the rest Agent.
ReconstructionResult reconstruct_dialogs(std::span<const TweetRecord> records,
                                         const ReconstructionOptions& options = {});

struct FilterOptions {
  int min_utterances = 6;
  int max_utterances = 20;
  int required_speakers = 2;
};

struct FilterResult {
  std::vector<Dialog> kept;
  std::size_t too_short = 0;
  std::size_t too_long = 0;
  std::size_t wrong_speaker_count = 0;
};

FilterResult filter_dialogs(std::span<const Dialog> dialogs, const FilterOptions& options = {});

/// Uniform sample without replacement, returned sorted by dialog_id.
std::vector<Dialog> sample_dialogs(std::span<const Dialog> dialogs, std::size_t n,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------
// Splits

struct SplitRatios {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
};

struct CorpusSplit {
  std::vector<std::string> train;
  std::vector<std::string> validation;
  std::vector<std::string> test;
  std::uint64_t seed = 0;
};

/// Shuffles the (sorted) ids by seed and cuts contiguous blocks. Validation
/// and test sizes are floor(n * ratio); the remainder goes to train.
CorpusSplit split_corpus(std::span<const std::string> dialog_ids, std::uint64_t seed,
                         const SplitRatios& ratios = {});
CorpusSplit split_corpus(const Corpus& corpus, std::uint64_t seed,
                         const SplitRatios& ratios = {});

// ---------------------------------------------------------------------------
// Native corpus file: one JSON dialog object per line.

std::string dialog_to_json_line(const AnnotatedDialog& entry);
void write_corpus(std::ostream& out, const Corpus& corpus);
void write_corpus_file(const std::filesystem::path& path, const Corpus& corpus);

struct SkippedEntry {
  std::string dialog_id;
  std::string reason;
};

struct LoadResult {
  Corpus corpus;
  std::vector<SkippedEntry> skipped;
};

/// Reads the native schema. Lines that are not valid dialog objects make the
/// whole load fail with a SchemaError listing the offending ids (or line
/// numbers); entries violating Dialog/AnnotationSet invariants are skipped
/// and reported.
LoadResult read_corpus(std::istream& in);
LoadResult load_annotated_corpus(const std::filesystem::path& path);

/// Adapter for the released annotation files, whose dialogs reference tweets
/// by id and sentences by character offsets into the raw tweet text. The
/// referenced tweets come from the raw CSV records.
LoadResult load_released_corpus(const std::filesystem::path& path,
                                std::span<const TweetRecord> tweets,
                                const ReconstructionOptions& options = {});
LoadResult read_released_corpus(std::istream& in, std::span<const TweetRecord> tweets,
                                const ReconstructionOptions& options = {});

Corpus corpus_from_dialogs(std::span<const Dialog> dialogs);
std::vector<Dialog> dialogs_of(const Corpus& corpus);
Corpus subset(const Corpus& corpus, std::span<const std::string> dialog_ids);

}  // namespace dialogsum

#endif  // DIALOGSUM_CORPUS_HPP_

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

#ifndef DIALOGSUM_TEXTPROC_HPP_
#define DIALOGSUM_TEXTPROC_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace dialogsum {

// Stats keeps punctuation as separate tokens; Rouge keeps only lowercase
// alphanumeric runs, as the official ROUGE preprocessing does.
enum class TokenMode { Stats, Rouge };

struct TokenizerConfig {
  bool lowercase = true;
  // @handle -> "@Customer_id" for numeric (anonymized customer) handles,
  // "@Company" otherwise.
  bool mask_mentions = true;
  bool mask_urls = true;
  TokenMode mode = TokenMode::Stats;
};

inline constexpr std::string_view kUrlMask = "[URL]";
inline constexpr std::string_view kCustomerMask = "@Customer_id";
inline constexpr std::string_view kCompanyMask = "@Company";

/// Masks mentions and URLs per \p config, collapses whitespace runs to a
/// single space and trims both ends. Idempotent.
std::string normalize(std::string_view text, const TokenizerConfig& config = {});

/// Set of lowercase abbreviations (with trailing period) that never end a
/// sentence.
class AbbreviationList {
 public:
  AbbreviationList() = default;

  /// The list bundled from resources/abbreviations.txt.
  static const AbbreviationList& builtin();
  static AbbreviationList parse(std::string_view contents);
  static AbbreviationList from_file(const std::filesystem::path& path);

  bool contains(std::string_view lowercase_word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

/// Rule-based sentence splitter. A boundary is a run of . ! ? (plus closing
/// quotes/brackets) followed by whitespace and then an uppercase letter, a
/// non-ASCII character (emoji) or the end of text. Abbreviations and
/// decimal numbers are protected. Sentences are substrings of \p text, so
/// joining them with single spaces gives back normalized input.
std::vector<std::string> segment_sentences(
    std::string_view text,
    const AbbreviationList& abbreviations = AbbreviationList::builtin());

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config = {});

// Shorthand for tokenize() in TokenMode::Rouge.
std::vector<std::string> rouge_tokenize(std::string_view text);

/// Classic Porter (1980) stemmer, as published (short words are stemmed too,
/// so "as" -> "a"). Tokens with any character outside a-z are returned
/// unchanged.
std::string porter_stem(std::string_view token);

}  // namespace dialogsum

#endif  // DIALOGSUM_TEXTPROC_HPP_

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

#ifndef DIALOGSUM_CONFIG_HPP_
#define DIALOGSUM_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "dialogsum/corpus.hpp"
#include "dialogsum/nrp.hpp"
#include "dialogsum/quality.hpp"
#include "dialogsum/remote.hpp"
#include "dialogsum/rouge.hpp"
#include "dialogsum/summarizers.hpp"

namespace dialogsum {

struct PipelineConfig {
  struct General {
    std::uint64_t seed = 0;
    int jobs = 0;  // 0 = hardware concurrency
  } general;

  struct Paths {
    std::string raw_csv;
    std::string corpus;
    std::string annotations;
    std::string output_dir = "out";
  } paths;

  ReconstructionOptions reconstruction;
  FilterOptions filter;
  std::size_t sample_size = 0;  // 0 keeps every filtered dialog
  SplitRatios split;
  RougeConfig rouge;
  ReferenceSide reference_side = ReferenceSide::Extractive;
  LexRankConfig lexrank;
  CesConfig ces;

  struct Nrp {
    TripleOptions triples;
    InfluenceOptions influence;
    // "builtin" trains the lexical scorer; an http:// URL uses a remote scorer
    // (one endpoint serving both directions, selected per request).
    std::string scorer = "builtin";
    std::string model;  // saved built-in scorer prefix; empty = train in-process
    LogisticOptions training;
    RemoteOptions remote;
  } nrp;

  QcOptions qc;

  void validate() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Reads the process environment.
std::optional<std::string> system_env(const std::string& name);

/// Sorted-key JSON with every field, pretty-printed.
std::string config_to_json(const PipelineConfig& config);

/// Starts from defaults, applies the sections present in `text`, then
/// environment overrides named DIALOGSUM_<SECTION>_<KEY> (upper case).
/// Unknown sections or keys throw SchemaError; ill-typed values DataError.
PipelineConfig config_from_json(std::string_view text, const EnvLookup& env = system_env);
PipelineConfig load_config(const std::optional<std::filesystem::path>& path,
                           const EnvLookup& env = system_env);

// Per-dialog seed that does not depend on the order dialogs are processed in.
std::uint64_t dialog_seed(std::uint64_t seed, std::string_view dialog_id);

int resolve_jobs(int jobs);

/// Calls fn(i) for i in [0, n) on up to `jobs` threads. If calls throw, the
/// exception of the lowest index is rethrown after all workers finish.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace dialogsum

#endif  // DIALOGSUM_CONFIG_HPP_

# Copyright 2026 The dialogsum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Customer-service dialog summarization."""

from ._core import (
    ConvergenceError,
    DataError,
    Dialog,
    Error,
    SchemaError,
    ScorerError,
    SizeError,
    __version__,
    adapted_jaccard,
    ces_summary,
    cohen_kappa,
    extractive_sentences,
    lead_summary,
    lexrank_scores,
    lexrank_summary,
    load_corpus,
    make_dialog,
    normalize,
    nrp_summary,
    overlap_probability,
    porter_stem,
    qa_score,
    random_summary,
    rouge,
    rouge_tokenize,
    segment_sentences,
    sentence_influence_scores,
    tokenize,
    welch_t_test,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

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

#include <set>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dialogsum/analysis.hpp"
#include "dialogsum/corpus.hpp"
#include "dialogsum/errors.hpp"
#include "dialogsum/nrp.hpp"
#include "dialogsum/quality.hpp"
#include "dialogsum/rouge.hpp"
#include "dialogsum/summarizers.hpp"
#include "dialogsum/textproc.hpp"

namespace py = pybind11;
using namespace dialogsum;

namespace {

using Turns = std::vector<std::pair<std::string, std::vector<std::string>>>;

Dialog make_dialog(const std::string& dialog_id, const Turns& turns) {
  std::vector<RawTurn> raw;
  std::set<Speaker> speakers;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    RawTurn t;
    t.speaker = parse_speaker(turns[i].first);
    t.tweet_ids = {dialog_id + "_" + std::to_string(i)};
    t.sentence_texts = turns[i].second;
    speakers.insert(t.speaker);
    raw.push_back(std::move(t));
  }
  return assemble_dialog(dialog_id, raw, static_cast<int>(speakers.size()));
}

py::dict score_dict(const RougeScore& s) {
  py::dict d;
  d["precision"] = s.precision;
  d["recall"] = s.recall;
  d["f"] = s.f;
  return d;
}

py::dict report_dict(const RougeReport& r) {
  py::dict d;
  d["rouge1"] = score_dict(r.r1);
  d["rouge2"] = score_dict(r.r2);
  d["rougeSU4"] = score_dict(r.rsu4);
  d["rougeL"] = score_dict(r.rl);
  return d;
}

// Python callables are not safe to call from worker threads.
class PyScorer : public ResponseScorer {
 public:
  PyScorer(Direction direction, std::function<double(const std::vector<std::string>&, const std::string&)> fn)
      : direction_(direction), fn_(std::move(fn)) {}
  Direction direction() const override { return direction_; }
  double score(const std::vector<std::string>& context, const std::string& candidate) const override {
    return fn_(context, candidate);
  }
  bool shareable() const override { return false; }

 private:
  Direction direction_;
  std::function<double(const std::vector<std::string>&, const std::string&)> fn_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dialog summarization: corpus tools, summarizers, ROUGE and analyses.";
  m.attr("__version__") = DIALOGSUM_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<DataError>(m, "DataError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ScorerError>(m, "ScorerError", base.ptr());

  m.def("normalize", [](const std::string& t) { return normalize(t); });
  m.def("segment_sentences", [](const std::string& t) { return segment_sentences(t); });
  m.def("tokenize", [](const std::string& t) { return tokenize(t); });
  m.def("rouge_tokenize", [](const std::string& t) { return rouge_tokenize(t); });
  m.def("porter_stem", [](const std::string& t) { return porter_stem(t); });

  py::class_<Dialog>(m, "Dialog")
      .def_readonly("dialog_id", &Dialog::dialog_id)
      .def_readonly("speaker_count", &Dialog::speaker_count)
      .def_property_readonly("sentence_count", &Dialog::sentence_count)
      .def_property_readonly("token_count", &Dialog::token_count)
      .def_property_readonly("sentences",
                             [](const Dialog& d) {
                               std::vector<std::string> out;
                               for (const auto& s : d.sentences()) out.push_back(s.get().text);
                               return out;
                             })
      .def_property_readonly("speakers",
                             [](const Dialog& d) {
                               std::vector<std::string> out;
                               for (const auto& s : d.sentences()) out.emplace_back(to_string(s.get().speaker));
                               return out;
                             })
      .def("__len__", &Dialog::sentence_count)
      .def("__repr__", [](const Dialog& d) {
        return "<Dialog " + d.dialog_id + ": " + std::to_string(d.utterances.size()) + " utterances, " +
               std::to_string(d.sentence_count()) + " sentences>";
      });

  m.def("make_dialog", &make_dialog, py::arg("dialog_id"), py::arg("turns"),
        "Build a dialog from (speaker, [sentence, ...]) turns; speaker is 'Customer' or 'Agent'.");
  m.def(
      "load_corpus",
      [](const std::string& path) {
        const auto loaded = load_annotated_corpus(path);
        py::dict out;
        for (const auto& [id, e] : loaded.corpus) {
          py::list annotations;
          for (const auto& a : e.annotations.annotations) {
            py::dict ad;
            ad["annotator_id"] = a.annotator_id;
            ad["extractive"] = a.extractive;
            ad["abstractive"] = py::make_tuple(a.abstractive.customer_part, a.abstractive.agent_part);
            annotations.append(ad);
          }
          out[py::str(id)] = py::make_tuple(e.dialog, annotations);
        }
        return out;
      },
      py::arg("path"), "Native corpus file -> {dialog_id: (Dialog, [annotation dict])}.");

  m.def("lead_summary", [](const Dialog& d) { return lead_summary(d).selected; });
  m.def("random_summary", [](const Dialog& d, std::uint64_t seed) { return random_summary(d, seed).selected; },
        py::arg("dialog"), py::arg("seed") = 0);
  m.def("lexrank_scores", [](const Dialog& d) { return lexrank_scores(d); });
  m.def("lexrank_summary", [](const Dialog& d) { return lexrank_summary(d).selected; });
  m.def(
      "ces_summary",
      [](const Dialog& d, std::uint64_t seed, int iterations, int samples) {
        CesConfig cfg;
        cfg.seed = seed;
        cfg.iterations = iterations;
        cfg.samples_per_iteration = samples;
        return ces_summary(d, cfg).selected;
      },
      py::arg("dialog"), py::arg("seed") = 0, py::arg("iterations") = 30, py::arg("samples") = 1000);

  m.def("overlap_probability", &overlap_probability, py::arg("context"), py::arg("candidate"));
  m.def(
      "sentence_influence_scores",
      [](const Dialog& d, std::function<double(const std::vector<std::string>&, const std::string&)> fw,
         std::function<double(const std::vector<std::string>&, const std::string&)> bw, bool multi_split) {
        const PyScorer f(Direction::Forward, std::move(fw)), b(Direction::Backward, std::move(bw));
        InfluenceOptions opt;
        opt.multi_split = multi_split;
        std::vector<std::tuple<double, double, double>> out;
        for (const auto& s : sentence_influence_scores(d, f, b, opt)) out.emplace_back(s.drop_fw, s.drop_bw, s.averaged);
        return out;
      },
      py::arg("dialog"), py::arg("forward"), py::arg("backward"), py::arg("multi_split") = false,
      "Per-sentence (drop_fw, drop_bw, averaged) for probability callables f(context, candidate).");
  m.def(
      "nrp_summary",
      [](const Dialog& d, std::function<double(const std::vector<std::string>&, const std::string&)> fw,
         std::function<double(const std::vector<std::string>&, const std::string&)> bw) {
        const PyScorer f(Direction::Forward, std::move(fw)), b(Direction::Backward, std::move(bw));
        return nrp_summary(d, f, b).selected;
      },
      py::arg("dialog"), py::arg("forward"), py::arg("backward"));
  m.def("extractive_sentences", [](const Dialog& d, const std::vector<int>& sel) { return extractive_sentences(d, sel); });

  m.def(
      "rouge",
      [](const std::vector<std::string>& candidate, const std::vector<std::vector<std::string>>& references, bool stem,
         std::optional<int> length_limit) {
        RougeConfig cfg;
        cfg.stem = stem;
        cfg.length_limit = length_limit;
        return report_dict(evaluate_summary(candidate, references, cfg));
      },
      py::arg("candidate"), py::arg("references"), py::arg("stem") = true, py::arg("length_limit") = py::none(),
      "ROUGE-1/2/SU4/L of a candidate (sentence list) against reference sentence lists.");

  m.def("adapted_jaccard", &adapted_jaccard, py::arg("selection"), py::arg("others"));
  m.def("cohen_kappa", [](const std::vector<int>& a, const std::vector<int>& b) { return cohen_kappa(a, b); });
  m.def(
      "qa_score",
      [](const std::vector<double>& weights, const std::vector<std::vector<int>>& indicators) {
        return qa_score(QaSheet{"", weights, indicators});
      },
      py::arg("weights"), py::arg("indicators"));
  m.def(
      "welch_t_test",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const auto w = welch_t_test(a, b);
        return py::make_tuple(w.t, w.df, w.p_two_sided);
      },
      py::arg("a"), py::arg("b"), "(t, df, two-sided p)");
}

// Copyright 2026 The ParChoice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parchoice/experiment.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "parchoice/errors.h"
#include "parchoice/meteor.h"
#include "parchoice/random.h"

namespace parchoice {
namespace {

uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TrainOptions WithTagger(TrainOptions options, const ResourceBundle& r) {
  if (!options.tagger) options.tagger = r.tagger;
  return options;
}

Dataset Labeled(const std::vector<std::string>& classes,
                const std::vector<std::string>& lines, size_t label) {
  Dataset d;
  d.classes = classes;
  for (const auto& l : lines) d.examples.push_back({l, label, std::nullopt});
  return d;
}

std::vector<std::string> TextsOfClass(const Dataset& d, size_t label) {
  std::vector<std::string> out;
  for (const auto& e : d.examples) {
    if (e.label == label) out.push_back(e.text);
  }
  return out;
}

double PredictedShare(const Profiler& p, const std::vector<std::string>& texts,
                      size_t cls) {
  if (texts.empty()) return 0.0;
  size_t hits = 0;
  for (const auto& t : texts) hits += Argmax(p.PredictProba(t)) == cls;
  return static_cast<double>(hits) / static_cast<double>(texts.size());
}

MeteorResources MeteorFor(const ResourceBundle& r) {
  MeteorResources m;
  if (r.lemmatizer) m.stemmer = r.lemmatizer.get();
  if (r.wordnet) m.wordnet = &*r.wordnet;
  return m;
}

struct LineTransforms {
  std::vector<std::string> texts;
  size_t sentences = 0;
  size_t changed = 0;
};

LineTransforms TransformAll(const std::vector<std::string>& lines,
                            const ResourceBundle& resources,
                            const ExperimentSettings& settings, const Profiler* surrogate,
                            const std::string& source, const std::string& target,
                            uint64_t seed) {
  LineTransforms out;
  for (size_t i = 0; i < lines.size(); ++i) {
    Document doc;
    doc.sentences = Tokenize(lines[i]);
    SentencewiseOptions opt;
    opt.mode = settings.mode;
    opt.source = source;
    opt.target = target;
    opt.seed = DeriveSeed(seed, i);
    const auto result = TransformDocumentSentencewise(doc, resources, settings.caps,
                                                      surrogate, opt);
    out.texts.push_back(DocumentText(result.document));
    out.sentences += result.sentences.size();
    for (const auto& s : result.sentences) out.changed += s.changed;
  }
  return out;
}

}  // namespace

std::string TaskKindName(TaskKind kind) {
  switch (kind) {
    case TaskKind::kSentenceTransfer: return "sentence-transfer";
    case TaskKind::kMulticlassImitation: return "multiclass-imitation";
    case TaskKind::kDocumentGa: return "document-ga";
    case TaskKind::kAdvTrain: return "adv-train";
  }
  return "";
}

TaskKind ParseTaskKind(const std::string& name) {
  for (TaskKind k : {TaskKind::kSentenceTransfer, TaskKind::kMulticlassImitation,
                     TaskKind::kDocumentGa, TaskKind::kAdvTrain}) {
    if (TaskKindName(k) == name) return k;
  }
  throw TaskError("unknown task " + name);
}

void ValidateSettings(const ExperimentSettings& s) {
  if (!(s.surrogate_split > 0 && s.surrogate_split < 1)) {
    throw TaskError("surrogate split must lie in (0, 1)");
  }
  if (s.caps.subs_cap == 0 || s.caps.beam == 0) {
    throw TaskError("subs cap and beam must be positive");
  }
  if (!(s.adv_fraction >= 0 && s.adv_fraction <= 1)) {
    throw TaskError("adversarial fraction must lie in [0, 1]");
  }
  ValidateGaParams(s.ga);
}

const Profiler& SentenceExperiment::Surrogate(const ExperimentSettings& s) const {
  if (!s.query_access && surrogate) return *surrogate;
  const auto it = evaluators.find(ProfilerKind::kUnigramLr);
  if (it != evaluators.end()) return *it->second;
  if (evaluators.empty()) throw TaskError("no profiler available as surrogate");
  return *evaluators.begin()->second;
}

SentenceExperiment PrepareSentenceExperiment(const SentenceCorpus& corpus,
                                             const ResourceBundle& resources,
                                             const ExperimentSettings& settings) {
  ValidateSettings(settings);
  if (corpus.classes.size() < 2) throw TaskError("need at least two classes");
  SentenceExperiment e;
  e.classes = corpus.classes;
  e.surrogate_train.classes = e.eval_train.classes = e.test.classes = e.classes;
  Rng rng(settings.seed);
  for (size_t c = 0; c < e.classes.size(); ++c) {
    const auto& lines = corpus.train.at(e.classes[c]);
    std::vector<size_t> order(lines.size());
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    size_t n_sur = static_cast<size_t>(std::llround(settings.surrogate_split * lines.size()));
    if (lines.size() >= 2) n_sur = std::clamp<size_t>(n_sur, 1, lines.size() - 1);
    for (size_t k = 0; k < order.size(); ++k) {
      LabeledText t{lines[order[k]], c, std::nullopt};
      (k < n_sur ? e.surrogate_train : e.eval_train).examples.push_back(std::move(t));
    }
    for (const auto& l : corpus.test.at(e.classes[c])) e.test.examples.push_back({l, c, std::nullopt});
  }
  const TrainOptions options = WithTagger(settings.train, resources);
  for (ProfilerKind k : settings.evaluators) {
    e.evaluators[k] = TrainProfiler(k, e.eval_train, options);
  }
  if (!settings.query_access) {
    e.surrogate = TrainProfiler(ProfilerKind::kUnigramLr, e.surrogate_train, options);
  }
  return e;
}

std::vector<std::string> TransformLines(const std::vector<std::string>& lines,
                                        const ResourceBundle& resources,
                                        const ExperimentSettings& settings,
                                        const Profiler* surrogate,
                                        const std::string& source,
                                        const std::string& target, uint64_t seed) {
  return TransformAll(lines, resources, settings, surrogate, source, target, seed).texts;
}

DirectionResult RunDirection(const SentenceExperiment& e, const ResourceBundle& resources,
                             const ExperimentSettings& settings, const std::string& source,
                             const std::string& target) {
  const auto src = std::find(e.classes.begin(), e.classes.end(), source);
  const auto tgt = std::find(e.classes.begin(), e.classes.end(), target);
  if (src == e.classes.end() || tgt == e.classes.end()) {
    throw TaskError("unknown class in direction " + source + " -> " + target);
  }
  if (src == tgt) throw TaskError("source and target classes must differ");
  const size_t s = static_cast<size_t>(src - e.classes.begin());
  const size_t t = static_cast<size_t>(tgt - e.classes.begin());

  DirectionResult r;
  r.source = source;
  r.target = target;
  r.originals = TextsOfClass(e.test, s);
  const Profiler* surrogate =
      settings.mode == SelectionMode::kTargeted ? &e.Surrogate(settings) : nullptr;
  const auto lt = TransformAll(r.originals, resources, settings, surrogate, source, target,
                               DeriveSeed(settings.seed, 1000 + s * 31 + t));
  r.transformed = lt.texts;
  r.transformed_sentence_rate =
      lt.sentences == 0 ? 0.0 : static_cast<double>(lt.changed) / static_cast<double>(lt.sentences);

  for (const auto& [kind, model] : e.evaluators) {
    ProfilerScores sc;
    if (!r.originals.empty()) {
      sc.original = EvaluateAccuracy(*model, Labeled(e.classes, r.originals, s)).accuracy;
      sc.transformed = EvaluateAccuracy(*model, Labeled(e.classes, r.transformed, s)).accuracy;
    }
    sc.decrease = AccuracyDecrease(sc.original, sc.transformed);
    r.scores[kind] = sc;
    r.target_rate[kind] = PredictedShare(*model, r.transformed, t);
  }
  const auto meteor = MeteorFor(resources);
  double sum = 0;
  for (size_t i = 0; i < r.originals.size(); ++i) {
    sum += MeteorScore(r.transformed[i], r.originals[i], meteor);
  }
  r.meteor_mean = r.originals.empty() ? 0.0 : sum / static_cast<double>(r.originals.size());
  return r;
}

AdvTrainResult RunAdversarialTraining(const SentenceExperiment& e,
                                      const ResourceBundle& resources,
                                      const ExperimentSettings& settings) {
  const TrainOptions options = WithTagger(settings.train, resources);
  const Profiler* surrogate =
      settings.mode == SelectionMode::kTargeted ? &e.Surrogate(settings) : nullptr;
  const size_t k = e.classes.size();

  Dataset transformed_train;
  transformed_train.classes = e.classes;
  Dataset transformed_test;
  transformed_test.classes = e.classes;
  for (size_t c = 0; c < k; ++c) {
    const std::string& source = e.classes[c];
    const std::string& target = e.classes[(c + 1) % k];
    std::vector<size_t> idx;
    for (size_t i = 0; i < e.eval_train.examples.size(); ++i) {
      if (e.eval_train.examples[i].label == c) idx.push_back(i);
    }
    const size_t take = std::min(
        idx.size(), static_cast<size_t>(std::ceil(settings.adv_fraction * idx.size())));
    idx.resize(take);
    std::vector<std::string> lines;
    for (size_t i : idx) lines.push_back(e.eval_train.examples[i].text);
    const auto out = TransformLines(lines, resources, settings, surrogate, source, target,
                                    DeriveSeed(settings.seed, 2000 + c));
    for (size_t j = 0; j < idx.size(); ++j) {
      transformed_train.examples.push_back({out[j], c, idx[j]});
    }
    const auto test_out = TransformLines(TextsOfClass(e.test, c), resources, settings,
                                         surrogate, source, target,
                                         DeriveSeed(settings.seed, 3000 + c));
    for (const auto& t : test_out) transformed_test.examples.push_back({t, c, std::nullopt});
  }

  std::unique_ptr<Profiler> base_owned;
  const Profiler* base = nullptr;
  if (const auto it = e.evaluators.find(settings.adv_kind); it != e.evaluators.end()) {
    base = it->second.get();
  } else {
    base_owned = TrainProfiler(settings.adv_kind, e.eval_train, options);
    base = base_owned.get();
  }
  AdvTrainResult r;
  r.transformed_train = transformed_train.examples.size();
  r.before_original = EvaluateAccuracy(*base, e.test).accuracy;
  r.before_transformed = EvaluateAccuracy(*base, transformed_test).accuracy;
  const auto retrained =
      AdversarialRetrain(settings.adv_kind, e.eval_train, transformed_train, options);
  r.after_original = EvaluateAccuracy(*retrained, e.test).accuracy;
  r.after_transformed = EvaluateAccuracy(*retrained, transformed_test).accuracy;
  return r;
}

DocumentGaResult RunDocumentGa(const DocumentCorpus& corpus, const ResourceBundle& resources,
                               const ExperimentSettings& settings, const Profiler* profiler) {
  ValidateGaParams(settings.ga);
  auto label_of = [&](const Document& d) {
    const auto it = std::find(corpus.authors.begin(), corpus.authors.end(), *d.author_class);
    return static_cast<size_t>(it - corpus.authors.begin());
  };
  std::unique_ptr<Profiler> owned;
  if (profiler == nullptr) {
    Dataset train;
    train.classes = corpus.authors;
    for (const auto& d : corpus.train) train.examples.push_back({DocumentText(d), label_of(d), {}});
    owned = TrainProfiler(ProfilerKind::kWriteprintsMlp, train,
                          WithTagger(settings.train, resources));
    profiler = owned.get();
  }
  DocumentGaResult r;
  if (corpus.test.empty()) return r;
  const auto meteor = MeteorFor(resources);
  size_t correct_before = 0, correct_after = 0, successes = 0;
  double rate_sum = 0, meteor_sum = 0;
  for (size_t i = 0; i < corpus.test.size(); ++i) {
    const Document& doc = corpus.test[i];
    GaParams ga = settings.ga;
    ga.seed = DeriveSeed(settings.ga.seed, i);
    auto result = TransformDocumentGa(doc, resources, settings.caps, *profiler,
                                      *doc.author_class, ga);
    if (!result.already_misclassified) {
      ++correct_before;
      if (result.misclassified) ++successes;
    }
    if (!result.misclassified) ++correct_after;
    rate_sum += TransformedSentenceRate(result);
    meteor_sum += MeteorScore(DocumentText(result.document), DocumentText(doc), meteor);
    r.documents.push_back(std::move(result));
  }
  const double n = static_cast<double>(corpus.test.size());
  r.originally_correct = correct_before;
  r.original_accuracy = correct_before / n;
  r.transformed_accuracy = correct_after / n;
  r.success_rate = correct_before == 0 ? 0.0 : static_cast<double>(successes) / correct_before;
  r.transformed_sentence_rate = rate_sum / n;
  r.meteor_mean = meteor_sum / n;
  return r;
}

nlohmann::json SettingsJson(const ExperimentSettings& s) {
  nlohmann::json j;
  j["edit_cap"] = s.caps.edit_cap;
  j["subs_cap"] = s.caps.subs_cap;
  j["beam"] = s.caps.beam;
  j["mode"] = s.mode == SelectionMode::kTargeted ? "targeted" : "random";
  j["surrogate_split"] = s.surrogate_split;
  j["query_access"] = s.query_access;
  j["seed"] = s.seed;
  j["ga"] = {{"runs_per_iteration", s.ga.runs_per_iteration},
             {"max_iterations", s.ga.max_iterations},
             {"meteor_weight", s.ga.meteor_weight},
             {"prob_weight", s.ga.prob_weight},
             {"survivors", s.ga.survivors}};
  return j;
}

nlohmann::json DirectionJson(const DirectionResult& r) {
  nlohmann::json j;
  j["source"] = r.source;
  j["target"] = r.target;
  j["sentences"] = r.originals.size();
  j["meteor_mean"] = r.meteor_mean;
  j["transformed_sentence_rate"] = r.transformed_sentence_rate;
  nlohmann::json profilers = nlohmann::json::object();
  for (const auto& [kind, sc] : r.scores) {
    profilers[ProfilerKindName(kind)] = {{"original_accuracy", sc.original},
                                         {"transformed_accuracy", sc.transformed},
                                         {"accuracy_decrease", sc.decrease},
                                         {"target_rate", r.target_rate.at(kind)}};
  }
  j["profilers"] = profilers;
  return j;
}

nlohmann::json AdvTrainJson(const AdvTrainResult& r) {
  return {{"before", {{"original_test", r.before_original},
                      {"transformed_test", r.before_transformed}}},
          {"after", {{"original_test", r.after_original},
                     {"transformed_test", r.after_transformed}}},
          {"transformed_train_examples", r.transformed_train}};
}

nlohmann::json DocumentGaJson(const DocumentGaResult& r) {
  nlohmann::json docs = nlohmann::json::array();
  for (const auto& d : r.documents) {
    docs.push_back({{"id", d.original.id},
                    {"author", d.original.author_class.value_or("")},
                    {"already_misclassified", d.already_misclassified},
                    {"misclassified", d.misclassified},
                    {"iterations", d.iterations},
                    {"transformed_sentence_rate", TransformedSentenceRate(d)},
                    {"best_fitness", d.best_fitness}});
  }
  return {{"original_accuracy", r.original_accuracy},
          {"transformed_accuracy", r.transformed_accuracy},
          {"successful_style_transfer_rate", r.success_rate},
          {"transformed_sentence_rate", r.transformed_sentence_rate},
          {"meteor_mean", r.meteor_mean},
          {"originally_correct", r.originally_correct},
          {"documents", docs}};
}

namespace {

std::string Fixed(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(3) << v;
  return ss.str();
}

std::string Table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t i = 0; i < rows[r].size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << rows[r][i];
    }
    out << '\n';
    if (r == 0) {
      size_t total = 0;
      for (size_t w : width) total += w;
      out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string FormatTable(const nlohmann::json& report) {
  std::ostringstream out;
  if (report.contains("directions")) {
    std::vector<std::vector<std::string>> rows = {
        {"direction", "profiler", "original", "transformed", "decrease", "meteor", "changed"}};
    for (const auto& d : report["directions"]) {
      for (const auto& [kind, sc] : d["profilers"].items()) {
        rows.push_back({d["source"].get<std::string>() + "->" + d["target"].get<std::string>(),
                        kind, Fixed(sc["original_accuracy"]), Fixed(sc["transformed_accuracy"]),
                        Fixed(sc["accuracy_decrease"]), Fixed(d["meteor_mean"]),
                        Fixed(d["transformed_sentence_rate"])});
      }
    }
    out << Table(rows);
  }
  if (report.contains("adversarial_training")) {
    const auto& a = report["adversarial_training"];
    out << Table({{"profiler", "test set", "before", "after"},
                  {"", "original", Fixed(a["before"]["original_test"]),
                   Fixed(a["after"]["original_test"])},
                  {"", "transformed", Fixed(a["before"]["transformed_test"]),
                   Fixed(a["after"]["transformed_test"])}});
  }
  if (report.contains("document_ga")) {
    const auto& g = report["document_ga"];
    out << Table({{"original", "transformed", "success", "changed", "meteor"},
                  {Fixed(g["original_accuracy"]), Fixed(g["transformed_accuracy"]),
                   Fixed(g["successful_style_transfer_rate"]),
                   Fixed(g["transformed_sentence_rate"]), Fixed(g["meteor_mean"])}});
  }
  return out.str();
}

}  // namespace parchoice

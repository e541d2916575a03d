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

// parchoice: build resources, transform corpora and run adversarial
// retraining from the command line.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "parchoice/corpus.h"
#include "parchoice/errors.h"
#include "parchoice/experiment.h"
#include "parchoice/resources.h"
#include "parchoice/text.h"

#ifndef PARCHOICE_VERSION
#define PARCHOICE_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace parchoice {
namespace {

class Timer {
 public:
  void Mark(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    phases_[phase] = std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }
  json Json() const { return phases_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::map<std::string, double> phases_;
};

struct CommonFlags {
  std::string resources;
  std::string corpus;
  std::string out;
  std::string mode = "targeted";
  std::string evaluators = "lr,mlp";
  size_t edit_cap = 10;
  size_t subs_cap = 1000;
  size_t beam = 1000;
  double surrogate_split = 0.15;
  bool query_access = false;
  uint64_t seed = 0;
  bool table = false;
  bool timings = false;
};

void AddCommon(CLI::App* app, CommonFlags* f) {
  app->add_option("--resources", f->resources,
                  "Resource directory (default: $PARCHOICE_RESOURCES)");
  app->add_option("--corpus", f->corpus, "Corpus directory")->required();
  app->add_option("--out", f->out, "Output directory");
  app->add_option("--mode", f->mode, "Selection mode")
      ->check(CLI::IsMember({"targeted", "random"}));
  app->add_option("--edit-cap", f->edit_cap, "Maximum edit distance per candidate");
  app->add_option("--subs-cap", f->subs_cap, "PPDB + WordNet applications per sentence")
      ->check(CLI::PositiveNumber);
  app->add_option("--beam", f->beam, "Candidate pool size after each stage")
      ->check(CLI::PositiveNumber);
  app->add_option("--surrogate-split", f->surrogate_split,
                  "Fraction of training data reserved for the surrogate");
  app->add_flag("--query-access", f->query_access,
                "Use the evaluation profiler as the surrogate");
  app->add_option("--seed", f->seed, "Random seed");
  app->add_option("--evaluators", f->evaluators, "Comma-separated evaluation profilers");
  app->add_flag("--table", f->table, "Print an aligned text table");
  app->add_flag("--timings", f->timings, "Include phase timings in the report");
}

ExperimentSettings Settings(const CommonFlags& f) {
  ExperimentSettings s;
  s.caps = {f.edit_cap, f.subs_cap, f.beam};
  s.mode = f.mode == "random" ? SelectionMode::kRandom : SelectionMode::kTargeted;
  s.surrogate_split = f.surrogate_split;
  s.query_access = f.query_access;
  s.seed = f.seed;
  s.ga.seed = f.seed;
  s.train.lr.seed = f.seed;
  s.train.mlp.seed = f.seed;
  s.evaluators.clear();
  std::stringstream ss(f.evaluators);
  for (std::string name; std::getline(ss, name, ',');) {
    if (!name.empty()) s.evaluators.push_back(ParseProfilerKind(name));
  }
  if (s.evaluators.empty()) throw TaskError("no evaluation profiler requested");
  return s;
}

json Metadata(const std::string& command, const CommonFlags& f,
              const ExperimentSettings& s) {
  json m;
  m["command"] = command;
  m["version"] = PARCHOICE_VERSION;
  m["seed"] = f.seed;
  m["corpus"] = f.corpus;
  m["settings"] = SettingsJson(s);
  return m;
}

void Emit(const json& report, const CommonFlags& f) {
  if (!f.out.empty()) {
    fs::create_directories(f.out);
    std::ofstream out(fs::path(f.out) / "report.json");
    out << report.dump(2) << '\n';
    if (!out) throw ResourceError("cannot write report to " + f.out);
  }
  if (f.table) {
    std::cout << FormatTable(report);
  } else if (f.out.empty()) {
    std::cout << report.dump(2) << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> Directions(
    const std::vector<std::string>& classes, const std::string& source,
    const std::string& target) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : classes) {
    for (const auto& t : classes) {
      if (s == t) continue;
      if (!source.empty() && s != source) continue;
      if (!target.empty() && t != target) continue;
      out.emplace_back(s, t);
    }
  }
  if (out.empty()) throw TaskError("no transfer direction matches the given classes");
  return out;
}

json PerClassAccuracy(const SentenceExperiment& e) {
  json j = json::object();
  for (const auto& [kind, model] : e.evaluators) {
    const auto report = EvaluateAccuracy(*model, e.test);
    json per = json::object();
    for (size_t c = 0; c < e.classes.size(); ++c) per[e.classes[c]] = report.ClassAccuracy(c);
    j[ProfilerKindName(kind)] = {{"overall", report.accuracy}, {"per_class", per}};
  }
  return j;
}

int RunSentenceTask(TaskKind task, const CommonFlags& f, const std::string& source,
                    const std::string& target) {
  Timer timer;
  const ExperimentSettings settings = Settings(f);
  ValidateSettings(settings);
  const ResourceBundle resources = LoadResources(ResolveResourceDir(f.resources));
  const SentenceCorpus corpus = LoadSentenceCorpus(f.corpus);
  if (task == TaskKind::kSentenceTransfer && corpus.classes.size() != 2) {
    throw TaskError("sentence-transfer needs exactly two classes");
  }
  timer.Mark("load");
  const SentenceExperiment experiment = PrepareSentenceExperiment(corpus, resources, settings);
  timer.Mark("train");

  json report;
  report["metadata"] = Metadata("transform", f, settings);
  report["metadata"]["task"] = TaskKindName(task);
  report["original_accuracy"] = PerClassAccuracy(experiment);
  report["directions"] = json::array();
  for (const auto& [s, t] : Directions(corpus.classes, source, target)) {
    const DirectionResult r = RunDirection(experiment, resources, settings, s, t);
    report["directions"].push_back(DirectionJson(r));
    if (!f.out.empty()) {
      fs::create_directories(f.out);
      WriteLines((fs::path(f.out) / (s + "-to-" + t + ".txt")).string(), r.transformed);
    }
  }
  timer.Mark("transform");
  if (f.timings) report["metadata"]["timings"] = timer.Json();
  Emit(report, f);
  return 0;
}

int RunDocumentTask(const CommonFlags& f, const GaParams& ga, size_t train_per_author) {
  Timer timer;
  ExperimentSettings settings = Settings(f);
  settings.ga = ga;
  settings.ga.seed = f.seed;
  ValidateSettings(settings);
  const ResourceBundle resources = LoadResources(ResolveResourceDir(f.resources));
  const DocumentCorpus corpus = LoadDocumentCorpus(f.corpus, train_per_author);
  timer.Mark("load");
  const DocumentGaResult r = RunDocumentGa(corpus, resources, settings);
  timer.Mark("transform");

  json report;
  report["metadata"] = Metadata("transform", f, settings);
  report["metadata"]["task"] = TaskKindName(TaskKind::kDocumentGa);
  report["document_ga"] = DocumentGaJson(r);
  if (!f.out.empty()) {
    for (const auto& d : r.documents) {
      const fs::path path = fs::path(f.out) / "documents" / (d.original.id);
      fs::create_directories(path.parent_path());
      std::vector<std::string> lines;
      for (const auto& s : d.document.sentences) lines.push_back(Detokenize(s.tokens));
      WriteLines(path.string(), lines);
    }
  }
  if (f.timings) report["metadata"]["timings"] = timer.Json();
  Emit(report, f);
  return 0;
}

int RunAdvTrain(const CommonFlags& f, const std::string& profiler, double fraction) {
  Timer timer;
  ExperimentSettings settings = Settings(f);
  settings.adv_kind = ParseProfilerKind(profiler);
  settings.adv_fraction = fraction;
  settings.evaluators = {settings.adv_kind};
  ValidateSettings(settings);
  const ResourceBundle resources = LoadResources(ResolveResourceDir(f.resources));
  const SentenceCorpus corpus = LoadSentenceCorpus(f.corpus);
  timer.Mark("load");
  const SentenceExperiment experiment = PrepareSentenceExperiment(corpus, resources, settings);
  timer.Mark("train");
  const AdvTrainResult r = RunAdversarialTraining(experiment, resources, settings);
  timer.Mark("retrain");

  json report;
  report["metadata"] = Metadata("adv-train", f, settings);
  report["metadata"]["profiler"] = ProfilerKindName(settings.adv_kind);
  report["adversarial_training"] = AdvTrainJson(r);
  if (f.timings) report["metadata"]["timings"] = timer.Json();
  Emit(report, f);
  return 0;
}

struct BuildFlags {
  std::string tagged_corpus;
  std::string ppdb;
  std::string wordnet;
  std::string spell;
  std::vector<std::string> typo_corpora;
  int typo_max_dist = 2;
  bool strict = false;
  std::string out;
};

int RunBuildResources(const BuildFlags& f) {
  ResourceInputs in;
  in.tagged_corpus = f.tagged_corpus;
  in.ppdb = f.ppdb;
  in.wordnet = f.wordnet;
  in.spell = f.spell;
  in.typo_max_dist = f.typo_max_dist;
  in.strict = f.strict;
  for (const auto& spec : f.typo_corpora) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw TaskError("--typo-corpus expects CLASS=PATH, got " + spec);
    }
    auto& sentences = in.typo_corpora[spec.substr(0, eq)];
    for (const auto& line : ReadLines(spec.substr(eq + 1))) {
      for (auto& s : Tokenize(line)) sentences.push_back(std::move(s));
    }
  }
  const ResourceBundle bundle = BuildResources(in);
  SaveResources(bundle, f.out);
  json summary;
  summary["out"] = f.out;
  summary["ppdb_entries"] = bundle.ppdb.size();
  summary["ppdb_malformed"] = bundle.ppdb.malformed();
  summary["synsets"] = bundle.wordnet ? bundle.wordnet->synsets().size() : 0;
  summary["spell_words"] = bundle.spell ? bundle.spell->words().size() : 0;
  json typos = json::object();
  for (const auto& [cls, lex] : bundle.typos) typos[cls] = lex.size();
  summary["typo_entries"] = typos;
  std::cout << summary.dump(2) << '\n';
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"parchoice: paraphrase-based author obfuscation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PARCHOICE_VERSION);

  BuildFlags build;
  auto* cmd_build = app.add_subcommand("build-resources", "Build and persist resource caches");
  cmd_build->add_option("--tagged-corpus", build.tagged_corpus, "word/TAG training corpus")
      ->required();
  cmd_build->add_option("--ppdb", build.ppdb, "PPDB release file");
  cmd_build->add_option("--wordnet", build.wordnet, "Synset TSV");
  cmd_build->add_option("--spell", build.spell, "Spelling word list (word<TAB>frequency)");
  cmd_build->add_option("--typo-corpus", build.typo_corpora,
                        "CLASS=PATH corpus for a target-class typo lexicon");
  cmd_build->add_option("--typo-max-dist", build.typo_max_dist, "Typo edit distance")
      ->check(CLI::Range(1, 3));
  cmd_build->add_flag("--strict", build.strict, "Fail on the first malformed line");
  cmd_build->add_option("--out", build.out, "Resource directory")->required();

  CommonFlags tf;
  std::string task = "sentence-transfer";
  std::string source, target;
  GaParams ga;
  size_t train_per_author = 12;
  auto* cmd_transform = app.add_subcommand("transform", "Transform a corpus and report");
  AddCommon(cmd_transform, &tf);
  cmd_transform->add_option("--task", task, "Task kind")
      ->check(CLI::IsMember({"sentence-transfer", "multiclass-imitation", "document-ga"}));
  cmd_transform->add_option("--source", source, "Source class");
  cmd_transform->add_option("--target", target, "Target class");
  cmd_transform->add_option("--ga-iterations", ga.max_iterations, "GA iterations");
  cmd_transform->add_option("--ga-runs", ga.runs_per_iteration, "Children per survivor")
      ->check(CLI::PositiveNumber);
  cmd_transform->add_option("--survivors", ga.survivors, "Survivors kept per iteration")
      ->check(CLI::PositiveNumber);
  double meteor_weight = ga.meteor_weight;
  cmd_transform->add_option("--meteor-weight", meteor_weight, "GA METEOR weight")
      ->check(CLI::Range(0.0, 1.0));
  cmd_transform->add_option("--train-per-author", train_per_author,
                            "Training documents per author")
      ->check(CLI::PositiveNumber);

  CommonFlags af;
  std::string adv_profiler = "lr";
  double adv_fraction = 1.0;
  auto* cmd_adv = app.add_subcommand("adv-train", "Adversarial retraining experiment");
  AddCommon(cmd_adv, &af);
  cmd_adv->add_option("--profiler", adv_profiler, "Profiler kind to retrain");
  cmd_adv->add_option("--adv-fraction", adv_fraction,
                      "Fraction of training sentences transformed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*cmd_build) return RunBuildResources(build);
    if (*cmd_transform) {
      const TaskKind kind = ParseTaskKind(task);
      if (kind == TaskKind::kDocumentGa) {
        ga.meteor_weight = meteor_weight;
        ga.prob_weight = 1.0 - meteor_weight;
        return RunDocumentTask(tf, ga, train_per_author);
      }
      return RunSentenceTask(kind, tf, source, target);
    }
    if (*cmd_adv) return RunAdvTrain(af, adv_profiler, adv_fraction);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ResourceError(e.what()).exit_code();
  }
  return 0;
}

}  // namespace
}  // namespace parchoice

int main(int argc, char** argv) { return parchoice::Main(argc, argv); }

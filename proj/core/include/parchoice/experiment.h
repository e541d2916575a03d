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

// Experiment drivers behind the command-line tool and their JSON reports.

#ifndef PARCHOICE_EXPERIMENT_H_
#define PARCHOICE_EXPERIMENT_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parchoice/corpus.h"
#include "parchoice/engine.h"
#include "parchoice/profiler.h"
#include "parchoice/resources.h"

namespace parchoice {

enum class TaskKind { kSentenceTransfer, kMulticlassImitation, kDocumentGa, kAdvTrain };
std::string TaskKindName(TaskKind kind);
TaskKind ParseTaskKind(const std::string& name);  // TaskError when unknown

struct ExperimentSettings {
  GenerationCaps caps;
  GaParams ga;
  SelectionMode mode = SelectionMode::kTargeted;
  double surrogate_split = 0.15;
  bool query_access = false;
  uint64_t seed = 0;
  std::vector<ProfilerKind> evaluators = {ProfilerKind::kUnigramLr,
                                          ProfilerKind::kWriteprintsMlp};
  ProfilerKind adv_kind = ProfilerKind::kUnigramLr;
  // Fraction of each class's evaluator-training sentences transformed for
  // adversarial retraining.
  double adv_fraction = 1.0;
  TrainOptions train;
};

// Throws TaskError for out-of-range settings.
void ValidateSettings(const ExperimentSettings& settings);

// Profilers for a sentence-level corpus. Training sentences are split with
// a seeded shuffle per class: `surrogate_split` of them train the
// surrogate, the rest the evaluation profilers.
struct SentenceExperiment {
  std::vector<std::string> classes;
  Dataset surrogate_train;
  Dataset eval_train;
  Dataset test;
  std::unique_ptr<Profiler> surrogate;  // null with query access
  std::map<ProfilerKind, std::unique_ptr<Profiler>> evaluators;

  const Profiler& Surrogate(const ExperimentSettings& s) const;
};

SentenceExperiment PrepareSentenceExperiment(const SentenceCorpus& corpus,
                                             const ResourceBundle& resources,
                                             const ExperimentSettings& settings);

struct ProfilerScores {
  double original = 0;
  double transformed = 0;
  double decrease = 0;
};

struct DirectionResult {
  std::string source;
  std::string target;
  std::map<ProfilerKind, ProfilerScores> scores;
  // Share of transformed sentences the evaluators assign to the target.
  std::map<ProfilerKind, double> target_rate;
  double meteor_mean = 0;
  double transformed_sentence_rate = 0;
  std::vector<std::string> originals;
  std::vector<std::string> transformed;
};

// Transforms each line (split into sentences) toward `target`.
std::vector<std::string> TransformLines(const std::vector<std::string>& lines,
                                        const ResourceBundle& resources,
                                        const ExperimentSettings& settings,
                                        const Profiler* surrogate,
                                        const std::string& source,
                                        const std::string& target,
                                        uint64_t seed);

// Transforms the source-class test sentences and scores every evaluator.
DirectionResult RunDirection(const SentenceExperiment& experiment,
                             const ResourceBundle& resources,
                             const ExperimentSettings& settings,
                             const std::string& source, const std::string& target);

struct AdvTrainResult {
  double before_original = 0;
  double before_transformed = 0;
  double after_original = 0;
  double after_transformed = 0;
  size_t transformed_train = 0;
};

// Every class is transformed toward the next class in sorted order (the
// other class in two-class tasks).
AdvTrainResult RunAdversarialTraining(const SentenceExperiment& experiment,
                                      const ResourceBundle& resources,
                                      const ExperimentSettings& settings);

struct DocumentGaResult {
  double original_accuracy = 0;
  double transformed_accuracy = 0;
  double success_rate = 0;  // over originally correct documents
  double transformed_sentence_rate = 0;
  double meteor_mean = 0;
  size_t originally_correct = 0;
  std::vector<TransformResult> documents;
};

// Trains a Writeprints MLP on the training documents when `profiler` is
// null and searches every test document with query access to it.
DocumentGaResult RunDocumentGa(const DocumentCorpus& corpus,
                               const ResourceBundle& resources,
                               const ExperimentSettings& settings,
                               const Profiler* profiler = nullptr);

nlohmann::json SettingsJson(const ExperimentSettings& settings);
nlohmann::json DirectionJson(const DirectionResult& result);
nlohmann::json AdvTrainJson(const AdvTrainResult& result);
nlohmann::json DocumentGaJson(const DocumentGaResult& result);

// Aligned text tables for a report produced by the command-line tool.
std::string FormatTable(const nlohmann::json& report);

}  // namespace parchoice

#endif  // PARCHOICE_EXPERIMENT_H_

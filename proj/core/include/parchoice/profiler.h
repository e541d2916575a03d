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

// Author profilers: unigram logistic regression and a Writeprints MLP.

#ifndef PARCHOICE_PROFILER_H_
#define PARCHOICE_PROFILER_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parchoice/tagger.h"
#include "parchoice/writeprints.h"

namespace parchoice {

struct LabeledText {
  std::string text;
  size_t label = 0;
  // Index of the training example this one was transformed from.
  std::optional<size_t> origin;
};

struct Dataset {
  std::vector<std::string> classes;
  std::vector<LabeledText> examples;
};

enum class ProfilerKind { kUnigramLr, kWriteprintsMlp };
std::string ProfilerKindName(ProfilerKind kind);
// Throws TaskError for unknown names.
ProfilerKind ParseProfilerKind(const std::string& name);

class Profiler {
 public:
  virtual ~Profiler() = default;
  virtual ProfilerKind kind() const = 0;
  const std::vector<std::string>& classes() const { return classes_; }
  // Throws TaskError when the label is not a class of this model.
  size_t ClassIndex(const std::string& label) const;

  virtual std::vector<double> PredictProba(const std::string& text) const = 0;
  // Probabilities for the text made of these sentences in order.
  virtual std::vector<double> PredictProbaSentences(
      const std::vector<std::string>& sentences) const;
  // Argmax; ties go to the lower class index.
  size_t Predict(const std::string& text) const;

  // `parchoice-model-v1`, kind, classes, then the kind-specific body.
  virtual void Save(std::ostream& out) const = 0;

 protected:
  std::vector<std::string> classes_;
};

size_t Argmax(const std::vector<double>& values);

struct LrParams {
  double l2 = 1e-4;
  int epochs = 20;
  double learning_rate = 0.1;  // epoch t uses learning_rate / t
  uint64_t seed = 0;
};

// Lowercased token counts over a vocabulary; unknown tokens are ignored.
std::map<size_t, double> FeaturizeUnigram(
    const std::string& text, const std::map<std::string, size_t>& vocabulary);

// Multinomial logistic regression over word unigram counts, trained by
// per-example gradient steps in a seeded order. An epoch that would raise
// the training loss is retried with half the step size, and skipped if it
// still does.
class LogRegProfiler : public Profiler {
 public:
  // Throws TaskError unless there are at least two classes, each with
  // examples. `loss_history` receives the loss before training and after
  // every epoch.
  static LogRegProfiler Train(const Dataset& data, const LrParams& params = {},
                              std::vector<double>* loss_history = nullptr);

  ProfilerKind kind() const override { return ProfilerKind::kUnigramLr; }
  std::vector<double> PredictProba(const std::string& text) const override;
  std::vector<double> PredictProbaFeatures(const std::map<size_t, double>& x) const;
  // Mean cross-entropy plus l2/2 times the squared weight norm.
  double Loss(const Dataset& data, double l2) const;
  void Save(std::ostream& out) const override;
  static LogRegProfiler LoadBody(std::istream& in, std::vector<std::string> classes,
                                 const std::string& name);

  const std::map<std::string, size_t>& vocabulary() const { return vocabulary_; }

 private:
  std::map<std::string, size_t> vocabulary_;
  std::vector<std::vector<double>> weights_;  // classes x vocabulary
  std::vector<double> bias_;
};

// One ReLU hidden layer and a softmax output over dense inputs. Parameters
// are flattened as W1 (hidden x inputs, row-major), b1, W2 (outputs x
// hidden, row-major), b2.
class MlpNetwork {
 public:
  MlpNetwork() = default;
  // Glorot-uniform weights from `seed`, zero biases.
  MlpNetwork(size_t inputs, size_t hidden, size_t outputs, uint64_t seed);

  size_t inputs() const { return inputs_; }
  size_t hidden() const { return hidden_; }
  size_t outputs() const { return outputs_; }
  const std::vector<double>& parameters() const { return params_; }
  void set_parameters(std::vector<double> p);

  std::vector<double> Probabilities(const std::vector<double>& x) const;
  // Mean cross-entropy over the rows.
  double Loss(const std::vector<std::vector<double>>& x,
              const std::vector<size_t>& y) const;
  // Gradient of Loss with respect to parameters().
  std::vector<double> Gradient(const std::vector<std::vector<double>>& x,
                               const std::vector<size_t>& y) const;
  void Step(const std::vector<std::vector<double>>& x,
            const std::vector<size_t>& y, double learning_rate);

 private:
  size_t inputs_ = 0;
  size_t hidden_ = 0;
  size_t outputs_ = 0;
  std::vector<double> params_;
};

struct MlpParams {
  size_t hidden = 100;
  int epochs = 200;
  double learning_rate = 0.01;
  size_t batch_size = 1;
  uint64_t seed = 0;
  size_t top_ngrams = 50;
};

// Writeprints features, standardized with training mean and deviation,
// into an MlpNetwork. Sentence feature counts are cached by sentence text.
class WriteprintsMlpProfiler : public Profiler {
 public:
  static WriteprintsMlpProfiler Train(const Dataset& data,
                                      std::shared_ptr<const TaggerModel> tagger,
                                      const MlpParams& params = {});

  WriteprintsMlpProfiler(const WriteprintsMlpProfiler& other);
  WriteprintsMlpProfiler(WriteprintsMlpProfiler&&) noexcept;
  ~WriteprintsMlpProfiler() override;

  ProfilerKind kind() const override { return ProfilerKind::kWriteprintsMlp; }
  std::vector<double> PredictProba(const std::string& text) const override;
  std::vector<double> PredictProbaSentences(
      const std::vector<std::string>& sentences) const override;
  std::vector<double> PredictProbaVector(const std::vector<double>& features) const;
  void Save(std::ostream& out) const override;
  static WriteprintsMlpProfiler LoadBody(std::istream& in,
                                         std::vector<std::string> classes,
                                         std::shared_ptr<const TaggerModel> tagger,
                                         const std::string& name);

  const WriteprintsExtractor& extractor() const { return *extractor_; }
  const MlpNetwork& network() const { return network_; }

 private:
  struct Cache;
  WriteprintsMlpProfiler();
  std::vector<double> Standardize(const std::vector<double>& v) const;

  std::unique_ptr<WriteprintsExtractor> extractor_;
  std::vector<double> mean_;
  std::vector<double> scale_;
  MlpNetwork network_;
  std::unique_ptr<Cache> cache_;
};

// Reads any saved profiler. The tagger is required for Writeprints models.
std::unique_ptr<Profiler> LoadProfiler(std::istream& in,
                                       std::shared_ptr<const TaggerModel> tagger,
                                       const std::string& name = "model");

struct TrainOptions {
  LrParams lr;
  MlpParams mlp;
  std::shared_ptr<const TaggerModel> tagger;
};

std::unique_ptr<Profiler> TrainProfiler(ProfilerKind kind, const Dataset& data,
                                        const TrainOptions& options);

struct AccuracyReport {
  double accuracy = 0;
  std::vector<size_t> correct;  // per class
  std::vector<size_t> total;
  double ClassAccuracy(size_t c) const;
};

// Throws TaskError on an empty dataset.
AccuracyReport EvaluateAccuracy(const Profiler& model, const Dataset& data);

double AccuracyDecrease(double original, double transformed);

// Trains from scratch on train + transformed. Every transformed example
// must name its origin in `train` and carry the same label.
std::unique_ptr<Profiler> AdversarialRetrain(ProfilerKind kind,
                                             const Dataset& train,
                                             const Dataset& transformed,
                                             const TrainOptions& options);

}  // namespace parchoice

#endif  // PARCHOICE_PROFILER_H_

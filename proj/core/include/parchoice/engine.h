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

// Candidate generation, surrogate-guided selection and the document-level
// genetic search.

#ifndef PARCHOICE_ENGINE_H_
#define PARCHOICE_ENGINE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parchoice/profiler.h"
#include "parchoice/random.h"
#include "parchoice/resources.h"
#include "parchoice/text.h"

namespace parchoice {

struct GenerationCaps {
  size_t edit_cap = 10;
  size_t subs_cap = 1000;  // PPDB + WordNet applications per sentence
  size_t beam = 1000;
};

struct GenerationStats {
  // Candidate pool size after each stage, in stage order.
  std::vector<std::pair<std::string, size_t>> stage_sizes;
  size_t substitutions = 0;  // PPDB + WordNet applications
};

// Stages: grammar, simple, PPDB, WordNet, simple, typos. After each stage
// the pool is deduplicated by surface sequence, pruned to the edit cap,
// ordered by (edits, text) and cut to the beam. The original sentence is
// always the first element. Typos use the lexicon of `target_class` when
// the bundle has one.
std::vector<CandidateSentence> GenerateCandidates(
    const Sentence& sentence, const ResourceBundle& resources,
    const GenerationCaps& caps = {}, const std::string& target_class = {},
    GenerationStats* stats = nullptr);

// Index maximizing p(target) - p(source); ties go to fewer edits, then the
// smaller text. Throws TaskError for unknown or equal classes.
size_t SelectSentence(const std::vector<CandidateSentence>& candidates,
                      const Profiler& surrogate, const std::string& source,
                      const std::string& target, double* score = nullptr);

enum class SelectionMode { kTargeted, kRandom };

struct SentenceOutcome {
  CandidateSentence chosen;
  size_t candidate_count = 0;
  double score = 0;  // p(target) - p(source) of the choice; 0 in random mode
  bool changed = false;
};

struct TransformResult {
  Document original;
  Document document;
  std::vector<SentenceOutcome> sentences;
  // Document search only.
  bool already_misclassified = false;
  bool misclassified = false;
  size_t iterations = 0;
  std::vector<double> best_fitness;  // per iteration, after selection
};

struct SentencewiseOptions {
  SelectionMode mode = SelectionMode::kTargeted;
  std::string source;
  std::string target;
  uint64_t seed = 0;
};

// In random mode draws one candidate index per sentence in sentence order;
// the surrogate may then be null.
TransformResult TransformDocumentSentencewise(const Document& doc,
                                              const ResourceBundle& resources,
                                              const GenerationCaps& caps,
                                              const Profiler* surrogate,
                                              const SentencewiseOptions& options);

struct GaParams {
  size_t runs_per_iteration = 100;
  size_t max_iterations = 25;
  double meteor_weight = 0.25;
  double prob_weight = 0.75;
  size_t survivors = 5;
  uint64_t seed = 0;
};

// Throws TaskError unless the weights are non-negative and sum to 1.
void ValidateGaParams(const GaParams& params);

// Sentence candidates are generated once per original sentence. Each child
// copies a survivor and swaps one uniformly drawn sentence for a uniformly
// drawn candidate of that original sentence (draw order: sentence, then
// candidate). Fitness = prob_weight (1 - p(true)) + meteor_weight
// METEOR(child, original). The search stops once some evaluated document
// is misclassified; the best misclassified document is returned if any,
// else the fittest one.
TransformResult TransformDocumentGa(const Document& doc,
                                    const ResourceBundle& resources,
                                    const GenerationCaps& caps,
                                    const Profiler& profiler,
                                    const std::string& true_class,
                                    const GaParams& params,
                                    const std::string& typo_class = {});

// Fraction of sentences whose final text differs from the original.
double TransformedSentenceRate(const TransformResult& result);

// Document text: sentence texts joined by single spaces.
std::string DocumentText(const Document& doc);

}  // namespace parchoice

#endif  // PARCHOICE_ENGINE_H_

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

// METEOR with exact, stem and synonym unigram matching.

#ifndef PARCHOICE_METEOR_H_
#define PARCHOICE_METEOR_H_

#include <string>
#include <vector>

#include "parchoice/lemmatizer.h"
#include "parchoice/wordnet.h"

namespace parchoice {

enum class MatchStage { kExact, kStem, kSynonym };

struct AlignedPair {
  size_t candidate;
  size_t reference;
  MatchStage stage;
  friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

struct Alignment {
  std::vector<AlignedPair> pairs;  // sorted by candidate index
  size_t chunks = 0;
};

struct MeteorResources {
  const Lemmatizer* stemmer = &Lemmatizer::Default();
  const WordNet* wordnet = nullptr;  // null disables the synonym stage
};

struct MeteorDetail {
  size_t matches = 0;
  size_t chunks = 0;
  double precision = 0;
  double recall = 0;
  double fmean = 0;
  double penalty = 0;
  double score = 0;
};

// Greedy staged alignment over lowercased tokens. Each stage matches the
// still-unaligned words, preferring a reference word that extends the chunk
// of the previous candidate word, then the first reference word after the
// last alignment, then the first one available.
Alignment Align(const std::vector<std::string>& candidate,
                const std::vector<std::string>& reference,
                const MeteorResources& resources = {});

// Fmean = 10PR / (R + 9P), penalty = 0.5 (chunks / matches)^3,
// score = Fmean (1 - penalty); 0 without matches.
MeteorDetail MeteorDetails(const std::string& candidate,
                           const std::string& reference,
                           const MeteorResources& resources = {});
double MeteorScore(const std::string& candidate, const std::string& reference,
                   const MeteorResources& resources = {});

}  // namespace parchoice

#endif  // PARCHOICE_METEOR_H_

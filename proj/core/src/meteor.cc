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

#include "parchoice/meteor.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace parchoice {
namespace {

std::vector<std::string> LowerTokens(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& s : Tokenize(text)) {
    for (const auto& t : s.tokens) out.push_back(ToLower(t.surface));
  }
  return out;
}

std::set<const Synset*> SynsetsOf(const std::string& word, const std::string& stem,
                                  const WordNet& wn) {
  std::set<const Synset*> out;
  for (char pos : {'n', 'v', 'a', 'r'}) {
    for (const Synset* s : wn.Lookup(word, pos)) out.insert(s);
    for (const Synset* s : wn.Lookup(stem, pos)) out.insert(s);
  }
  return out;
}

}  // namespace

Alignment Align(const std::vector<std::string>& candidate,
                const std::vector<std::string>& reference,
                const MeteorResources& resources) {
  const Lemmatizer& stemmer = resources.stemmer ? *resources.stemmer : Lemmatizer::Default();
  std::vector<std::string> cstem, rstem;
  for (const auto& w : candidate) cstem.push_back(stemmer.Stem(w));
  for (const auto& w : reference) rstem.push_back(stemmer.Stem(w));
  std::vector<std::set<const Synset*>> csyn, rsyn;
  if (resources.wordnet) {
    for (size_t i = 0; i < candidate.size(); ++i) {
      csyn.push_back(SynsetsOf(candidate[i], cstem[i], *resources.wordnet));
    }
    for (size_t j = 0; j < reference.size(); ++j) {
      rsyn.push_back(SynsetsOf(reference[j], rstem[j], *resources.wordnet));
    }
  }

  auto matches = [&](MatchStage stage, size_t i, size_t j) {
    switch (stage) {
      case MatchStage::kExact:
        return candidate[i] == reference[j];
      case MatchStage::kStem:
        return cstem[i] == rstem[j];
      case MatchStage::kSynonym:
        for (const Synset* s : csyn[i]) {
          if (rsyn[j].contains(s)) return true;
        }
        return false;
    }
    return false;
  };

  const size_t none = static_cast<size_t>(-1);
  std::vector<size_t> c2r(candidate.size(), none);
  std::vector<bool> rused(reference.size(), false);
  std::vector<MatchStage> stage_of(candidate.size(), MatchStage::kExact);
  std::vector<MatchStage> stages = {MatchStage::kExact, MatchStage::kStem};
  if (resources.wordnet) stages.push_back(MatchStage::kSynonym);

  for (MatchStage stage : stages) {
    for (size_t i = 0; i < candidate.size(); ++i) {
      if (c2r[i] != none) continue;
      size_t last = none;
      for (size_t k = i; k-- > 0;) {
        if (c2r[k] != none) {
          last = c2r[k];
          break;
        }
      }
      size_t pick = none;
      if (i > 0 && c2r[i - 1] != none && c2r[i - 1] + 1 < reference.size() &&
          !rused[c2r[i - 1] + 1] && matches(stage, i, c2r[i - 1] + 1)) {
        pick = c2r[i - 1] + 1;
      }
      for (size_t j = last == none ? 0 : last + 1; pick == none && j < reference.size(); ++j) {
        if (!rused[j] && matches(stage, i, j)) pick = j;
      }
      for (size_t j = 0; pick == none && j < reference.size(); ++j) {
        if (!rused[j] && matches(stage, i, j)) pick = j;
      }
      if (pick != none) {
        c2r[i] = pick;
        rused[pick] = true;
        stage_of[i] = stage;
      }
    }
  }

  Alignment a;
  for (size_t i = 0; i < candidate.size(); ++i) {
    if (c2r[i] != none) a.pairs.push_back({i, c2r[i], stage_of[i]});
  }
  for (size_t k = 0; k < a.pairs.size(); ++k) {
    const bool continues = k > 0 && a.pairs[k].candidate == a.pairs[k - 1].candidate + 1 &&
                           a.pairs[k].reference == a.pairs[k - 1].reference + 1;
    if (!continues) ++a.chunks;
  }
  return a;
}

MeteorDetail MeteorDetails(const std::string& candidate, const std::string& reference,
                           const MeteorResources& resources) {
  const auto c = LowerTokens(candidate);
  const auto r = LowerTokens(reference);
  MeteorDetail d;
  if (c.empty() || r.empty()) return d;
  const Alignment a = Align(c, r, resources);
  d.matches = a.pairs.size();
  d.chunks = a.chunks;
  if (d.matches == 0) return d;
  const double m = static_cast<double>(d.matches);
  d.precision = m / static_cast<double>(c.size());
  d.recall = m / static_cast<double>(r.size());
  d.fmean = 10 * d.precision * d.recall / (d.recall + 9 * d.precision);
  d.penalty = 0.5 * std::pow(static_cast<double>(d.chunks) / m, 3);
  d.score = d.fmean * (1 - d.penalty);
  return d;
}

double MeteorScore(const std::string& candidate, const std::string& reference,
                   const MeteorResources& resources) {
  return MeteorDetails(candidate, reference, resources).score;
}

}  // namespace parchoice

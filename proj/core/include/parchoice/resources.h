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

// Everything candidate generation needs, built once and shared read-only.

#ifndef PARCHOICE_RESOURCES_H_
#define PARCHOICE_RESOURCES_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parchoice/inflection.h"
#include "parchoice/lemmatizer.h"
#include "parchoice/ppdb.h"
#include "parchoice/rules.h"
#include "parchoice/tagger.h"
#include "parchoice/typos.h"
#include "parchoice/wordnet.h"

namespace parchoice {

struct ResourceBundle {
  std::shared_ptr<const TaggerModel> tagger;
  std::shared_ptr<const Lemmatizer> lemmatizer;
  InflectionTable inflections;
  PpdbLexicon ppdb;
  std::optional<WordNet> wordnet;
  std::optional<SpellLexicon> spell;
  std::map<std::string, TypoLexicon> typos;  // by target class

  Morphology morphology() const;
  const TypoLexicon* TyposFor(const std::string& target_class) const;
};

struct ResourceInputs {
  std::string tagged_corpus;  // required
  std::string ppdb;           // optional paths, empty when absent
  std::string wordnet;
  std::string spell;
  // Target-class corpora the typo lexicons are mined from.
  std::map<std::string, std::vector<Sentence>> typo_corpora;
  int typo_max_dist = 2;
  bool strict = false;
};

// Trains the tagger, builds the inflection table with a lemmatizer that
// prefers WordNet and corpus base-form lemmas, and loads the lexicons.
ResourceBundle BuildResources(const ResourceInputs& inputs);

// Convenience for in-memory fixtures: tagger and inflections from a tagged
// corpus, with the lemmatizer primed like BuildResources does.
ResourceBundle BuildResources(const TaggedCorpus& corpus,
                              std::optional<WordNet> wordnet = std::nullopt);

// Files: tagger.model, lemmas.txt, inflections.tsv, ppdb.cache, wordnet.tsv,
// spell.tsv and typos.<class>.tsv. Only present parts are written.
void SaveResources(const ResourceBundle& bundle, const std::string& dir);
// Throws ResourceError when the directory or tagger.model is missing.
ResourceBundle LoadResources(const std::string& dir);

// `flag` when non-empty, else $PARCHOICE_RESOURCES; ResourceError if neither.
std::string ResolveResourceDir(const std::string& flag);

}  // namespace parchoice

#endif  // PARCHOICE_RESOURCES_H_

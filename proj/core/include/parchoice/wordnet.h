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

// Synset lexicon, simple Lesk disambiguation and inflected synonym sites.

#ifndef PARCHOICE_WORDNET_H_
#define PARCHOICE_WORDNET_H_

#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "parchoice/inflection.h"
#include "parchoice/lemmatizer.h"
#include "parchoice/sites.h"
#include "parchoice/text.h"

namespace parchoice {

struct Synset {
  std::string id;
  char pos = 'n';                    // n v a r
  std::vector<std::string> lemmas;   // file order, underscores for spaces
  std::string gloss;
  friend bool operator==(const Synset&, const Synset&) = default;
};

class WordNet {
 public:
  // Synsets containing (lemma, pos), in file order.
  std::vector<const Synset*> Lookup(const std::string& lemma, char pos) const;
  const std::vector<Synset>& synsets() const { return synsets_; }
  size_t duplicate_warnings() const { return duplicates_; }
  // Every lemma of every synset, lowercased, underscores kept.
  std::unordered_set<std::string> Lemmas() const;

  // Canonical TSV: `id<TAB>pos<TAB>lemma,lemma<TAB>gloss`. Satellite
  // adjectives (pos s) load as a. A repeated id replaces the earlier synset
  // in place and counts a warning. Throws FormatError on schema violations
  // and ResourceError on an empty lexicon.
  static WordNet Parse(std::istream& in, const std::string& name = "wordnet");
  static WordNet Load(const std::string& path);
  void Save(std::ostream& out) const;

 private:
  void Index();
  std::vector<Synset> synsets_;
  std::map<std::pair<std::string, char>, std::vector<size_t>> index_;
  size_t duplicates_ = 0;
};

// NN* -> n, VB* -> v, JJ* -> a, RB* -> r, otherwise '\0'.
char WordNetPos(std::string_view tag);

const std::unordered_set<std::string>& Stopwords();

// Synset whose gloss shares the most distinct content words with the rest
// of the sentence; ties go to the earliest synset. `index` is the
// position of the target token.
const Synset& LeskDisambiguate(const TokenSeq& sentence, size_t index,
                               const std::vector<const Synset*>& synsets);

// Synonym options for content tokens. Each synonym is inflected to the
// token's tag through the inflection table (multiword lemmas inflect their
// head word); synonyms without an inflection are skipped.
std::vector<RuleSite> WordNetSites(const TokenSeq& tokens, const WordNet& wordnet,
                                   const InflectionTable& inflections,
                                   const Lemmatizer& lemmatizer =
                                       Lemmatizer::Default());

}  // namespace parchoice

#endif  // PARCHOICE_WORDNET_H_

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

#ifndef PARCHOICE_LEMMATIZER_H_
#define PARCHOICE_LEMMATIZER_H_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "parchoice/text.h"

namespace parchoice {

struct VerbForms {
  std::string lemma;
  std::string past;
  std::string participle;
};

// Irregular verb and noun forms. Verb file lines: `lemma<TAB>past<TAB>
// participle`; noun file lines: `lemma<TAB>plural`. '#' starts a comment.
class IrregularForms {
 public:
  static IrregularForms Parse(std::istream& verbs, std::istream& nouns,
                              const std::string& name = "irregular forms");
  static const IrregularForms& Default();

  const VerbForms* Verb(std::string_view lemma) const;
  // Lemma for an irregular past tense / past participle, or empty.
  std::string LemmaOfPast(std::string_view past) const;
  std::string LemmaOfParticiple(std::string_view participle) const;
  std::string LemmaOfPlural(std::string_view plural) const;
  std::string Plural(std::string_view lemma) const;

  const std::vector<VerbForms>& verbs() const { return verbs_; }

 private:
  std::vector<VerbForms> verbs_;
  std::map<std::string, size_t, std::less<>> by_lemma_;
  std::map<std::string, std::string, std::less<>> past_to_lemma_;
  std::map<std::string, std::string, std::less<>> participle_to_lemma_;
  std::map<std::string, std::string, std::less<>> plural_to_lemma_;
  std::map<std::string, std::string, std::less<>> lemma_to_plural_;
};

// Rule-based English de-inflection with an irregular-form exception list.
// Only nouns, verbs, adjectives and adverbs are de-inflected; everything
// else maps to its lowercased surface.
class Lemmatizer {
 public:
  Lemmatizer();
  explicit Lemmatizer(IrregularForms forms);

  // Lemmas the lemmatizer prefers when a rule has several readings, e.g.
  // "baked" -> {"bak", "bake"}. Typically WordNet lemmas plus base forms
  // seen in a tagged corpus.
  void SetKnownLemmas(std::unordered_set<std::string> known);
  const std::unordered_set<std::string>& known_lemmas() const { return known_; }

  std::string Lemmatize(std::string_view surface, std::string_view tag) const;
  std::string Lemmatize(const Token& token) const {
    return Lemmatize(token.surface, token.tag);
  }

  // Tag-free stem: tries the verb, noun and comparative readings in turn.
  std::string Stem(std::string_view word) const;

  const IrregularForms& forms() const { return forms_; }

  static const Lemmatizer& Default();

 private:
  std::string Choose(const std::vector<std::string>& candidates) const;
  std::vector<std::string> StemCandidates(const std::string& stem) const;

  IrregularForms forms_;
  std::unordered_set<std::string> known_;
};

// Lemmatizes with the default (embedded) exception lists.
std::string Lemmatize(const Token& token);

}  // namespace parchoice

#endif  // PARCHOICE_LEMMATIZER_H_

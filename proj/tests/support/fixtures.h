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

// Synthetic corpora and hand-built resource bundles shared by the unit
// tests, the acceptance runner and the benchmarks.

#ifndef PARCHOICE_TESTS_SUPPORT_FIXTURES_H_
#define PARCHOICE_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parchoice/corpus.h"
#include "parchoice/random.h"
#include "parchoice/resources.h"
#include "parchoice/text.h"
#include "parchoice/typos.h"

namespace parchoice::fixtures {

// "John/NNP saw/VBD Mary/NNP ./." -> tagged sentence.
Sentence Tagged(const std::string& notation);
std::string Notation(const Sentence& sentence);

// Small hand-tagged corpus covering the grammar and PPDB example material.
TaggedCorpus ExampleTaggedCorpus();
// The four example PPDB rows in release format.
std::string ExamplePpdbText();
// Tagger trained on ExampleTaggedCorpus plus the example PPDB rows.
ResourceBundle ExampleBundle();

// Two-class template corpus. Class "A" and class "B" share templates and
// differ in marker words that the fixture PPDB/WordNet can swap, plus one
// residual cue word per class that no resource covers.
struct StyleFixture {
  SentenceCorpus corpus;
  ResourceBundle resources;
  std::vector<std::pair<std::string, std::string>> marker_pairs;  // (A, B)
  std::pair<std::string, std::string> residual_cues;
};
std::string StylePpdbText();
std::string StyleWordNetText();
Sentence StyleSentence(bool class_a, Rng& rng);
StyleFixture MakeStyleFixture(size_t train_per_class = 2000, size_t test_per_class = 500,
                              uint64_t seed = 1);

// Ten authors, fifteen documents each. Every document holds one signal
// sentence with the author's marker function word; a single PPDB entry
// replaces each marker with a word no author uses.
struct DocumentFixture {
  DocumentCorpus corpus;
  ResourceBundle resources;
  std::vector<std::string> markers;  // by author index
};
DocumentFixture MakeDocumentFixture(uint64_t seed = 1, size_t docs_per_author = 15,
                                    size_t sentences_per_doc = 6);

// Spell list plus a corpus of roughly `tokens` tokens with injected
// misspellings and contractions.
struct TypoFixture {
  SpellLexicon spell;
  std::vector<Sentence> corpus;
};
TypoFixture MakeTypoFixture(size_t tokens = 10000, uint64_t seed = 1);

// Mixed template sentences and word salad over the style vocabulary.
std::vector<std::string> FuzzSentences(size_t count, uint64_t seed);

// Style bundle extended with a spell lexicon and typo lexicons so every
// generation stage has material.
ResourceBundle FullBundle(const StyleFixture& style, const TypoFixture& typos);

}  // namespace parchoice::fixtures

#endif  // PARCHOICE_TESTS_SUPPORT_FIXTURES_H_

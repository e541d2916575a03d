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

// Hand-written paraphrase rules: optional commas, contractions, indefinite
// pronoun variants, modal auxiliary groups, and shallow-structure
// grammatical transformations (voice, negation wrapping, polar questions).

#ifndef PARCHOICE_RULES_H_
#define PARCHOICE_RULES_H_

#include <optional>
#include <vector>

#include "parchoice/inflection.h"
#include "parchoice/lemmatizer.h"
#include "parchoice/sites.h"
#include "parchoice/text.h"

namespace parchoice {

// Morphology needed to re-inflect verbs when a rule moves them around.
struct Morphology {
  const Lemmatizer* lemmatizer = &Lemmatizer::Default();
  const InflectionTable* inflections = nullptr;

  std::string LemmaOf(const Token& token) const;
  // Irregular list first, then the inflection table; absent otherwise.
  std::optional<std::string> Participle(const std::string& lemma) const;
  // Irregular list / table first, then the regular -ed rule.
  std::string Past(const std::string& lemma) const;
  // Table first, then the regular -s/-es/-ies rule.
  std::string ThirdPersonSingular(const std::string& lemma) const;
};

// Sites for comma removal, contraction pairs, indefinite pronoun variants
// and modal auxiliary groups. Requires a tagged sentence.
std::vector<RuleSite> SimpleRuleSites(const Sentence& sentence);
std::vector<RuleSite> SimpleRuleSites(const TokenSeq& tokens);

// "John saw Mary." -> "Mary was seen by John." Absent unless the sentence is
// a single clause NP VP NP with one finite verb group.
std::optional<CandidateSentence> Passivize(const TokenSeq& tokens,
                                           const Morphology& morphology);

// "John didn't see Mary." -> "I don't think (that) John saw Mary." Emits the
// variants with and without "that"; empty unless negated at the first
// finite verb. Questions are excluded.
std::vector<CandidateSentence> NegationWrap(const TokenSeq& tokens,
                                            const Morphology& morphology);

// "Did John see Mary?" -> "Is it (true) that John saw Mary?" For negative
// questions also "Is it not (true) that ..." and "Isn't it (true) that ..."
// over the affirmed declarative.
std::vector<CandidateSentence> QuestionRewrite(const TokenSeq& tokens,
                                               const Morphology& morphology);

// All grammatical transformations of a tagged sentence, including negation
// wrapping of its passive variant. Each candidate carries one "grammar"
// trace step per rule applied (two for a wrapped passive); edit distances
// are left at 0 for the caller to fill.
std::vector<CandidateSentence> GrammarCandidates(const TokenSeq& tokens,
                                                 const Morphology& morphology);

bool IsNegation(std::string_view surface);

}  // namespace parchoice

#endif  // PARCHOICE_RULES_H_

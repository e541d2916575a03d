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

// Static Writeprints stylometric features.

#ifndef PARCHOICE_WRITEPRINTS_H_
#define PARCHOICE_WRITEPRINTS_H_

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "parchoice/tagger.h"

namespace parchoice {

// Feature layout chosen at training time.
struct WriteprintsSchema {
  std::vector<std::string> function_words;
  std::vector<std::string> pos_tags;
  std::vector<std::string> bigrams;
  std::vector<std::string> trigrams;
  std::vector<std::string> punctuation;

  size_t dimension() const;
  std::vector<std::string> FeatureNames() const;
  void Save(std::ostream& out) const;
  static WriteprintsSchema Load(std::istream& in, const std::string& name);
  friend bool operator==(const WriteprintsSchema&,
                         const WriteprintsSchema&) = default;
};

std::vector<std::string> DefaultFunctionWords();
// . , ! ? ; : ' " - ( )
std::vector<std::string> DefaultPunctuation();

// Additive counts for one text (or a concatenation of texts).
struct WriteprintsCounts {
  double words = 0;
  double word_length_sum = 0;
  double short_words = 0;
  double chars = 0;  // non-whitespace characters
  double digits = 0;
  double uppercase = 0;
  double special = 0;
  double letters = 0;
  double bigram_total = 0;
  double trigram_total = 0;
  std::vector<double> bigrams;
  std::vector<double> trigrams;
  std::map<std::string, int> types;  // lowercased word tokens
  std::vector<double> function_words;
  std::vector<double> pos;
  std::vector<double> punctuation;

  void Add(const WriteprintsCounts& other);
};

// Featurizes with a fixed schema. Character n-grams are counted within
// each sentence over lowercased, whitespace-collapsed text; POS tags come
// from the tagger.
class WriteprintsExtractor {
 public:
  WriteprintsExtractor(WriteprintsSchema schema,
                       std::shared_ptr<const TaggerModel> tagger);

  // Top-k bigrams/trigrams of the training texts, the tagger's inventory,
  // the given function words and the default punctuation list.
  static WriteprintsSchema BuildSchema(
      const std::vector<std::string>& texts, const TaggerModel& tagger,
      std::vector<std::string> function_words = DefaultFunctionWords(),
      size_t top_k = 50);

  WriteprintsCounts CountSentence(const std::string& sentence_text) const;
  std::vector<double> Vector(const WriteprintsCounts& counts) const;
  std::vector<double> Featurize(const std::string& text) const;

  const WriteprintsSchema& schema() const { return schema_; }
  const std::shared_ptr<const TaggerModel>& tagger() const { return tagger_; }

 private:
  WriteprintsSchema schema_;
  std::shared_ptr<const TaggerModel> tagger_;
  std::map<std::string, size_t> function_index_;
  std::map<std::string, size_t> pos_index_;
  std::map<std::u32string, size_t> bigram_index_;
  std::map<std::u32string, size_t> trigram_index_;
  std::map<char32_t, size_t> punctuation_index_;
};

// Lowercased text with whitespace runs collapsed to one space and trimmed.
std::u32string NormalizeForNgrams(std::string_view text);

}  // namespace parchoice

#endif  // PARCHOICE_WRITEPRINTS_H_

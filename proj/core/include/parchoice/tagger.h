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

// Averaged-perceptron part-of-speech tagger over the Penn Treebank tag set.

#ifndef PARCHOICE_TAGGER_H_
#define PARCHOICE_TAGGER_H_

#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parchoice/text.h"

namespace parchoice {

// Sentences whose tokens carry gold tags.
using TaggedCorpus = std::vector<Sentence>;

// Format: one `surface<TAB>tag` per line, blank line between sentences.
TaggedCorpus ParseTaggedCorpus(std::istream& in, const std::string& name);
TaggedCorpus ReadTaggedCorpus(const std::string& path);

class TaggerModel {
 public:
  TaggerModel() = default;

  const std::vector<std::string>& tags() const { return tags_; }
  size_t feature_count() const { return weights_.size(); }
  bool empty() const { return tags_.empty(); }

  // Greedy left-to-right decoding. When every tag scores the same (as with
  // an untrained model), falls back to the word's most frequent training
  // tag, then to the globally most frequent tag.
  std::vector<std::string> Predict(const std::vector<std::string>& words) const;

  // Averaged weight for (feature, tag); 0 when absent.
  double Weight(const std::string& feature, const std::string& tag) const;

  // `parchoice-tagger-v1` header, then sorted `key<TAB>value` lines.
  void Save(std::ostream& out) const;
  static TaggerModel Load(std::istream& in, const std::string& name = "tagger");

  friend bool operator==(const TaggerModel&, const TaggerModel&) = default;

 private:
  friend class TaggerTrainer;
  using TagWeights = std::vector<std::pair<int, double>>;

  std::string FallbackTag(const std::string& lower_word) const;
  int TagIndex(const std::string& tag) const;

  std::vector<std::string> tags_;
  std::unordered_map<std::string, TagWeights> weights_;
  std::map<std::string, std::string> word_tags_;
  std::string default_tag_;
};

// Trains for `iterations` passes over the corpus in corpus order.
// Throws ResourceError on an empty corpus.
TaggerModel TrainTagger(const TaggedCorpus& corpus, int iterations = 5);

// Returns a copy with every token's tag set; surfaces are untouched.
Sentence Tag(const Sentence& sentence, const TaggerModel& model);
void TagTokens(TokenSeq& tokens, const TaggerModel& model);

// Feature strings for position i given the two previous predicted tags.
std::vector<std::string> TaggerFeatures(const std::vector<std::string>& words,
                                        size_t i, const std::string& prev,
                                        const std::string& prev2);

std::string WordShape(std::string_view word);

}  // namespace parchoice

#endif  // PARCHOICE_TAGGER_H_

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

#ifndef PARCHOICE_INFLECTION_H_
#define PARCHOICE_INFLECTION_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "parchoice/lemmatizer.h"
#include "parchoice/tagger.h"

namespace parchoice {

// (lemma, tag) -> most frequent lowercase surface form in a tagged corpus;
// count ties go to the lexicographically smaller surface.
class InflectionTable {
 public:
  std::optional<std::string> Inflect(std::string_view lemma,
                                     std::string_view tag) const;
  size_t size() const { return entries_.size(); }

  // `parchoice-inflections-v1`, then `lemma TAG<TAB>surface` lines.
  void Save(std::ostream& out) const;
  static InflectionTable Load(std::istream& in,
                              const std::string& name = "inflections");

  friend bool operator==(const InflectionTable&,
                         const InflectionTable&) = default;

 private:
  friend InflectionTable BuildInflectionTable(const TaggedCorpus&,
                                              const Lemmatizer&);
  std::map<std::pair<std::string, std::string>, std::string, std::less<>>
      entries_;
};

// Throws ResourceError on an empty corpus.
InflectionTable BuildInflectionTable(
    const TaggedCorpus& corpus,
    const Lemmatizer& lemmatizer = Lemmatizer::Default());

// Absent when (lemma, tag) never occurred; callers skip the substitution.
std::optional<std::string> Inflect(std::string_view lemma, std::string_view tag,
                                   const InflectionTable& table);

}  // namespace parchoice

#endif  // PARCHOICE_INFLECTION_H_

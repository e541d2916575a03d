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

// Corpus-derived typo tables, apostrophe removal and spell-check reversal.

#ifndef PARCHOICE_TYPOS_H_
#define PARCHOICE_TYPOS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "parchoice/sites.h"
#include "parchoice/text.h"

namespace parchoice {

// Word-frequency list with a deletion-neighborhood index for nearest-word
// queries. Words are stored lowercase.
class SpellLexicon {
 public:
  SpellLexicon() = default;
  explicit SpellLexicon(std::map<std::string, uint64_t> frequencies,
                        int max_dist = 2);

  // Lines `word<TAB>frequency`. Throws FormatError on bad lines and
  // ResourceError when empty.
  static SpellLexicon Parse(std::istream& in, const std::string& name,
                            int max_dist = 2);
  static SpellLexicon Load(const std::string& path, int max_dist = 2);
  void Save(std::ostream& out) const;

  bool Contains(const std::string& lower) const {
    return frequencies_.contains(lower);
  }
  uint64_t Frequency(const std::string& lower) const;
  size_t size() const { return frequencies_.size(); }
  int max_dist() const { return max_dist_; }
  const std::map<std::string, uint64_t>& words() const { return frequencies_; }

  // Closest word within `max_dist` edits: fewest edits, then higher
  // frequency, then lexicographically smaller. `max_dist` may not exceed
  // the index depth.
  std::optional<std::string> Nearest(const std::string& lower, int max_dist) const;

  friend bool operator==(const SpellLexicon& a, const SpellLexicon& b) {
    return a.frequencies_ == b.frequencies_ && a.max_dist_ == b.max_dist_;
  }

 private:
  std::map<std::string, uint64_t> frequencies_;
  std::vector<const std::string*> words_;
  std::unordered_map<std::u32string, std::vector<uint32_t>> deletes_;
  int max_dist_ = 2;
};

class TypoLexicon {
 public:
  // Misspellings observed for a correct word, sorted.
  const std::set<std::string>* Misspellings(const std::string& correct) const;
  // Correct form for a known misspelling.
  std::optional<std::string> Correct(const std::string& misspelling) const;
  void Add(const std::string& correct, const std::string& misspelling);

  const std::map<std::string, std::set<std::string>>& forward() const {
    return forward_;
  }
  const std::map<std::string, std::string>& reverse() const { return reverse_; }
  const std::string& source() const { return source_; }
  void set_source(std::string s) { source_ = std::move(s); }
  size_t size() const { return reverse_.size(); }

  // `parchoice-typos-v1<TAB>source`, then `correct<TAB>misspelling` lines.
  void Save(std::ostream& out) const;
  static TypoLexicon Load(std::istream& in, const std::string& name = "typos");
  friend bool operator==(const TypoLexicon&, const TypoLexicon&) = default;

 private:
  std::map<std::string, std::set<std::string>> forward_;
  std::map<std::string, std::string> reverse_;
  std::string source_;
};

// Candidate word for typo detection: letters with optional inner
// apostrophes/hyphens, lowercase apart from a sentence-initial capital,
// and not the host of a following clitic (ca in ca n't).
bool IsTypoCandidate(const TokenSeq& tokens, size_t index);

// Maps every corpus token missing from the spell lexicon to its nearest
// lexicon word. Apostrophe-free spellings of lexicon words (you're ->
// youre) are added when they are not words themselves and were not
// already claimed by a corpus misspelling.
TypoLexicon BuildTypoLexicon(const std::vector<Sentence>& corpus,
                             const SpellLexicon& spell, int max_dist = 2,
                             std::string source = {});

struct OriginalTypo {
  size_t index = 0;
  std::string corrected;  // case-matched to the original token
};

std::vector<OriginalTypo> DetectOriginalTypos(const TokenSeq& tokens,
                                              const SpellLexicon& spell,
                                              int max_dist = 2);

// Reverse table, then identity for lexicon words, then nearest word within
// distance 2, else identity. The result copies the word's leading capital.
std::string SpellCorrect(const std::string& word, const TypoLexicon& lex,
                         const SpellLexicon& spell);

// (a) apostrophe removal, kept only when spell correction restores the
// original; (b) correct -> misspelling options; (c) original typos with
// their corrections.
std::vector<RuleSite> TypoSites(const TokenSeq& tokens, const TypoLexicon& lex,
                                const SpellLexicon& spell,
                                const std::vector<OriginalTypo>& original_typos);

}  // namespace parchoice

#endif  // PARCHOICE_TYPOS_H_

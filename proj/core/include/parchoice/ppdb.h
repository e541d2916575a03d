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

// Paraphrase-database lexicon restricted to equivalence pairs, and the
// syntactic-context filter that decides where an entry may apply.

#ifndef PARCHOICE_PPDB_H_
#define PARCHOICE_PPDB_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "parchoice/sites.h"
#include "parchoice/text.h"

namespace parchoice {

struct PpdbEntry {
  // Either a single tag ([NN]) or a category pair ([X/Y]).
  bool phrase_pair = false;
  std::string tag;  // SinglePOS
  std::string x;    // PhrasePair
  std::string y;
  std::vector<std::string> phrase;      // lowercase
  std::vector<std::string> paraphrase;  // lowercase
  friend bool operator==(const PpdbEntry&, const PpdbEntry&) = default;
  std::string Context() const;  // "[NN]" or "[X/Y]"
};

class PpdbLexicon {
 public:
  // Entries whose phrase starts with `first` (lowercase), in file order.
  const std::vector<PpdbEntry>& Lookup(const std::string& first) const;
  size_t size() const { return size_; }
  size_t malformed() const { return malformed_; }
  void Add(PpdbEntry entry);

  // `parchoice-ppdb-v1`, `entries<TAB>N`, then `context<TAB>phrase<TAB>
  // paraphrase` lines in insertion order.
  void Save(std::ostream& out) const;
  static PpdbLexicon Load(std::istream& in, const std::string& name = "ppdb");
  friend bool operator==(const PpdbLexicon&, const PpdbLexicon&) = default;

 private:
  friend PpdbLexicon ParsePpdb(std::istream&, const std::string&, bool);
  std::map<std::string, std::vector<PpdbEntry>> by_first_;
  std::vector<std::string> order_;  // first tokens in insertion order
  size_t size_ = 0;
  size_t malformed_ = 0;
};

// Six ` ||| `-separated fields: context, phrase, paraphrase, features,
// alignment, entailment. Keeps "Equivalence" lines only. Malformed lines are
// skipped and counted; in strict mode the first one raises a FormatError
// with its line number, otherwise a FormatError is raised when more than
// half of the non-blank lines are malformed.
PpdbLexicon ParsePpdb(std::istream& in, const std::string& name,
                      bool strict = false);
// Throws ResourceError when the file cannot be opened.
PpdbLexicon LoadPpdb(const std::string& path, bool strict = false);

// Sites for every n-gram matching an entry (case-insensitive). Single-tag
// entries need a one-token match with the same tag; pair entries need the
// longest phrase right after the n-gram to carry the entry's Y category
// (NP, VP, PP; anything else, the sentence end included, counts as S).
std::vector<RuleSite> PpdbSites(const TokenSeq& tokens, const PpdbLexicon& lex);

}  // namespace parchoice

#endif  // PARCHOICE_PPDB_H_

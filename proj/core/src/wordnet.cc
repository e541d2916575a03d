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

#include "parchoice/wordnet.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "embedded_resources.h"
#include "parchoice/errors.h"

namespace parchoice {
namespace {

std::unordered_set<std::string> ContentWords(const TokenSeq& tokens,
                                             size_t skip) {
  std::unordered_set<std::string> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i == skip || !IsWordToken(tokens[i].surface)) continue;
    std::string w = ToLower(tokens[i].surface);
    if (!Stopwords().contains(w)) out.insert(std::move(w));
  }
  return out;
}

std::vector<std::string> SplitUnderscores(const std::string& lemma) {
  auto parts = SplitString(lemma, "_");
  std::erase_if(parts, [](const std::string& p) { return p.empty(); });
  return parts;
}

}  // namespace

char WordNetPos(std::string_view tag) {
  if (tag.starts_with("NN")) return 'n';
  if (tag.starts_with("VB")) return 'v';
  if (tag.starts_with("JJ")) return 'a';
  if (tag.starts_with("RB")) return 'r';
  return '\0';
}

const std::unordered_set<std::string>& Stopwords() {
  static const auto* words = [] {
    auto* set = new std::unordered_set<std::string>;
    std::istringstream in{std::string(internal::Embedded_stopwords_txt())};
    std::string line;
    while (std::getline(in, line)) {
      const auto w = Trim(line);
      if (!w.empty() && w.front() != '#') set->insert(std::string(w));
    }
    return set;
  }();
  return *words;
}

std::vector<const Synset*> WordNet::Lookup(const std::string& lemma,
                                           char pos) const {
  std::vector<const Synset*> out;
  const auto it = index_.find({ToLower(lemma), pos});
  if (it == index_.end()) return out;
  for (size_t i : it->second) out.push_back(&synsets_[i]);
  return out;
}

std::unordered_set<std::string> WordNet::Lemmas() const {
  std::unordered_set<std::string> out;
  for (const auto& s : synsets_) {
    for (const auto& l : s.lemmas) out.insert(ToLower(l));
  }
  return out;
}

void WordNet::Index() {
  index_.clear();
  for (size_t i = 0; i < synsets_.size(); ++i) {
    for (const auto& l : synsets_[i].lemmas) {
      auto& list = index_[{ToLower(l), synsets_[i].pos}];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
  }
}

WordNet WordNet::Parse(std::istream& in, const std::string& name) {
  WordNet wn;
  std::map<std::string, size_t> by_id;
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    const auto f = SplitString(line, "\t");
    if (f.size() != 4) {
      throw FormatError(name, n, "expected id<TAB>pos<TAB>lemmas<TAB>gloss");
    }
    Synset s;
    s.id = std::string(Trim(f[0]));
    const std::string pos(Trim(f[1]));
    if (s.id.empty() || pos.size() != 1 ||
        std::string_view("nvars").find(pos[0]) == std::string_view::npos) {
      throw FormatError(name, n, "bad synset id or part of speech");
    }
    s.pos = pos[0] == 's' ? 'a' : pos[0];
    for (const auto& l : SplitString(f[2], ",")) {
      const auto t = Trim(l);
      if (!t.empty()) s.lemmas.emplace_back(t);
    }
    if (s.lemmas.empty()) throw FormatError(name, n, "synset without lemmas");
    s.gloss = std::string(Trim(f[3]));
    const auto [it, inserted] = by_id.try_emplace(s.id, wn.synsets_.size());
    if (inserted) {
      wn.synsets_.push_back(std::move(s));
    } else {
      wn.synsets_[it->second] = std::move(s);
      ++wn.duplicates_;
    }
  }
  if (wn.synsets_.empty()) throw ResourceError(name + ": no synsets");
  wn.Index();
  return wn;
}

WordNet WordNet::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open WordNet file " + path);
  return Parse(in, path);
}

void WordNet::Save(std::ostream& out) const {
  for (const auto& s : synsets_) {
    out << s.id << '\t' << s.pos << '\t';
    for (size_t i = 0; i < s.lemmas.size(); ++i) {
      out << (i ? "," : "") << s.lemmas[i];
    }
    out << '\t' << s.gloss << '\n';
  }
}

const Synset& LeskDisambiguate(const TokenSeq& sentence, size_t index,
                               const std::vector<const Synset*>& synsets) {
  const auto context = ContentWords(sentence, index);
  const Synset* best = synsets.front();
  size_t best_overlap = 0;
  for (const Synset* s : synsets) {
    const auto gloss = ContentWords(TokenizeSentence(s->gloss).tokens,
                                    std::string::npos);
    size_t overlap = 0;
    for (const auto& w : gloss) overlap += context.contains(w);
    if (overlap > best_overlap) {
      best = s;
      best_overlap = overlap;
    }
  }
  return *best;
}

std::vector<RuleSite> WordNetSites(const TokenSeq& tokens, const WordNet& wordnet,
                                   const InflectionTable& inflections,
                                   const Lemmatizer& lemmatizer) {
  std::vector<RuleSite> sites;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    const char pos = WordNetPos(tok.tag);
    if (pos == '\0' || !IsWordToken(tok.surface)) continue;
    const std::string lower = ToLower(tok.surface);
    if (Stopwords().contains(lower)) continue;
    const std::string lemma = tok.lemma.empty() ? lemmatizer.Lemmatize(tok) : tok.lemma;
    const auto synsets = wordnet.Lookup(lemma, pos);
    if (synsets.empty()) continue;
    const Synset& sense = LeskDisambiguate(tokens, i, synsets);

    std::vector<TokenSeq> options;
    for (const auto& syn : sense.lemmas) {
      if (ToLower(syn) == lemma) continue;
      auto words = SplitUnderscores(ToLower(syn));
      if (words.empty()) continue;
      const size_t head = pos == 'v' ? 0 : words.size() - 1;
      const auto form = inflections.Inflect(words[head], tok.tag);
      if (!form) continue;
      words[head] = *form;
      if (words.size() == 1 && words[0] == lower) continue;
      TokenSeq option;
      for (size_t k = 0; k < words.size(); ++k) {
        option.emplace_back(words[k], k == head ? tok.tag : "");
      }
      if (StartsUpper(tok.surface) && (i == 0 || tok.tag.starts_with("NNP"))) {
        option[0].surface = Capitalize(option[0].surface);
      }
      options.push_back(std::move(option));
    }
    RuleSite site;
    if (MakeSite(tokens, i, i + 1, options, "wordnet", &site)) {
      sites.push_back(std::move(site));
    }
  }
  return sites;
}

}  // namespace parchoice

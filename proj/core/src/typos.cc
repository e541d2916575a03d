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

#include "parchoice/typos.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>
#include <unordered_set>

#include "parchoice/errors.h"

namespace parchoice {
namespace {

void Deletes(const std::u32string& word, int depth,
             std::unordered_set<std::u32string>& out) {
  if (depth == 0 || word.empty()) return;
  for (size_t i = 0; i < word.size(); ++i) {
    std::u32string shorter = word;
    shorter.erase(i, 1);
    if (out.insert(shorter).second) Deletes(shorter, depth - 1, out);
  }
}

std::unordered_set<std::u32string> Neighborhood(const std::u32string& word,
                                                int depth) {
  std::unordered_set<std::u32string> out = {word};
  Deletes(word, depth, out);
  return out;
}

std::string MatchCase(std::string word, const std::string& like) {
  return StartsUpper(like) ? Capitalize(word) : word;
}

std::string WithoutApostrophes(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != '\'') out += c;
  }
  return out;
}

}  // namespace

SpellLexicon::SpellLexicon(std::map<std::string, uint64_t> frequencies,
                           int max_dist)
    : frequencies_(std::move(frequencies)), max_dist_(max_dist) {
  for (const auto& [word, freq] : frequencies_) {
    const auto id = static_cast<uint32_t>(words_.size());
    words_.push_back(&word);
    for (const auto& d : Neighborhood(DecodeUtf8(word), max_dist_)) {
      deletes_[d].push_back(id);
    }
  }
}

SpellLexicon SpellLexicon::Parse(std::istream& in, const std::string& name,
                                 int max_dist) {
  std::map<std::string, uint64_t> freq;
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    const auto f = SplitString(line, "\t");
    uint64_t value = 0;
    const std::string count(Trim(f.size() == 2 ? f[1] : ""));
    if (f.size() != 2 || Trim(f[0]).empty() || count.empty() ||
        !std::all_of(count.begin(), count.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw FormatError(name, n, "expected word<TAB>frequency");
    }
    value = std::stoull(count);
    freq[ToLower(Trim(f[0]))] += value;
  }
  if (freq.empty()) throw ResourceError(name + ": empty spell lexicon");
  return SpellLexicon(std::move(freq), max_dist);
}

SpellLexicon SpellLexicon::Load(const std::string& path, int max_dist) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open spell lexicon " + path);
  return Parse(in, path, max_dist);
}

void SpellLexicon::Save(std::ostream& out) const {
  for (const auto& [word, freq] : frequencies_) out << word << '\t' << freq << '\n';
}

uint64_t SpellLexicon::Frequency(const std::string& lower) const {
  const auto it = frequencies_.find(lower);
  return it == frequencies_.end() ? 0 : it->second;
}

std::optional<std::string> SpellLexicon::Nearest(const std::string& lower,
                                                 int max_dist) const {
  max_dist = std::min(max_dist, max_dist_);
  const std::u32string query = DecodeUtf8(lower);
  std::unordered_set<uint32_t> seen;
  const std::string* best = nullptr;
  std::tuple<size_t, uint64_t> best_key{0, 0};
  for (const auto& d : Neighborhood(query, max_dist)) {
    const auto it = deletes_.find(d);
    if (it == deletes_.end()) continue;
    for (uint32_t id : it->second) {
      if (!seen.insert(id).second) continue;
      const std::string& word = *words_[id];
      const size_t dist = EditDistance(DecodeUtf8(word), query);
      if (dist > static_cast<size_t>(max_dist)) continue;
      const uint64_t freq = frequencies_.at(word);
      const bool better =
          best == nullptr || dist < std::get<0>(best_key) ||
          (dist == std::get<0>(best_key) &&
           (freq > std::get<1>(best_key) ||
            (freq == std::get<1>(best_key) && word < *best)));
      if (better) {
        best = &word;
        best_key = {dist, freq};
      }
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

const std::set<std::string>* TypoLexicon::Misspellings(
    const std::string& correct) const {
  const auto it = forward_.find(correct);
  return it == forward_.end() ? nullptr : &it->second;
}

std::optional<std::string> TypoLexicon::Correct(
    const std::string& misspelling) const {
  const auto it = reverse_.find(misspelling);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

void TypoLexicon::Add(const std::string& correct, const std::string& misspelling) {
  if (correct == misspelling || reverse_.contains(misspelling)) return;
  reverse_[misspelling] = correct;
  forward_[correct].insert(misspelling);
}

void TypoLexicon::Save(std::ostream& out) const {
  out << "parchoice-typos-v1\t" << source_ << '\n';
  for (const auto& [correct, misspellings] : forward_) {
    for (const auto& m : misspellings) out << correct << '\t' << m << '\n';
  }
}

TypoLexicon TypoLexicon::Load(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("parchoice-typos-v1")) {
    throw FormatError(name, 1, "missing parchoice-typos-v1 header");
  }
  TypoLexicon lex;
  if (line.size() > 18) {
    if (line[18] != '\t') throw FormatError(name, 1, "bad header");
    lex.source_ = line.substr(19);
  }
  size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto f = SplitString(line, "\t");
    if (f.size() != 2 || f[0].empty() || f[1].empty() || f[0] == f[1]) {
      throw FormatError(name, n, "expected correct<TAB>misspelling");
    }
    if (lex.reverse_.contains(f[1])) {
      throw FormatError(name, n, "misspelling listed twice");
    }
    lex.Add(f[0], f[1]);
  }
  return lex;
}

bool IsTypoCandidate(const TokenSeq& tokens, size_t index) {
  const std::string& s = tokens[index].surface;
  if (s.size() < 2 || IsClitic(s)) return false;
  if (index + 1 < tokens.size() && IsClitic(tokens[index + 1].surface)) return false;
  for (size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = s[i];
    if (std::islower(c)) continue;
    if (i == 0 && index == 0 && std::isupper(c)) continue;
    if ((c == '\'' || c == '-') && i > 0 && i + 1 < s.size()) continue;
    return false;
  }
  return true;
}

TypoLexicon BuildTypoLexicon(const std::vector<Sentence>& corpus,
                             const SpellLexicon& spell, int max_dist,
                             std::string source) {
  if (spell.size() == 0) throw ResourceError("empty spell lexicon");
  TypoLexicon lex;
  lex.set_source(std::move(source));
  std::set<std::string> unknown;
  for (const auto& sentence : corpus) {
    for (size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (!IsTypoCandidate(sentence.tokens, i)) continue;
      const std::string w = ToLower(sentence.tokens[i].surface);
      if (!spell.Contains(w)) unknown.insert(w);
    }
  }
  for (const auto& w : unknown) {
    if (auto correct = spell.Nearest(w, max_dist)) lex.Add(*correct, w);
  }
  for (const auto& [word, freq] : spell.words()) {
    if (word.find('\'') == std::string::npos) continue;
    const std::string bare = WithoutApostrophes(word);
    if (!bare.empty() && !spell.Contains(bare)) lex.Add(word, bare);
  }
  return lex;
}

std::vector<OriginalTypo> DetectOriginalTypos(const TokenSeq& tokens,
                                              const SpellLexicon& spell,
                                              int max_dist) {
  std::vector<OriginalTypo> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!IsTypoCandidate(tokens, i)) continue;
    const std::string w = ToLower(tokens[i].surface);
    if (spell.Contains(w)) continue;
    if (auto correct = spell.Nearest(w, max_dist)) {
      out.push_back({i, MatchCase(*correct, tokens[i].surface)});
    }
  }
  return out;
}

std::string SpellCorrect(const std::string& word, const TypoLexicon& lex,
                         const SpellLexicon& spell) {
  const std::string lower = ToLower(word);
  if (auto c = lex.Correct(lower)) return MatchCase(*c, word);
  if (spell.Contains(lower)) return word;
  if (auto c = spell.Nearest(lower, 2)) return MatchCase(*c, word);
  return word;
}

std::vector<RuleSite> TypoSites(const TokenSeq& tokens, const TypoLexicon& lex,
                                const SpellLexicon& spell,
                                const std::vector<OriginalTypo>& original_typos) {
  std::vector<RuleSite> sites;
  auto add = [&](size_t b, size_t e, std::vector<TokenSeq> options,
                 const char* rule) {
    RuleSite site;
    if (MakeSite(tokens, b, e, options, rule, &site)) sites.push_back(std::move(site));
  };
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    // (a) apostrophe removal; a clitic merges with the word before it.
    if (tok.surface.find('\'') != std::string::npos) {
      const bool clitic = IsClitic(tok.surface) && i > 0 &&
                          IsWordToken(tokens[i - 1].surface) &&
                          !IsClitic(tokens[i - 1].surface);
      const size_t b = clitic ? i - 1 : i;
      std::string joined;
      for (size_t k = b; k <= i; ++k) joined += tokens[k].surface;
      const std::string bare = WithoutApostrophes(joined);
      if (!bare.empty() && IsWordToken(bare) &&
          ToLower(SpellCorrect(bare, lex, spell)) == ToLower(joined)) {
        add(b, i + 1, {{Token(bare)}}, "apostrophe");
      }
    }
    // (b) corpus misspellings of a correct word.
    if (const auto* ms = lex.Misspellings(ToLower(tok.surface))) {
      std::vector<TokenSeq> options;
      for (const auto& m : *ms) {
        options.push_back({Token(MatchCase(m, tok.surface), tok.tag)});
      }
      add(i, i + 1, std::move(options), "typo");
    }
  }
  // (c) original typos: keep or correct.
  for (const auto& typo : original_typos) {
    if (typo.index >= tokens.size()) continue;
    add(typo.index, typo.index + 1,
        {{Token(typo.corrected, tokens[typo.index].tag)}}, "typo-correction");
  }
  return sites;
}

}  // namespace parchoice

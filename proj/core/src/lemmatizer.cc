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

#include "parchoice/lemmatizer.h"

#include <functional>
#include <istream>
#include <sstream>

#include "embedded_resources.h"
#include "parchoice/chunker.h"
#include "parchoice/errors.h"

namespace parchoice {
namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}
bool IsConsonant(char c) { return c >= 'a' && c <= 'z' && !IsVowel(c); }

// consonant-vowel-consonant ending, final consonant not w, x or y
bool EndsCvc(std::string_view s) {
  if (s.size() < 3) return false;
  const char c3 = s[s.size() - 1], c2 = s[s.size() - 2], c1 = s[s.size() - 3];
  return IsConsonant(c1) && IsVowel(c2) && IsConsonant(c3) && c3 != 'w' &&
         c3 != 'x' && c3 != 'y';
}

const std::map<std::string, std::string, std::less<>>& VerbSpecials() {
  static const auto* m = new std::map<std::string, std::string, std::less<>>{
      {"is", "be"},     {"am", "be"},     {"are", "be"},   {"was", "be"},
      {"were", "be"},   {"been", "be"},   {"being", "be"}, {"'s", "be"},
      {"'m", "be"},     {"'re", "be"},    {"has", "have"}, {"had", "have"},
      {"'ve", "have"},  {"having", "have"}, {"does", "do"}, {"did", "do"},
      {"done", "do"},   {"doing", "do"},  {"'d", "would"}, {"'ll", "will"},
  };
  return *m;
}

const std::map<std::string, std::string, std::less<>>& ModalSpecials() {
  static const auto* m = new std::map<std::string, std::string, std::less<>>{
      {"ca", "can"}, {"wo", "will"}, {"'ll", "will"}, {"'d", "would"},
      {"sha", "shall"}};
  return *m;
}

const std::map<std::string, std::string, std::less<>>& AdjectiveSpecials() {
  static const auto* m = new std::map<std::string, std::string, std::less<>>{
      {"better", "good"}, {"best", "good"}, {"worse", "bad"},
      {"worst", "bad"},   {"less", "little"}, {"least", "little"}};
  return *m;
}

template <typename Map>
std::string Lookup(const Map& m, std::string_view key) {
  auto it = m.find(key);
  return it == m.end() ? std::string() : it->second;
}

void ParseLines(std::istream& in, const std::string& name, size_t columns,
                const std::function<void(std::vector<std::string>&)>& fn) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto fields = SplitString(view, "\t");
    if (fields.size() != columns) {
      throw FormatError(name, line_no,
                        "expected " + std::to_string(columns) + " columns");
    }
    for (auto& f : fields) f = ToLower(Trim(f));
    fn(fields);
  }
}

}  // namespace

IrregularForms IrregularForms::Parse(std::istream& verbs, std::istream& nouns,
                                     const std::string& name) {
  IrregularForms forms;
  ParseLines(verbs, name, 3, [&](std::vector<std::string>& f) {
    if (!forms.by_lemma_.count(f[0])) {
      forms.by_lemma_[f[0]] = forms.verbs_.size();
      forms.verbs_.push_back({f[0], f[1], f[2]});
    }
    forms.past_to_lemma_.emplace(f[1], f[0]);
    forms.participle_to_lemma_.emplace(f[2], f[0]);
  });
  ParseLines(nouns, name, 2, [&](std::vector<std::string>& f) {
    forms.lemma_to_plural_.emplace(f[0], f[1]);
    forms.plural_to_lemma_.emplace(f[1], f[0]);
  });
  return forms;
}

const IrregularForms& IrregularForms::Default() {
  static const IrregularForms* forms = [] {
    std::istringstream verbs{std::string(internal::Embedded_irregular_verbs_tsv())};
    std::istringstream nouns{std::string(internal::Embedded_irregular_nouns_tsv())};
    return new IrregularForms(Parse(verbs, nouns, "embedded irregular forms"));
  }();
  return *forms;
}

const VerbForms* IrregularForms::Verb(std::string_view lemma) const {
  auto it = by_lemma_.find(lemma);
  return it == by_lemma_.end() ? nullptr : &verbs_[it->second];
}

std::string IrregularForms::LemmaOfPast(std::string_view past) const {
  return Lookup(past_to_lemma_, past);
}
std::string IrregularForms::LemmaOfParticiple(std::string_view p) const {
  return Lookup(participle_to_lemma_, p);
}
std::string IrregularForms::LemmaOfPlural(std::string_view plural) const {
  return Lookup(plural_to_lemma_, plural);
}
std::string IrregularForms::Plural(std::string_view lemma) const {
  return Lookup(lemma_to_plural_, lemma);
}

Lemmatizer::Lemmatizer() : forms_(IrregularForms::Default()) {}
Lemmatizer::Lemmatizer(IrregularForms forms) : forms_(std::move(forms)) {}

void Lemmatizer::SetKnownLemmas(std::unordered_set<std::string> known) {
  known_ = std::move(known);
}

const Lemmatizer& Lemmatizer::Default() {
  static const Lemmatizer* lemmatizer = new Lemmatizer();
  return *lemmatizer;
}

std::string Lemmatizer::Choose(const std::vector<std::string>& candidates) const {
  for (const auto& c : candidates) {
    if (known_.count(c)) return c;
  }
  return candidates.front();
}

// Readings of a stem left after stripping -ed/-ing/-er/-est, most likely
// first.
std::vector<std::string> Lemmatizer::StemCandidates(const std::string& stem) const {
  const size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && IsConsonant(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'f' &&
      stem[n - 1] != 'z') {
    std::string undoubled = stem.substr(0, n - 1);
    if (EndsCvc(undoubled)) return {undoubled, stem};
  }
  const bool wants_e =
      (n <= 3 && EndsCvc(stem)) || stem.ends_with("v") ||
      stem.ends_with("iz") || stem.ends_with("yz") || stem.ends_with("rg") ||
      (stem.ends_with("c") && !stem.ends_with("ic")) || stem.ends_with("dg") ||
      stem.ends_with("us") || (stem.ends_with("ur") && n <= 3);
  if (wants_e) return {stem + "e", stem};
  return {stem, stem + "e"};
}

std::string Lemmatizer::Lemmatize(std::string_view surface,
                                  std::string_view tag) const {
  const std::string w = ToLower(surface);
  if (w.empty()) return w;
  if (tag == "MD") {
    std::string m = Lookup(ModalSpecials(), w);
    return m.empty() ? w : m;
  }
  if (w == "n't") return "not";
  const size_t n = w.size();
  if (IsNounTag(tag)) {
    if (tag != "NNS" && tag != "NNPS") return w;
    if (auto irregular = forms_.LemmaOfPlural(w); !irregular.empty()) {
      return irregular;
    }
    if (n > 4 && w.ends_with("ies")) return w.substr(0, n - 3) + "y";
    if (w.ends_with("ses") || w.ends_with("xes") || w.ends_with("zes") ||
        w.ends_with("ches") || w.ends_with("shes")) {
      return Choose({w.substr(0, n - 2), w.substr(0, n - 1)});
    }
    if (w.ends_with("ss") || w.ends_with("us") || w.ends_with("is")) return w;
    if (n > 2 && w.ends_with("s")) return w.substr(0, n - 1);
    return w;
  }
  if (IsVerbTag(tag)) {
    if (auto special = Lookup(VerbSpecials(), w); !special.empty()) {
      return special;
    }
    if (tag == "VBZ") {
      if (n > 4 && w.ends_with("ies")) return w.substr(0, n - 3) + "y";
      if (w.ends_with("ses") || w.ends_with("xes") || w.ends_with("zes") ||
          w.ends_with("ches") || w.ends_with("shes") || w.ends_with("oes")) {
        return Choose({w.substr(0, n - 2), w.substr(0, n - 1)});
      }
      if (n > 2 && w.ends_with("s") && !w.ends_with("ss")) {
        return w.substr(0, n - 1);
      }
      return w;
    }
    if (tag == "VBD" || tag == "VBN") {
      if (auto irregular = forms_.LemmaOfPast(w); !irregular.empty()) {
        if (tag == "VBD" || forms_.LemmaOfParticiple(w).empty()) {
          return irregular;
        }
      }
      if (auto irregular = forms_.LemmaOfParticiple(w); !irregular.empty()) {
        return irregular;
      }
      if (n > 4 && w.ends_with("ied")) return w.substr(0, n - 3) + "y";
      if (n > 3 && w.ends_with("ed")) {
        if (w.ends_with("eed") && n <= 5) return w.substr(0, n - 1);
        return Choose(StemCandidates(w.substr(0, n - 2)));
      }
      return w;
    }
    if (tag == "VBG") {
      if (n > 4 && w.ends_with("ing")) {
        if (w.ends_with("ying") && n <= 5) return w.substr(0, n - 4) + "ie";
        return Choose(StemCandidates(w.substr(0, n - 3)));
      }
      return w;
    }
    return w;
  }
  if (IsAdjectiveTag(tag) || IsAdverbTag(tag)) {
    if (tag == "JJ" || tag == "RB") return w;
    if (auto special = Lookup(AdjectiveSpecials(), w); !special.empty()) {
      return special;
    }
    const bool comparative = tag == "JJR" || tag == "RBR";
    const std::string_view suffix = comparative ? "er" : "est";
    const std::string i_suffix = comparative ? "ier" : "iest";
    if (n > i_suffix.size() + 1 && w.ends_with(i_suffix)) {
      return w.substr(0, n - i_suffix.size()) + "y";
    }
    if (n > suffix.size() + 2 && w.ends_with(suffix)) {
      return Choose(StemCandidates(w.substr(0, n - suffix.size())));
    }
    return w;
  }
  return w;
}

std::string Lemmatizer::Stem(std::string_view word) const {
  const std::string w = ToLower(word);
  if (auto special = Lookup(VerbSpecials(), w); !special.empty()) return special;
  if (auto special = Lookup(ModalSpecials(), w); !special.empty()) return special;
  if (auto irregular = forms_.LemmaOfPast(w); !irregular.empty()) return irregular;
  if (auto irregular = forms_.LemmaOfParticiple(w); !irregular.empty()) {
    return irregular;
  }
  if (auto irregular = forms_.LemmaOfPlural(w); !irregular.empty()) {
    return irregular;
  }
  if (w.size() > 4 && w.ends_with("ing")) return Lemmatize(w, "VBG");
  if (w.size() > 3 && w.ends_with("ed")) return Lemmatize(w, "VBD");
  if (w.size() > 3 && w.ends_with("s")) return Lemmatize(w, "NNS");
  return w;
}

std::string Lemmatize(const Token& token) {
  return Lemmatizer::Default().Lemmatize(token);
}

}  // namespace parchoice

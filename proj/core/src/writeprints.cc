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

#include "parchoice/writeprints.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "embedded_resources.h"
#include "parchoice/errors.h"
#include "parchoice/text.h"

namespace parchoice {
namespace {

bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0xA0;
}
bool IsDigit(char32_t c) { return c >= '0' && c <= '9'; }
bool IsUpper(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 0xC0 && c <= 0xDE && c != 0xD7);
}
bool IsLetter(char32_t c) {
  return (c >= 'a' && c <= 'z') || IsUpper(c) ||
         (c >= 0xDF && c <= 0x24F && c != 0xF7);
}

std::map<std::u32string, double> CountNgrams(const std::u32string& s, size_t n) {
  std::map<std::u32string, double> out;
  for (size_t i = 0; i + n <= s.size(); ++i) out[s.substr(i, n)] += 1;
  return out;
}

std::vector<std::string> TopK(const std::map<std::u32string, double>& counts,
                              size_t k) {
  std::vector<std::pair<std::u32string, double>> items(counts.begin(), counts.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::vector<std::string> out;
  for (size_t i = 0; i < items.size() && i < k; ++i) {
    out.push_back(EncodeUtf8(items[i].first));
  }
  return out;
}

void AddVec(std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

double Percent(double part, double whole) {
  return whole > 0 ? 100.0 * part / whole : 0.0;
}

void SaveList(std::ostream& out, const char* key,
              const std::vector<std::string>& items) {
  out << key << '\t' << items.size() << '\n';
  for (const auto& s : items) out << s << '\n';
}

std::vector<std::string> LoadList(std::istream& in, const char* key,
                                  const std::string& name) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(std::string(key) + "\t")) {
    throw FormatError(name + ": expected schema block " + key);
  }
  const size_t n = std::stoul(line.substr(std::string(key).size() + 1));
  std::vector<std::string> items;
  for (size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw FormatError(name + ": truncated schema");
    items.push_back(line);
  }
  return items;
}

}  // namespace

std::u32string NormalizeForNgrams(std::string_view text) {
  const std::u32string decoded = DecodeUtf8(ToLower(text));
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : decoded) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += U' ';
    pending_space = false;
    out += c;
  }
  return out;
}

std::vector<std::string> DefaultFunctionWords() {
  std::vector<std::string> words;
  std::istringstream in{std::string(internal::Embedded_function_words_txt())};
  std::string line;
  while (std::getline(in, line)) {
    const auto w = Trim(line);
    if (!w.empty() && w.front() != '#') words.emplace_back(w);
  }
  return words;
}

std::vector<std::string> DefaultPunctuation() {
  return {".", ",", "!", "?", ";", ":", "'", "\"", "-", "(", ")"};
}

size_t WriteprintsSchema::dimension() const {
  return 11 + bigrams.size() + trigrams.size() + function_words.size() +
         pos_tags.size() + punctuation.size();
}

std::vector<std::string> WriteprintsSchema::FeatureNames() const {
  std::vector<std::string> names = {
      "words",     "avg_word_length", "short_words", "chars",
      "digit_pct", "upper_pct",       "special_pct", "letters",
      "digits"};
  for (const auto& b : bigrams) names.push_back("bigram_pct:" + b);
  for (const auto& t : trigrams) names.push_back("trigram_pct:" + t);
  names.push_back("hapax");
  names.push_back("dis");
  for (const auto& w : function_words) names.push_back("fw:" + w);
  for (const auto& p : pos_tags) names.push_back("pos:" + p);
  for (const auto& p : punctuation) names.push_back("punct:" + p);
  return names;
}

void WriteprintsSchema::Save(std::ostream& out) const {
  SaveList(out, "function_words", function_words);
  SaveList(out, "pos_tags", pos_tags);
  SaveList(out, "bigrams", bigrams);
  SaveList(out, "trigrams", trigrams);
  SaveList(out, "punctuation", punctuation);
}

WriteprintsSchema WriteprintsSchema::Load(std::istream& in,
                                          const std::string& name) {
  WriteprintsSchema s;
  s.function_words = LoadList(in, "function_words", name);
  s.pos_tags = LoadList(in, "pos_tags", name);
  s.bigrams = LoadList(in, "bigrams", name);
  s.trigrams = LoadList(in, "trigrams", name);
  s.punctuation = LoadList(in, "punctuation", name);
  return s;
}

void WriteprintsCounts::Add(const WriteprintsCounts& o) {
  words += o.words;
  word_length_sum += o.word_length_sum;
  short_words += o.short_words;
  chars += o.chars;
  digits += o.digits;
  uppercase += o.uppercase;
  special += o.special;
  letters += o.letters;
  bigram_total += o.bigram_total;
  trigram_total += o.trigram_total;
  AddVec(bigrams, o.bigrams);
  AddVec(trigrams, o.trigrams);
  for (const auto& [w, c] : o.types) types[w] += c;
  AddVec(function_words, o.function_words);
  AddVec(pos, o.pos);
  AddVec(punctuation, o.punctuation);
}

WriteprintsExtractor::WriteprintsExtractor(
    WriteprintsSchema schema, std::shared_ptr<const TaggerModel> tagger)
    : schema_(std::move(schema)), tagger_(std::move(tagger)) {
  for (size_t i = 0; i < schema_.function_words.size(); ++i) {
    function_index_.emplace(schema_.function_words[i], i);
  }
  for (size_t i = 0; i < schema_.pos_tags.size(); ++i) {
    pos_index_.emplace(schema_.pos_tags[i], i);
  }
  for (size_t i = 0; i < schema_.bigrams.size(); ++i) {
    bigram_index_.emplace(DecodeUtf8(schema_.bigrams[i]), i);
  }
  for (size_t i = 0; i < schema_.trigrams.size(); ++i) {
    trigram_index_.emplace(DecodeUtf8(schema_.trigrams[i]), i);
  }
  for (size_t i = 0; i < schema_.punctuation.size(); ++i) {
    const auto p = DecodeUtf8(schema_.punctuation[i]);
    if (p.size() == 1) punctuation_index_.emplace(p[0], i);
  }
}

WriteprintsSchema WriteprintsExtractor::BuildSchema(
    const std::vector<std::string>& texts, const TaggerModel& tagger,
    std::vector<std::string> function_words, size_t top_k) {
  std::map<std::u32string, double> bigrams;
  std::map<std::u32string, double> trigrams;
  for (const auto& text : texts) {
    for (const auto& sentence : Tokenize(text)) {
      const auto norm = NormalizeForNgrams(sentence.original_text);
      for (const auto& [g, c] : CountNgrams(norm, 2)) bigrams[g] += c;
      for (const auto& [g, c] : CountNgrams(norm, 3)) trigrams[g] += c;
    }
  }
  WriteprintsSchema s;
  s.function_words = std::move(function_words);
  s.pos_tags = tagger.tags();
  s.bigrams = TopK(bigrams, top_k);
  s.trigrams = TopK(trigrams, top_k);
  s.punctuation = DefaultPunctuation();
  return s;
}

WriteprintsCounts WriteprintsExtractor::CountSentence(
    const std::string& sentence_text) const {
  WriteprintsCounts c;
  c.bigrams.assign(schema_.bigrams.size(), 0);
  c.trigrams.assign(schema_.trigrams.size(), 0);
  c.function_words.assign(schema_.function_words.size(), 0);
  c.pos.assign(schema_.pos_tags.size(), 0);
  c.punctuation.assign(schema_.punctuation.size(), 0);

  for (char32_t ch : DecodeUtf8(sentence_text)) {
    if (IsSpace(ch)) continue;
    c.chars += 1;
    if (IsDigit(ch)) {
      c.digits += 1;
    } else if (IsLetter(ch)) {
      c.letters += 1;
      if (IsUpper(ch)) c.uppercase += 1;
    } else {
      c.special += 1;
    }
    if (const auto it = punctuation_index_.find(ch); it != punctuation_index_.end()) {
      c.punctuation[it->second] += 1;
    }
  }

  const auto norm = NormalizeForNgrams(sentence_text);
  if (norm.size() >= 2) c.bigram_total = static_cast<double>(norm.size() - 1);
  if (norm.size() >= 3) c.trigram_total = static_cast<double>(norm.size() - 2);
  for (size_t i = 0; i + 2 <= norm.size(); ++i) {
    if (const auto it = bigram_index_.find(norm.substr(i, 2)); it != bigram_index_.end()) {
      c.bigrams[it->second] += 1;
    }
  }
  for (size_t i = 0; i + 3 <= norm.size(); ++i) {
    if (const auto it = trigram_index_.find(norm.substr(i, 3)); it != trigram_index_.end()) {
      c.trigrams[it->second] += 1;
    }
  }

  const Sentence sentence = TokenizeSentence(sentence_text);
  std::vector<std::string> words;
  for (const auto& tok : sentence.tokens) {
    words.push_back(tok.surface);
    if (!IsWordToken(tok.surface)) continue;
    const double len = static_cast<double>(DecodeUtf8(tok.surface).size());
    c.words += 1;
    c.word_length_sum += len;
    if (len <= 3) c.short_words += 1;
    const std::string lower = ToLower(tok.surface);
    c.types[lower] += 1;
    if (const auto it = function_index_.find(lower); it != function_index_.end()) {
      c.function_words[it->second] += 1;
    }
  }
  if (tagger_ && !tagger_->empty() && !words.empty()) {
    for (const auto& tag : tagger_->Predict(words)) {
      if (const auto it = pos_index_.find(tag); it != pos_index_.end()) {
        c.pos[it->second] += 1;
      }
    }
  }
  return c;
}

std::vector<double> WriteprintsExtractor::Vector(const WriteprintsCounts& c) const {
  std::vector<double> v;
  v.reserve(schema_.dimension());
  v.push_back(c.words);
  v.push_back(c.words > 0 ? c.word_length_sum / c.words : 0.0);
  v.push_back(c.short_words);
  v.push_back(c.chars);
  v.push_back(Percent(c.digits, c.chars));
  v.push_back(Percent(c.uppercase, c.chars));
  v.push_back(Percent(c.special, c.chars));
  v.push_back(c.letters);
  v.push_back(c.digits);
  for (size_t i = 0; i < schema_.bigrams.size(); ++i) {
    v.push_back(Percent(i < c.bigrams.size() ? c.bigrams[i] : 0, c.bigram_total));
  }
  for (size_t i = 0; i < schema_.trigrams.size(); ++i) {
    v.push_back(Percent(i < c.trigrams.size() ? c.trigrams[i] : 0, c.trigram_total));
  }
  double hapax = 0;
  double dis = 0;
  for (const auto& [w, n] : c.types) {
    hapax += n == 1;
    dis += n == 2;
  }
  v.push_back(hapax);
  v.push_back(dis);
  auto append = [&](const std::vector<double>& counts, size_t n) {
    for (size_t i = 0; i < n; ++i) v.push_back(i < counts.size() ? counts[i] : 0);
  };
  append(c.function_words, schema_.function_words.size());
  append(c.pos, schema_.pos_tags.size());
  append(c.punctuation, schema_.punctuation.size());
  return v;
}

std::vector<double> WriteprintsExtractor::Featurize(const std::string& text) const {
  WriteprintsCounts total;
  total.bigrams.assign(schema_.bigrams.size(), 0);
  total.trigrams.assign(schema_.trigrams.size(), 0);
  total.function_words.assign(schema_.function_words.size(), 0);
  total.pos.assign(schema_.pos_tags.size(), 0);
  total.punctuation.assign(schema_.punctuation.size(), 0);
  for (const auto& sentence : Tokenize(text)) {
    total.Add(CountSentence(sentence.original_text));
  }
  return Vector(total);
}

}  // namespace parchoice

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

// Shared data model: tokens, sentences, documents, candidates, and the
// tokenizer/detokenizer pair every other module relies on.

#ifndef PARCHOICE_TEXT_H_
#define PARCHOICE_TEXT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parchoice {

struct Token {
  std::string surface;  // non-empty, no whitespace
  std::string tag;      // Penn tag, empty until tagged
  std::string lemma;    // empty until lemmatized

  Token() = default;
  explicit Token(std::string s, std::string t = {}, std::string l = {})
      : surface(std::move(s)), tag(std::move(t)), lemma(std::move(l)) {}

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenSeq = std::vector<Token>;

struct Sentence {
  TokenSeq tokens;
  // Normalized text of the sentence: always Detokenize(tokens) for
  // sentences produced by Tokenize().
  std::string original_text;

  bool tagged() const;
};

struct Document {
  std::vector<Sentence> sentences;
  std::optional<std::string> author_class;
  std::string id;
};

// One step of the transformation history of a candidate.
struct TraceStep {
  std::string module;  // "grammar", "simple", "ppdb", "wordnet", "typos"
  size_t begin = 0;    // token span in the sequence the step was applied to
  size_t end = 0;
  std::string rule;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct CandidateSentence {
  TokenSeq tokens;
  std::vector<TraceStep> trace;
  size_t edit_distance = 0;  // characters, vs. the original sentence text

  std::string text() const;
};

// Splits text into sentences of tokens. Clitics ('m 're 've 's 'll 'd n't)
// become separate tokens; sentence boundaries fall after . ! ? when the next
// token starts with an uppercase letter or the input ends.
std::vector<Sentence> Tokenize(std::string_view text);

// Tokenizes as a single sentence, ignoring terminal-punctuation boundaries.
Sentence TokenizeSentence(std::string_view text);

// Single spaces between tokens, except no space before . , ! ? ; : ' and
// before clitics (tokens starting with an apostrophe, or n't).
std::string Detokenize(const TokenSeq& tokens);
std::string Detokenize(const std::vector<std::string>& surfaces);

std::vector<std::string> Surfaces(const TokenSeq& tokens);
TokenSeq MakeTokens(const std::vector<std::string>& surfaces);

// Levenshtein distance over Unicode scalar values with unit costs.
size_t EditDistance(std::string_view a, std::string_view b);
size_t EditDistance(const std::u32string& a, const std::u32string& b);

// Decodes UTF-8; invalid bytes become U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

std::string ToLower(std::string_view s);
// Uppercases the first ASCII letter of s.
std::string Capitalize(std::string_view s);
bool StartsUpper(std::string_view s);
bool IsPunctuationToken(std::string_view s);
bool IsClitic(std::string_view s);
// True for tokens with at least one letter or digit.
bool IsWordToken(std::string_view s);

std::vector<std::string> SplitString(std::string_view s, std::string_view sep);
std::string_view Trim(std::string_view s);

// Full-precision decimal rendering that parses back to the same double.
std::string FormatDouble(double value);
double ParseDouble(std::string_view text);

}  // namespace parchoice

#endif  // PARCHOICE_TEXT_H_

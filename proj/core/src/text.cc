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

#include "parchoice/text.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <system_error>

#include "parchoice/errors.h"

namespace parchoice {
namespace {

enum class CharClass { kSpace, kWord, kApostrophe, kHyphen, kPunct };

CharClass Classify(unsigned char c) {
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
      c == '\v') {
    return CharClass::kSpace;
  }
  if (c >= 0x80 || std::isalnum(c)) return CharClass::kWord;
  if (c == '\'') return CharClass::kApostrophe;
  if (c == '-') return CharClass::kHyphen;
  return CharClass::kPunct;
}

bool IsWordChar(char c) {
  return Classify(static_cast<unsigned char>(c)) == CharClass::kWord;
}

bool IsJoiner(char c) {
  auto k = Classify(static_cast<unsigned char>(c));
  return k == CharClass::kApostrophe || k == CharClass::kHyphen;
}

constexpr std::array<std::string_view, 6> kCliticBodies = {"s",  "m",  "d",
                                                          "re", "ve", "ll"};

bool IsCliticBody(std::string_view body) {
  std::string lower = ToLower(body);
  return std::find(kCliticBodies.begin(), kCliticBodies.end(), lower) !=
         kCliticBodies.end();
}

// Splits a run of word characters, apostrophes and hyphens. `glued` is true
// when the run directly follows another token of the same chunk.
void SplitRun(std::string_view run, bool glued, std::vector<std::string>& out) {
  if (run.empty()) return;
  if (IsJoiner(run.front())) {
    if (run.front() == '\'' && glued && IsCliticBody(run.substr(1))) {
      out.emplace_back(run);
      return;
    }
    out.emplace_back(run.substr(0, 1));
    SplitRun(run.substr(1), true, out);
    return;
  }
  if (IsJoiner(run.back())) {
    SplitRun(run.substr(0, run.size() - 1), glued, out);
    out.emplace_back(run.substr(run.size() - 1));
    return;
  }
  const std::string lower = ToLower(run);
  if (run.size() > 3 && lower.ends_with("n't") &&
      IsWordChar(run[run.size() - 4])) {
    SplitRun(run.substr(0, run.size() - 3), glued, out);
    out.emplace_back(run.substr(run.size() - 3));
    return;
  }
  for (std::string_view body : kCliticBodies) {
    const size_t len = body.size() + 1;
    if (run.size() <= len) continue;
    std::string_view tail = std::string_view(lower).substr(lower.size() - len);
    if (tail[0] == '\'' && tail.substr(1) == body) {
      SplitRun(run.substr(0, run.size() - len), glued, out);
      out.emplace_back(run.substr(run.size() - len));
      return;
    }
  }
  out.emplace_back(run);
}

std::vector<std::string> SplitSurfaces(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    while (i < n && Classify(text[i]) == CharClass::kSpace) ++i;
    const size_t chunk_begin_count = out.size();
    while (i < n && Classify(text[i]) != CharClass::kSpace) {
      if (Classify(text[i]) == CharClass::kPunct) {
        out.emplace_back(text.substr(i, 1));
        ++i;
        continue;
      }
      size_t j = i;
      while (j < n) {
        auto k = Classify(text[j]);
        if (k == CharClass::kSpace || k == CharClass::kPunct) break;
        ++j;
      }
      SplitRun(text.substr(i, j - i), out.size() > chunk_begin_count, out);
      i = j;
    }
  }
  return out;
}

bool IsTerminal(std::string_view s) { return s == "." || s == "!" || s == "?"; }

bool GluesLeft(std::string_view s) {
  if (s == "." || s == "," || s == "!" || s == "?" || s == ";" || s == ":" ||
      s == "'") {
    return true;
  }
  if (!s.empty() && s.front() == '\'') return true;
  return ToLower(s) == "n't";
}

Sentence MakeSentence(std::vector<std::string> surfaces) {
  Sentence sentence;
  sentence.tokens = MakeTokens(surfaces);
  sentence.original_text = Detokenize(surfaces);
  return sentence;
}

}  // namespace

bool Sentence::tagged() const {
  return std::all_of(tokens.begin(), tokens.end(),
                     [](const Token& t) { return !t.tag.empty(); });
}

std::string CandidateSentence::text() const { return Detokenize(tokens); }

std::vector<Sentence> Tokenize(std::string_view text) {
  std::vector<std::string> surfaces = SplitSurfaces(text);
  std::vector<Sentence> sentences;
  std::vector<std::string> current;
  for (size_t i = 0; i < surfaces.size(); ++i) {
    current.push_back(surfaces[i]);
    const bool at_end = i + 1 == surfaces.size();
    if (IsTerminal(surfaces[i]) && (at_end || StartsUpper(surfaces[i + 1]))) {
      sentences.push_back(MakeSentence(std::move(current)));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(MakeSentence(std::move(current)));
  return sentences;
}

Sentence TokenizeSentence(std::string_view text) {
  return MakeSentence(SplitSurfaces(text));
}

std::string Detokenize(const std::vector<std::string>& surfaces) {
  std::string out;
  for (size_t i = 0; i < surfaces.size(); ++i) {
    if (i > 0 && !GluesLeft(surfaces[i])) out.push_back(' ');
    out += surfaces[i];
  }
  return out;
}

std::string Detokenize(const TokenSeq& tokens) {
  return Detokenize(Surfaces(tokens));
}

std::vector<std::string> Surfaces(const TokenSeq& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

TokenSeq MakeTokens(const std::vector<std::string>& surfaces) {
  TokenSeq out;
  out.reserve(surfaces.size());
  for (const auto& s : surfaces) out.emplace_back(s);
  return out;
}

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    size_t len = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if ((c >> 5) == 0x6) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c >> 4) == 0xE) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c >> 3) == 0x1E) {
      len = 4;
      cp = c & 0x07;
    }
    bool ok = len > 0 && i + len <= text.size();
    for (size_t k = 1; ok && k < len; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc >> 6) != 0x2) {
        ok = false;
      } else {
        cp = (cp << 6) | (cc & 0x3F);
      }
    }
    if (ok && (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) ok = false;
    if (!ok) {
      out.push_back(U'\uFFFD');
      ++i;
    } else {
      out.push_back(cp);
      i += len;
    }
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  for (char32_t c : text) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (c >> 18));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

size_t EditDistance(const std::u32string& a, const std::u32string& b) {
  if (a.size() < b.size()) return EditDistance(b, a);
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

size_t EditDistance(std::string_view a, std::string_view b) {
  if (a == b) return 0;
  return EditDistance(DecodeUtf8(a), DecodeUtf8(b));
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string Capitalize(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') {
      c = static_cast<char>(c - 'a' + 'A');
      break;
    }
    if (c >= 'A' && c <= 'Z') break;
  }
  return out;
}

bool StartsUpper(std::string_view s) {
  return !s.empty() && s.front() >= 'A' && s.front() <= 'Z';
}

bool IsPunctuationToken(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto k = Classify(static_cast<unsigned char>(c));
    return k != CharClass::kWord && k != CharClass::kSpace;
  });
}

bool IsClitic(std::string_view s) {
  if (ToLower(s) == "n't") return true;
  return s.size() >= 2 && s.front() == '\'' && IsCliticBody(s.substr(1));
}

bool IsWordToken(std::string_view s) {
  return std::any_of(s.begin(), s.end(), IsWordChar);
}

std::vector<std::string> SplitString(std::string_view s,
                                     std::string_view sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

std::string_view Trim(std::string_view s) {
  const auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::string FormatDouble(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw FormatError("cannot render double");
  return std::string(buf.data(), end);
}

double ParseDouble(std::string_view text) {
  double value = 0;
  text = Trim(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace parchoice

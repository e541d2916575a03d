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

#include "parchoice/ppdb.h"

#include <cctype>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "parchoice/chunker.h"
#include "parchoice/errors.h"

namespace parchoice {
namespace {

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{ToLower(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool ParseContext(std::string_view text, PpdbEntry* e) {
  text = Trim(text);
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') return false;
  const std::string_view inner = text.substr(1, text.size() - 2);
  const size_t slash = inner.find('/');
  if (slash == std::string_view::npos) {
    if (inner.find_first_of(" \t") != std::string_view::npos) return false;
    e->tag = std::string(inner);
    return true;
  }
  e->phrase_pair = true;
  e->x = std::string(inner.substr(0, slash));
  e->y = std::string(inner.substr(slash + 1));
  return !e->x.empty() && !e->y.empty();
}

enum class LineResult { kEntry, kDropped, kMalformed };

LineResult ParseLine(std::string_view line, PpdbEntry* e) {
  const auto fields = SplitString(line, " ||| ");
  if (fields.size() != 6) return LineResult::kMalformed;
  if (!ParseContext(fields[0], e)) return LineResult::kMalformed;
  e->phrase = Words(fields[1]);
  e->paraphrase = Words(fields[2]);
  if (e->phrase.empty() || e->paraphrase.empty()) return LineResult::kMalformed;
  if (Trim(fields[5]) != "Equivalence") return LineResult::kDropped;
  if (e->phrase == e->paraphrase) return LineResult::kDropped;
  return LineResult::kEntry;
}

// Category of the largest phrase starting at `pos`: NP, VP or PP, or S for
// the end of the sentence, punctuation, an unchunked remainder, or a
// subject NP followed by a finite verb.
std::string FollowingCategory(const std::vector<std::string>& tags, size_t pos) {
  if (pos >= tags.size()) return "S";
  if (tags[pos].empty() || !std::isalpha(static_cast<unsigned char>(tags[pos][0]))) return "S";
  ChunkLabel label = ChunkLabel::kRest;
  const size_t end = MatchPhrase(tags, pos, &label);
  if (end == pos) return "S";
  if (label == ChunkLabel::kNP) {
    size_t v = end;
    while (v < tags.size() && IsAdverbTag(tags[v])) ++v;
    if (v < tags.size() && IsFiniteVerbTag(tags[v])) return "S";
  }
  switch (label) {
    case ChunkLabel::kNP: return "NP";
    case ChunkLabel::kVP: return "VP";
    case ChunkLabel::kPP: return "PP";
    case ChunkLabel::kRest: break;
  }
  return "S";
}

// Unmapped PPDB categories (SBAR, ADJP, ...) count as S.
std::string CoarseY(const std::string& y) {
  if (y == "NP" || y == "VP" || y == "PP") return y;
  return "S";
}

}  // namespace

std::string PpdbEntry::Context() const {
  return phrase_pair ? "[" + x + "/" + y + "]" : "[" + tag + "]";
}

const std::vector<PpdbEntry>& PpdbLexicon::Lookup(const std::string& first) const {
  static const std::vector<PpdbEntry> kEmpty;
  const auto it = by_first_.find(first);
  return it == by_first_.end() ? kEmpty : it->second;
}

void PpdbLexicon::Add(PpdbEntry entry) {
  auto [it, inserted] = by_first_.try_emplace(entry.phrase.front());
  if (inserted) order_.push_back(entry.phrase.front());
  it->second.push_back(std::move(entry));
  ++size_;
}

void PpdbLexicon::Save(std::ostream& out) const {
  out << "parchoice-ppdb-v1\n";
  out << "entries\t" << size_ << "\n";
  for (const auto& first : order_) {
    for (const auto& e : by_first_.at(first)) {
      out << e.Context() << '\t' << Join(e.phrase) << '\t' << Join(e.paraphrase)
          << '\n';
    }
  }
}

PpdbLexicon PpdbLexicon::Load(std::istream& in, const std::string& name) {
  std::string line;
  size_t n = 0;
  if (!std::getline(in, line) || line != "parchoice-ppdb-v1") {
    throw FormatError(name, 1, "missing parchoice-ppdb-v1 header");
  }
  ++n;
  if (!std::getline(in, line) || !line.starts_with("entries\t")) {
    throw FormatError(name, 2, "missing entry count");
  }
  ++n;
  const size_t expected = std::stoul(line.substr(8));
  PpdbLexicon lex;
  while (std::getline(in, line)) {
    ++n;
    const auto f = SplitString(line, "\t");
    PpdbEntry e;
    if (f.size() != 3 || !ParseContext(f[0], &e)) {
      throw FormatError(name, n, "expected context<TAB>phrase<TAB>paraphrase");
    }
    e.phrase = Words(f[1]);
    e.paraphrase = Words(f[2]);
    if (e.phrase.empty() || e.paraphrase.empty()) {
      throw FormatError(name, n, "empty phrase");
    }
    lex.Add(std::move(e));
  }
  if (lex.size() != expected) {
    throw FormatError(name, n, "entry count mismatch");
  }
  return lex;
}

PpdbLexicon ParsePpdb(std::istream& in, const std::string& name, bool strict) {
  PpdbLexicon lex;
  std::string line;
  size_t line_no = 0;
  size_t nonblank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    ++nonblank;
    PpdbEntry e;
    switch (ParseLine(line, &e)) {
      case LineResult::kEntry:
        lex.Add(std::move(e));
        break;
      case LineResult::kDropped:
        break;
      case LineResult::kMalformed:
        if (strict) throw FormatError(name, line_no, "malformed PPDB line");
        ++lex.malformed_;
        break;
    }
  }
  if (lex.malformed_ * 2 > nonblank) {
    throw FormatError(name + ": " + std::to_string(lex.malformed_) + " of " +
                      std::to_string(nonblank) + " lines malformed");
  }
  return lex;
}

PpdbLexicon LoadPpdb(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open PPDB file " + path);
  return ParsePpdb(in, path, strict);
}

std::vector<RuleSite> PpdbSites(const TokenSeq& tokens, const PpdbLexicon& lex) {
  std::vector<std::string> tags;
  std::vector<std::string> lower;
  for (const auto& t : tokens) {
    tags.push_back(t.tag);
    lower.push_back(ToLower(t.surface));
  }
  std::map<std::pair<size_t, size_t>, std::vector<TokenSeq>> spans;
  for (size_t i = 0; i < tokens.size(); ++i) {
    for (const PpdbEntry& e : lex.Lookup(lower[i])) {
      const size_t n = e.phrase.size();
      if (i + n > tokens.size()) continue;
      bool match = true;
      for (size_t k = 0; k < n && match; ++k) match = lower[i + k] == e.phrase[k];
      if (!match) continue;
      if (e.phrase_pair) {
        if (FollowingCategory(tags, i + n) != CoarseY(e.y)) continue;
      } else if (n != 1 || e.tag != tokens[i].tag) {
        continue;
      }
      TokenSeq option;
      for (const auto& w : e.paraphrase) {
        Token t(w == "i" ? "I" : w);
        if (!e.phrase_pair && e.paraphrase.size() == 1) t.tag = tokens[i].tag;
        option.push_back(std::move(t));
      }
      if (i == 0 && StartsUpper(tokens[0].surface)) {
        option[0].surface = Capitalize(option[0].surface);
      }
      spans[{i, i + n}].push_back(std::move(option));
    }
  }
  std::vector<RuleSite> sites;
  for (auto& [span, options] : spans) {
    RuleSite site;
    if (MakeSite(tokens, span.first, span.second, options, "ppdb", &site)) {
      sites.push_back(std::move(site));
    }
  }
  return sites;
}

}  // namespace parchoice

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

#include "parchoice/inflection.h"

#include <istream>
#include <ostream>

#include "parchoice/errors.h"

namespace parchoice {
namespace {
constexpr std::string_view kInflectionHeader = "parchoice-inflections-v1";
}  // namespace

std::optional<std::string> InflectionTable::Inflect(std::string_view lemma,
                                                    std::string_view tag) const {
  auto it = entries_.find(std::make_pair(ToLower(lemma), std::string(tag)));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void InflectionTable::Save(std::ostream& out) const {
  out << kInflectionHeader << '\n';
  for (const auto& [key, surface] : entries_) {
    out << key.first << ' ' << key.second << '\t' << surface << '\n';
  }
}

InflectionTable InflectionTable::Load(std::istream& in, const std::string& name) {
  InflectionTable table;
  std::string line;
  size_t line_no = 1;
  if (!std::getline(in, line) || Trim(line) != kInflectionHeader) {
    throw FormatError(name, line_no, "missing header parchoice-inflections-v1");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    const size_t space = line.find(' ');
    if (tab == std::string::npos || space == std::string::npos || space > tab) {
      throw FormatError(name, line_no, "expected `lemma TAG<TAB>surface`");
    }
    table.entries_[{line.substr(0, space), line.substr(space + 1, tab - space - 1)}] =
        line.substr(tab + 1);
  }
  return table;
}

InflectionTable BuildInflectionTable(const TaggedCorpus& corpus,
                                     const Lemmatizer& lemmatizer) {
  std::map<std::pair<std::string, std::string>, std::map<std::string, size_t>>
      counts;
  for (const auto& sentence : corpus) {
    for (const auto& token : sentence.tokens) {
      if (token.tag.empty()) continue;
      ++counts[{lemmatizer.Lemmatize(token), token.tag}][ToLower(token.surface)];
    }
  }
  if (counts.empty()) throw ResourceError("inflection corpus is empty");
  InflectionTable table;
  for (const auto& [key, surfaces] : counts) {
    const std::string* best = nullptr;
    size_t best_count = 0;
    for (const auto& [surface, count] : surfaces) {
      if (count > best_count) {
        best = &surface;
        best_count = count;
      }
    }
    table.entries_.emplace(key, *best);
  }
  return table;
}

std::optional<std::string> Inflect(std::string_view lemma, std::string_view tag,
                                   const InflectionTable& table) {
  return table.Inflect(lemma, tag);
}

}  // namespace parchoice

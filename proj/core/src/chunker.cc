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

#include "parchoice/chunker.h"

namespace parchoice {
namespace {

bool IsNpHead(std::string_view t) { return IsNounTag(t) || t == "PRP"; }
bool IsDeterminer(std::string_view t) { return t == "DT" || t == "PRP$"; }
bool IsVpTag(std::string_view t) {
  return t == "MD" || t == "VB" || t == "VBD" || t == "VBZ" || t == "VBP" ||
         t == "VBN" || t == "VBG";
}

size_t MatchNp(const std::vector<std::string>& tags, size_t pos) {
  size_t i = pos;
  if (i < tags.size() && IsDeterminer(tags[i])) ++i;
  while (i < tags.size() && IsAdjectiveTag(tags[i])) ++i;
  const size_t heads = i;
  while (i < tags.size() && IsNpHead(tags[i])) ++i;
  return i > heads ? i : pos;
}

size_t MatchPp(const std::vector<std::string>& tags, size_t pos) {
  if (pos >= tags.size() || (tags[pos] != "IN" && tags[pos] != "TO")) return pos;
  const size_t np = MatchNp(tags, pos + 1);
  return np > pos + 1 ? np : pos;
}

size_t MatchVp(const std::vector<std::string>& tags, size_t pos) {
  size_t i = pos;
  while (i < tags.size() && IsVpTag(tags[i])) ++i;
  return i;
}

}  // namespace

std::string_view ChunkLabelName(ChunkLabel label) {
  switch (label) {
    case ChunkLabel::kNP:
      return "NP";
    case ChunkLabel::kVP:
      return "VP";
    case ChunkLabel::kPP:
      return "PP";
    case ChunkLabel::kRest:
      return "S-REST";
  }
  return "?";
}

bool IsNounTag(std::string_view t) {
  return t == "NN" || t == "NNS" || t == "NNP" || t == "NNPS";
}
bool IsVerbTag(std::string_view t) { return t.starts_with("VB"); }
bool IsAdjectiveTag(std::string_view t) { return t.starts_with("JJ"); }
bool IsAdverbTag(std::string_view t) { return t.starts_with("RB"); }
bool IsFiniteVerbTag(std::string_view t) {
  return t == "MD" || t == "VBD" || t == "VBZ" || t == "VBP";
}

size_t MatchPhrase(const std::vector<std::string>& tags, size_t pos,
                   ChunkLabel* label) {
  size_t best = pos;
  ChunkLabel best_label = ChunkLabel::kRest;
  const std::pair<ChunkLabel, size_t> matches[] = {
      {ChunkLabel::kNP, MatchNp(tags, pos)},
      {ChunkLabel::kPP, MatchPp(tags, pos)},
      {ChunkLabel::kVP, MatchVp(tags, pos)},
  };
  for (const auto& [l, end] : matches) {
    if (end > best) {
      best = end;
      best_label = l;
    }
  }
  if (label) *label = best_label;
  return best;
}

std::vector<ChunkSpan> Chunk(const std::vector<std::string>& tags) {
  std::vector<ChunkSpan> spans;
  size_t i = 0;
  size_t rest_begin = 0;
  bool in_rest = false;
  while (i < tags.size()) {
    ChunkLabel label;
    const size_t end = MatchPhrase(tags, i, &label);
    if (end > i) {
      if (in_rest) spans.push_back({ChunkLabel::kRest, rest_begin, i});
      in_rest = false;
      spans.push_back({label, i, end});
      i = end;
    } else {
      if (!in_rest) rest_begin = i;
      in_rest = true;
      ++i;
    }
  }
  if (in_rest) spans.push_back({ChunkLabel::kRest, rest_begin, tags.size()});
  return spans;
}

std::vector<ChunkSpan> Chunk(const TokenSeq& tokens) {
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (const auto& t : tokens) tags.push_back(t.tag);
  return Chunk(tags);
}

}  // namespace parchoice

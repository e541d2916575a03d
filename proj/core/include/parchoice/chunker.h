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

// Deterministic shallow chunker over Penn tags.
//
//   NP = (DT|PRP$)? (JJ|JJR|JJS)* (NN|NNS|NNP|NNPS|PRP)+
//   PP = (IN|TO) NP
//   VP = (MD|VB|VBD|VBZ|VBP|VBN|VBG)+
//
// At each position the longest matching pattern wins; tokens outside any
// match form maximal S-REST runs.

#ifndef PARCHOICE_CHUNKER_H_
#define PARCHOICE_CHUNKER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "parchoice/text.h"

namespace parchoice {

enum class ChunkLabel { kNP, kVP, kPP, kRest };

std::string_view ChunkLabelName(ChunkLabel label);

struct ChunkSpan {
  ChunkLabel label;
  size_t begin;
  size_t end;  // half-open

  friend bool operator==(const ChunkSpan&, const ChunkSpan&) = default;
};

std::vector<ChunkSpan> Chunk(const std::vector<std::string>& tags);
std::vector<ChunkSpan> Chunk(const TokenSeq& tokens);

// End of the longest NP/PP/VP match starting at `pos`, or `pos` when none.
size_t MatchPhrase(const std::vector<std::string>& tags, size_t pos,
                   ChunkLabel* label);

bool IsNounTag(std::string_view tag);       // NN NNS NNP NNPS
bool IsVerbTag(std::string_view tag);       // VB*
bool IsAdjectiveTag(std::string_view tag);  // JJ*
bool IsAdverbTag(std::string_view tag);     // RB*
bool IsFiniteVerbTag(std::string_view tag);  // MD VBD VBZ VBP

}  // namespace parchoice

#endif  // PARCHOICE_CHUNKER_H_

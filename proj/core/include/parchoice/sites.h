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

// Rewrite sites and their combinatorial expansion.

#ifndef PARCHOICE_SITES_H_
#define PARCHOICE_SITES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "parchoice/text.h"

namespace parchoice {

// A span of tokens with mutually substitutable alternatives. options[0] is
// always the span as it appears in the sentence.
struct RuleSite {
  size_t begin = 0;
  size_t end = 0;
  std::vector<TokenSeq> options;
  std::string rule;
};

// Replaces tokens[begin, end) by the chosen option.
TokenSeq ApplyOption(const TokenSeq& tokens, const RuleSite& site,
                     size_t option);

// Builds a site from surface alternatives; drops alternatives equal to the
// original span (case-sensitive) and duplicates. Returns false if fewer
// than two options remain.
bool MakeSite(const TokenSeq& tokens, size_t begin, size_t end,
              const std::vector<TokenSeq>& alternatives, std::string rule,
              RuleSite* site);

struct ExpansionLimits {
  // Characters, vs. `original_text`; branches beyond the cap are pruned.
  size_t edit_cap = 10;
  // Maximum number of candidates produced from one base sequence.
  size_t max_results = 1000;
  // Non-original choices left across the whole expansion, or null for
  // unlimited. Decremented once per substituted site option.
  size_t* substitution_budget = nullptr;
};

// Cartesian product of the site options of `base`, restricted so that no
// two non-original choices overlap. The all-original combination is not
// returned. Each result extends base's trace with one step per substituted
// site and carries its edit distance to `original_text`.
std::vector<CandidateSentence> ExpandSites(const CandidateSentence& base,
                                           std::vector<RuleSite> sites,
                                           const std::string& module,
                                           const std::u32string& original_text,
                                           const ExpansionLimits& limits);

}  // namespace parchoice

#endif  // PARCHOICE_SITES_H_

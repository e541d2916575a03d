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

#include "parchoice/sites.h"

#include <algorithm>
#include <utility>

namespace parchoice {
namespace {

bool SameSurfaces(const TokenSeq& a, const TokenSeq& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].surface != b[i].surface) return false;
  }
  return true;
}

class Expander {
 public:
  Expander(const CandidateSentence& base, std::vector<RuleSite> sites,
           const std::string& module, const std::u32string& original,
           const ExpansionLimits& limits)
      : base_(base),
        sites_(std::move(sites)),
        module_(module),
        original_(original),
        limits_(limits) {
    std::stable_sort(sites_.begin(), sites_.end(),
                     [](const RuleSite& a, const RuleSite& b) {
                       return a.begin != b.begin ? a.begin < b.begin
                                                 : a.end < b.end;
                     });
  }

  std::vector<CandidateSentence> Run() {
    Visit(0, 0);
    return std::move(results_);
  }

 private:
  // Applies the chosen options right to left so earlier spans stay valid.
  TokenSeq Build() const {
    TokenSeq tokens = base_.tokens;
    for (auto it = chosen_.rbegin(); it != chosen_.rend(); ++it) {
      const RuleSite& site = sites_[it->first];
      tokens = ApplyOption(tokens, site, it->second);
    }
    return tokens;
  }

  bool Full() const { return results_.size() >= limits_.max_results; }

  bool BudgetLeft() const {
    return limits_.substitution_budget == nullptr ||
           *limits_.substitution_budget > 0;
  }

  void Visit(size_t k, size_t blocked_until) {
    if (Full()) return;
    if (k == sites_.size()) {
      if (chosen_.empty()) return;
      CandidateSentence c;
      c.tokens = Build();
      c.edit_distance = EditDistance(DecodeUtf8(Detokenize(c.tokens)), original_);
      if (c.edit_distance > limits_.edit_cap) return;
      c.trace = base_.trace;
      for (const auto& [s, o] : chosen_) {
        c.trace.push_back({module_, sites_[s].begin, sites_[s].end, sites_[s].rule});
      }
      results_.push_back(std::move(c));
      return;
    }
    Visit(k + 1, blocked_until);
    const RuleSite& site = sites_[k];
    if (site.begin < blocked_until) return;
    for (size_t o = 1; o < site.options.size(); ++o) {
      if (Full() || !BudgetLeft()) return;
      chosen_.emplace_back(k, o);
      const TokenSeq partial = Build();
      const size_t dist = EditDistance(DecodeUtf8(Detokenize(partial)), original_);
      if (dist <= limits_.edit_cap) {
        if (limits_.substitution_budget) --*limits_.substitution_budget;
        // Zero-width sites never block the next site at the same position.
        Visit(k + 1, std::max(blocked_until, std::max(site.end, site.begin + 1)));
      }
      chosen_.pop_back();
    }
  }

  const CandidateSentence& base_;
  std::vector<RuleSite> sites_;
  const std::string& module_;
  const std::u32string& original_;
  const ExpansionLimits& limits_;
  std::vector<std::pair<size_t, size_t>> chosen_;
  std::vector<CandidateSentence> results_;
};

}  // namespace

TokenSeq ApplyOption(const TokenSeq& tokens, const RuleSite& site,
                     size_t option) {
  TokenSeq out;
  out.reserve(tokens.size() + site.options[option].size());
  out.insert(out.end(), tokens.begin(), tokens.begin() + site.begin);
  out.insert(out.end(), site.options[option].begin(), site.options[option].end());
  out.insert(out.end(), tokens.begin() + site.end, tokens.end());
  return out;
}

bool MakeSite(const TokenSeq& tokens, size_t begin, size_t end,
              const std::vector<TokenSeq>& alternatives, std::string rule,
              RuleSite* site) {
  RuleSite s;
  s.begin = begin;
  s.end = end;
  s.rule = std::move(rule);
  s.options.emplace_back(tokens.begin() + begin, tokens.begin() + end);
  for (const auto& alt : alternatives) {
    const bool seen = std::any_of(s.options.begin(), s.options.end(),
                                  [&](const TokenSeq& o) { return SameSurfaces(o, alt); });
    if (!seen) s.options.push_back(alt);
  }
  if (s.options.size() < 2) return false;
  *site = std::move(s);
  return true;
}

std::vector<CandidateSentence> ExpandSites(const CandidateSentence& base,
                                           std::vector<RuleSite> sites,
                                           const std::string& module,
                                           const std::u32string& original_text,
                                           const ExpansionLimits& limits) {
  if (sites.empty()) return {};
  return Expander(base, std::move(sites), module, original_text, limits).Run();
}

}  // namespace parchoice

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

#include "parchoice/rules.h"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>

#include "parchoice/chunker.h"

namespace parchoice {
namespace {

constexpr std::array<std::string_view, 17> kNegatableAux = {
    "is",     "are",  "was",  "were",  "have",  "has",  "had", "wo", "must",
    "should", "need", "ought", "could", "can", "do", "does", "did"};

const std::vector<std::vector<std::string>>& AffirmedGroups() {
  static const auto* groups = new std::vector<std::vector<std::string>>{
      {"might", "may", "could", "can"},
      {"should", "ought", "must"},
      {"will", "shall"}};
  return *groups;
}

const std::vector<std::vector<std::string>>& NegatedGroups() {
  static const auto* groups = new std::vector<std::vector<std::string>>{
      {"can", "could"}, {"should", "ought", "must"}, {"will", "shall"}};
  return *groups;
}

bool Contains(const auto& list, std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

std::string Lower(const Token& t) { return ToLower(t.surface); }

Token T(std::string surface, std::string tag) {
  return Token(std::move(surface), std::move(tag));
}

// Copies the capitalization of `like` onto the first token of `seq`.
TokenSeq MatchCase(TokenSeq seq, const Token& like) {
  if (!seq.empty() && StartsUpper(like.surface)) {
    seq[0].surface = Capitalize(seq[0].surface);
  }
  return seq;
}

// Modal spelled in full: ca -> can, wo -> will, sha -> shall.
std::string FullModal(std::string_view lower) {
  if (lower == "ca") return "can";
  if (lower == "wo") return "will";
  if (lower == "sha") return "shall";
  return std::string(lower);
}

// Form of a modal in front of a contracted n't.
std::string ContractedModal(std::string_view full) {
  if (full == "can") return "ca";
  if (full == "will") return "wo";
  if (full == "shall") return "sha";
  return std::string(full);
}

bool IsModalToken(const Token& t) {
  static const std::set<std::string, std::less<>> kModals = {
      "might", "may", "could", "can", "ca",   "should", "ought",
      "must",  "will", "wo",   "shall", "sha", "would"};
  if (!kModals.contains(Lower(t))) return false;
  return t.tag.empty() || t.tag == "MD";
}

bool IsProperStart(const Token& t) {
  return t.surface == "I" || t.tag == "NNP" || t.tag == "NNPS";
}

void LowerInitial(TokenSeq& tokens) {
  if (tokens.empty() || IsProperStart(tokens[0])) return;
  tokens[0].surface = ToLower(tokens[0].surface);
}

void CapitalizeInitial(TokenSeq& tokens) {
  if (!tokens.empty()) tokens[0].surface = Capitalize(tokens[0].surface);
}

TokenSeq Concat(std::initializer_list<TokenSeq> parts) {
  TokenSeq out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

TokenSeq Slice(const TokenSeq& t, size_t b, size_t e) {
  return TokenSeq(t.begin() + b, t.begin() + e);
}

std::vector<std::string> Tags(const TokenSeq& t) {
  std::vector<std::string> tags;
  tags.reserve(t.size());
  for (const auto& tok : t) tags.push_back(tok.tag);
  return tags;
}

CandidateSentence Grammar(TokenSeq tokens, const std::string& rule) {
  CandidateSentence c;
  c.tokens = std::move(tokens);
  c.trace.push_back({"grammar", 0, c.tokens.size(), rule});
  return c;
}

void AddSite(std::vector<RuleSite>& sites, const TokenSeq& tokens, size_t b,
             size_t e, std::vector<TokenSeq> alternatives,
             const std::string& rule) {
  RuleSite site;
  if (MakeSite(tokens, b, e, alternatives, rule, &site)) {
    sites.push_back(std::move(site));
  }
}

void ContractionSites(const TokenSeq& t, size_t i,
                      std::vector<RuleSite>& sites) {
  const std::string w = Lower(t[i]);
  const std::string prev = i > 0 ? Lower(t[i - 1]) : "";
  const bool prev_word = i > 0 && IsWordToken(t[i - 1].surface);
  if (w == "not" && i > 0 && Contains(kNegatableAux, FullModal(prev)) &&
      prev != "wo") {
    if (prev == "can" || prev == "will") {
      AddSite(sites, t, i - 1, i + 1,
              {MatchCase({T(ContractedModal(prev), "MD"), T("n't", "RB")},
                         t[i - 1])},
              "contraction");
    } else {
      AddSite(sites, t, i, i + 1, {{T("n't", t[i].tag)}}, "contraction");
    }
  } else if (w == "not" && prev == "will") {
    AddSite(sites, t, i - 1, i + 1,
            {MatchCase({T("wo", "MD"), T("n't", "RB")}, t[i - 1])},
            "contraction");
  } else if (w == "n't" && i > 0) {
    if (prev == "ca" || prev == "wo" || prev == "sha") {
      AddSite(sites, t, i - 1, i + 1,
              {MatchCase({T(FullModal(prev), "MD"), T("not", "RB")}, t[i - 1])},
              "contraction");
    } else {
      AddSite(sites, t, i, i + 1, {{T("not", t[i].tag)}}, "contraction");
    }
  } else if (w == "am" && prev_word) {
    AddSite(sites, t, i, i + 1, {{T("'m", t[i].tag)}}, "contraction");
  } else if (w == "'m") {
    AddSite(sites, t, i, i + 1, {{T("am", t[i].tag)}}, "contraction");
  } else if (w == "are" && prev_word) {
    AddSite(sites, t, i, i + 1, {{T("'re", t[i].tag)}}, "contraction");
  } else if (w == "'re") {
    AddSite(sites, t, i, i + 1, {{T("are", t[i].tag)}}, "contraction");
  } else if (w == "have" &&
             Contains(std::array<std::string_view, 4>{"i", "you", "we", "they"},
                      prev)) {
    AddSite(sites, t, i, i + 1, {{T("'ve", t[i].tag)}}, "contraction");
  } else if (w == "'ve") {
    AddSite(sites, t, i, i + 1, {{T("have", t[i].tag)}}, "contraction");
  }
}

void PronounSites(const TokenSeq& t, size_t i, std::vector<RuleSite>& sites) {
  static const std::array<std::pair<std::string_view, std::string_view>, 3>
      kPairs = {{{"nobody", "no-one"},
                 {"anybody", "anyone"},
                 {"somebody", "someone"}}};
  const std::string w = Lower(t[i]);
  for (const auto& [a, b] : kPairs) {
    std::string_view other;
    if (w == a) other = b;
    if (w == b) other = a;
    if (other.empty()) continue;
    AddSite(sites, t, i, i + 1,
            {MatchCase({T(std::string(other), t[i].tag)}, t[i])},
            "indefinite-pronoun");
  }
}

void ModalSites(const TokenSeq& t, size_t i, std::vector<RuleSite>& sites) {
  if (!IsModalToken(t[i])) return;
  const std::string modal = FullModal(Lower(t[i]));
  const bool negated = i + 1 < t.size() && IsNegation(t[i + 1].surface);
  const auto& groups = negated ? NegatedGroups() : AffirmedGroups();
  const auto group = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
    return Contains(g, modal);
  });
  if (group == groups.end()) return;

  // The span always covers the negation (negated contexts) and the "to"
  // that follows "ought".
  size_t end = i + 1 + (negated ? 1 : 0);
  if (modal == "ought" && end < t.size() && Lower(t[end]) == "to") ++end;
  const bool contracted = negated && t[i + 1].surface == "n't";

  std::vector<TokenSeq> alternatives;
  for (const auto& m : *group) {
    if (m == modal) continue;
    TokenSeq alt = {T(contracted ? ContractedModal(m) : m, "MD")};
    if (negated) alt.push_back(t[i + 1]);
    if (m == "ought") alt.push_back(T("to", "TO"));
    alternatives.push_back(MatchCase(std::move(alt), t[i]));
  }
  AddSite(sites, t, i, end, std::move(alternatives),
          negated ? "modal-negated" : "modal-affirmed");
}

bool IsReflexive(std::string_view lower) {
  return lower.ends_with("self") || lower.ends_with("selves");
}

std::string ObjectCase(std::string_view lower) {
  if (lower == "i") return "me";
  if (lower == "he") return "him";
  if (lower == "she") return "her";
  if (lower == "we") return "us";
  if (lower == "they") return "them";
  return "";
}

std::string SubjectCase(std::string_view lower) {
  if (lower == "me") return "I";
  if (lower == "him") return "he";
  if (lower == "her") return "she";
  if (lower == "us") return "we";
  if (lower == "them") return "they";
  return "";
}

enum class Number { kFirstSingular, kSingular, kPlural };

Number NumberOf(const TokenSeq& np) {
  const Token& head = np.back();
  const std::string w = Lower(head);
  if (head.tag == "PRP") {
    if (w == "i") return Number::kFirstSingular;
    if (w == "you" || w == "we" || w == "they") return Number::kPlural;
    return Number::kSingular;
  }
  if (head.tag == "NNS" || head.tag == "NNPS") return Number::kPlural;
  return Number::kSingular;
}

Token BeForm(bool past, Number number) {
  if (past) {
    return number == Number::kPlural ? T("were", "VBD") : T("was", "VBD");
  }
  if (number == Number::kFirstSingular) return T("am", "VBP");
  return number == Number::kPlural ? T("are", "VBP") : T("is", "VBZ");
}

Token HaveForm(bool past, Number number) {
  if (past) return T("had", "VBD");
  return number == Number::kSingular ? T("has", "VBZ") : T("have", "VBP");
}

bool IsDoForm(std::string_view lower) {
  return lower == "do" || lower == "does" || lower == "did";
}

bool IsHaveForm(std::string_view lower) {
  return lower == "have" || lower == "has" || lower == "had";
}

// Inflects `lemma` to the tense carried by a do-support auxiliary.
Token InflectLikeDo(std::string_view do_form, const std::string& lemma,
                    const Morphology& m) {
  if (do_form == "did") return T(m.Past(lemma), "VBD");
  if (do_form == "does") return T(m.ThirdPersonSingular(lemma), "VBZ");
  return T(lemma, "VBP");
}

// Index of the first VB at or after `from`, skipping adverbs; npos otherwise.
size_t BareVerbAfter(const TokenSeq& t, size_t from, size_t end) {
  for (size_t j = from; j < end; ++j) {
    if (t[j].tag == "VB") return j;
    if (!IsAdverbTag(t[j].tag) || IsNegation(t[j].surface)) break;
  }
  return std::string::npos;
}

}  // namespace

bool IsNegation(std::string_view surface) {
  return surface == "n't" || ToLower(surface) == "not";
}

std::string Morphology::LemmaOf(const Token& token) const {
  if (!token.lemma.empty()) return token.lemma;
  return lemmatizer->Lemmatize(token);
}

std::optional<std::string> Morphology::Participle(
    const std::string& lemma) const {
  if (const VerbForms* v = lemmatizer->forms().Verb(lemma)) return v->participle;
  if (inflections != nullptr) return inflections->Inflect(lemma, "VBN");
  return std::nullopt;
}

std::string Morphology::Past(const std::string& lemma) const {
  if (const VerbForms* v = lemmatizer->forms().Verb(lemma)) return v->past;
  if (inflections != nullptr) {
    if (auto f = inflections->Inflect(lemma, "VBD")) return *f;
  }
  if (lemma.ends_with("e")) return lemma + "d";
  if (lemma.size() > 1 && lemma.back() == 'y' &&
      std::string_view("aeiou").find(lemma[lemma.size() - 2]) ==
          std::string_view::npos) {
    return lemma.substr(0, lemma.size() - 1) + "ied";
  }
  return lemma + "ed";
}

std::string Morphology::ThirdPersonSingular(const std::string& lemma) const {
  if (lemma == "have") return "has";
  if (lemma == "be") return "is";
  if (inflections != nullptr) {
    if (auto f = inflections->Inflect(lemma, "VBZ")) return *f;
  }
  if (lemma.ends_with("s") || lemma.ends_with("sh") || lemma.ends_with("ch") ||
      lemma.ends_with("x") || lemma.ends_with("z") || lemma.ends_with("o")) {
    return lemma + "es";
  }
  if (lemma.size() > 1 && lemma.back() == 'y' &&
      std::string_view("aeiou").find(lemma[lemma.size() - 2]) ==
          std::string_view::npos) {
    return lemma.substr(0, lemma.size() - 1) + "ies";
  }
  return lemma + "s";
}

std::vector<RuleSite> SimpleRuleSites(const Sentence& sentence) {
  return SimpleRuleSites(sentence.tokens);
}

std::vector<RuleSite> SimpleRuleSites(const TokenSeq& tokens) {
  std::vector<RuleSite> sites;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].surface == ",") {
      AddSite(sites, tokens, i, i + 1, {TokenSeq{}}, "comma");
      continue;
    }
    ContractionSites(tokens, i, sites);
    PronounSites(tokens, i, sites);
    ModalSites(tokens, i, sites);
  }
  return sites;
}

std::optional<CandidateSentence> Passivize(const TokenSeq& t,
                                           const Morphology& m) {
  size_t core = t.size();
  while (core > 0 && IsPunctuationToken(t[core - 1].surface)) --core;
  if (core < 3) return std::nullopt;
  for (size_t i = 0; i < core; ++i) {
    if (IsPunctuationToken(t[i].surface)) return std::nullopt;
  }
  const TokenSeq body = Slice(t, 0, core);
  const auto tags = Tags(body);

  ChunkLabel label;
  const size_t subj_end = MatchPhrase(tags, 0, &label);
  if (subj_end == 0 || label != ChunkLabel::kNP) return std::nullopt;

  // Verb group: verbs with at most one negation between them.
  std::vector<size_t> verbs;
  std::optional<size_t> neg;
  size_t group_end = subj_end;
  while (group_end < core) {
    const Token& tok = body[group_end];
    if (tok.tag == "MD" || IsVerbTag(tok.tag)) {
      verbs.push_back(group_end);
    } else if (IsNegation(tok.surface) && !verbs.empty() && !neg) {
      neg = group_end;
    } else {
      break;
    }
    ++group_end;
  }
  if (verbs.empty() || verbs.size() > 2) return std::nullopt;
  if (neg && (verbs.size() != 2 || *neg != verbs[0] + 1)) return std::nullopt;

  const size_t obj_end = MatchPhrase(tags, group_end, &label);
  if (obj_end != core || label != ChunkLabel::kNP) return std::nullopt;

  const Token& main = body[verbs.back()];
  const std::string lemma = m.LemmaOf(main);
  if (lemma == "be" || lemma == "have") return std::nullopt;

  enum class Kind { kSimple, kModal, kPerfect } kind = Kind::kSimple;
  bool past = false;
  std::string modal;
  if (verbs.size() == 1) {
    if (main.tag != "VBD" && main.tag != "VBZ" && main.tag != "VBP") {
      return std::nullopt;
    }
    past = main.tag == "VBD";
  } else {
    const Token& aux = body[verbs[0]];
    const std::string a = Lower(aux);
    if (IsDoForm(a) && main.tag == "VB") {
      past = a == "did";
    } else if (IsModalToken(aux) && main.tag == "VB") {
      kind = Kind::kModal;
      modal = a;
    } else if (IsHaveForm(a) && main.tag == "VBN") {
      kind = Kind::kPerfect;
      past = a == "had";
    } else {
      return std::nullopt;
    }
  }

  const auto participle = m.Participle(lemma);
  if (!participle) return std::nullopt;

  TokenSeq subject = Slice(body, group_end, obj_end);
  TokenSeq agent = Slice(body, 0, subj_end);
  for (const auto& tok : subject) {
    if (IsReflexive(Lower(tok))) return std::nullopt;
  }
  if (subject.size() == 1 && subject[0].tag == "PRP") {
    const std::string s = SubjectCase(Lower(subject[0]));
    if (!s.empty()) subject[0] = T(s, "PRP");
  }
  if (agent.size() == 1 && agent[0].tag == "PRP") {
    const std::string o = ObjectCase(Lower(agent[0]));
    if (!o.empty()) agent[0] = T(o, "PRP");
  }
  LowerInitial(agent);
  CapitalizeInitial(subject);
  const Number number = NumberOf(subject);

  TokenSeq verb_group;
  switch (kind) {
    case Kind::kSimple:
      verb_group.push_back(BeForm(past, number));
      break;
    case Kind::kModal:
      verb_group.push_back(T(modal, "MD"));
      break;
    case Kind::kPerfect:
      verb_group.push_back(HaveForm(past, number));
      break;
  }
  if (neg) verb_group.push_back(body[*neg]);
  if (kind == Kind::kModal) verb_group.push_back(T("be", "VB"));
  if (kind == Kind::kPerfect) verb_group.push_back(T("been", "VBN"));
  verb_group.push_back(T(*participle, "VBN"));

  return Grammar(Concat({subject, verb_group, {T("by", "IN")}, agent,
                         Slice(t, core, t.size())}),
                 "passivize");
}

std::vector<CandidateSentence> NegationWrap(const TokenSeq& t,
                                            const Morphology& m) {
  if (t.empty() || t.back().surface == "?") return {};
  size_t f = 0;
  while (f < t.size() && !IsFiniteVerbTag(t[f].tag)) ++f;
  if (f + 1 >= t.size() || !IsNegation(t[f + 1].surface)) return {};

  TokenSeq body;
  const std::string aux = Lower(t[f]);
  if (IsDoForm(aux)) {
    const size_t v = BareVerbAfter(t, f + 2, t.size());
    if (v == std::string::npos) return {};
    body = Slice(t, 0, f);
    body.insert(body.end(), t.begin() + f + 2, t.begin() + v);
    Token verb = InflectLikeDo(aux, m.LemmaOf(t[v]), m);
    if (f == 0 && StartsUpper(t[f].surface)) verb.surface = Capitalize(verb.surface);
    body.push_back(verb);
    body.insert(body.end(), t.begin() + v + 1, t.end());
  } else {
    body = t;
    if (t[f + 1].surface == "n't") {
      body[f].surface = FullModal(Lower(t[f]));
      if (StartsUpper(t[f].surface)) body[f].surface = Capitalize(body[f].surface);
    }
    body.erase(body.begin() + f + 1);
  }
  LowerInitial(body);

  const TokenSeq prefix = {T("I", "PRP"), T("do", "VBP"), T("n't", "RB"),
                           T("think", "VB")};
  std::vector<CandidateSentence> out;
  out.push_back(Grammar(Concat({prefix, body}), "negation-wrap"));
  out.push_back(Grammar(Concat({prefix, {T("that", "IN")}, body}),
                        "negation-wrap-that"));
  return out;
}

std::vector<CandidateSentence> QuestionRewrite(const TokenSeq& t,
                                               const Morphology& m) {
  static const std::set<std::string, std::less<>> kAux = {
      "is",   "are",   "was", "were",  "am",  "have",  "has",  "had",
      "do",   "does",  "did", "can",   "ca",  "could", "will", "wo",
      "would", "shall", "sha", "should", "may", "might", "must"};
  if (t.size() < 3 || t.back().surface != "?") return {};
  const std::string aux = Lower(t[0]);
  if (!kAux.contains(aux)) return {};

  const size_t end = t.size() - 1;
  size_t pos = 1;
  std::optional<Token> neg;
  if (t[pos].surface == "n't") neg = t[pos++];
  const auto tags = Tags(Slice(t, 0, end));
  ChunkLabel label;
  const size_t subj_end = MatchPhrase(tags, pos, &label);
  if (subj_end == pos || label != ChunkLabel::kNP) return {};
  TokenSeq subject = Slice(t, pos, subj_end);
  LowerInitial(subject);
  size_t rest = subj_end;
  if (!neg && rest < end && Lower(t[rest]) == "not") neg = t[rest++];

  TokenSeq affirmed;
  TokenSeq negated;
  if (IsDoForm(aux)) {
    const size_t v = BareVerbAfter(t, rest, end);
    if (v == std::string::npos) return {};
    affirmed = Concat({subject, Slice(t, rest, v),
                       {InflectLikeDo(aux, m.LemmaOf(t[v]), m)},
                       Slice(t, v + 1, end)});
  } else {
    if (rest == end) return {};
    affirmed = Concat({subject, {T(FullModal(aux), t[0].tag)}, Slice(t, rest, end)});
  }
  if (neg) {
    const std::string aux_form =
        neg->surface == "n't" ? aux : FullModal(aux);
    negated = Concat({subject, {T(aux_form, t[0].tag), *neg}, Slice(t, rest, end)});
  }

  const Token q = t.back();
  const TokenSeq is_it = {T("Is", "VBZ"), T("it", "PRP")};
  const TokenSeq is_it_not = {T("Is", "VBZ"), T("it", "PRP"), T("not", "RB")};
  const TokenSeq isnt_it = {T("Is", "VBZ"), T("n't", "RB"), T("it", "PRP")};
  const TokenSeq true_that = {T("true", "JJ"), T("that", "IN")};
  const TokenSeq that = {T("that", "IN")};

  std::vector<CandidateSentence> out;
  const TokenSeq& declarative = neg ? negated : affirmed;
  out.push_back(Grammar(Concat({is_it, true_that, declarative, {q}}),
                        "question-rewrite"));
  out.push_back(Grammar(Concat({is_it, that, declarative, {q}}), "question-rewrite"));
  if (neg) {
    for (const TokenSeq* head : {&is_it_not, &isnt_it}) {
      out.push_back(Grammar(Concat({*head, true_that, affirmed, {q}}),
                            "question-rewrite-negative"));
      out.push_back(Grammar(Concat({*head, that, affirmed, {q}}),
                            "question-rewrite-negative"));
    }
  }
  return out;
}

std::vector<CandidateSentence> GrammarCandidates(const TokenSeq& tokens,
                                                 const Morphology& m) {
  std::vector<CandidateSentence> out;
  const auto passive = Passivize(tokens, m);
  if (passive) out.push_back(*passive);
  for (auto& c : NegationWrap(tokens, m)) out.push_back(std::move(c));
  if (passive) {
    for (auto& c : NegationWrap(passive->tokens, m)) {
      c.trace.insert(c.trace.begin(), passive->trace.front());
      out.push_back(std::move(c));
    }
  }
  for (auto& c : QuestionRewrite(tokens, m)) out.push_back(std::move(c));
  return out;
}

}  // namespace parchoice

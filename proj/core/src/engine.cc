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

#include "parchoice/engine.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "parchoice/errors.h"
#include "parchoice/meteor.h"
#include "parchoice/ppdb.h"
#include "parchoice/rules.h"
#include "parchoice/sites.h"
#include "parchoice/typos.h"
#include "parchoice/wordnet.h"

namespace parchoice {
namespace {

// Results gathered per stage before ordering and truncation, as a multiple
// of the beam.
constexpr size_t kStageCollectFactor = 8;

bool FullyTagged(const TokenSeq& tokens) {
  return std::all_of(tokens.begin(), tokens.end(),
                     [](const Token& t) { return !t.tag.empty(); });
}

std::vector<std::string> SurfaceKey(const TokenSeq& tokens) { return Surfaces(tokens); }

class Pipeline {
 public:
  Pipeline(const Sentence& sentence, const ResourceBundle& r, const GenerationCaps& caps,
           const std::string& target_class, GenerationStats* stats)
      : r_(r), caps_(caps), stats_(stats), budget_(caps.subs_cap) {
    CandidateSentence original;
    original.tokens = sentence.tokens;
    if (!FullyTagged(original.tokens) && r_.tagger) TagTokens(original.tokens, *r_.tagger);
    original_text_ = DecodeUtf8(Detokenize(original.tokens));
    pool_.push_back(std::move(original));
    typos_ = r_.TyposFor(target_class);
    morphology_ = r_.morphology();
  }

  std::vector<CandidateSentence> Run() {
    GrammarStage();
    Finish("grammar");
    ExpandStage("simple", [](const TokenSeq& t) { return SimpleRuleSites(t); }, nullptr);
    Finish("simple");
    if (r_.ppdb.size() > 0) {
      ExpandStage("ppdb", [&](const TokenSeq& t) { return PpdbSites(t, r_.ppdb); }, &budget_);
    }
    Finish("ppdb");
    if (r_.wordnet) {
      const Lemmatizer& lem = r_.lemmatizer ? *r_.lemmatizer : Lemmatizer::Default();
      ExpandStage("wordnet", [&](const TokenSeq& t) {
        return WordNetSites(t, *r_.wordnet, r_.inflections, lem);
      }, &budget_);
    }
    Finish("wordnet");
    ExpandStage("simple", [](const TokenSeq& t) { return SimpleRuleSites(t); }, nullptr);
    Finish("simple");
    if (r_.spell) {
      static const TypoLexicon kEmpty;
      const TypoLexicon& lex = typos_ ? *typos_ : kEmpty;
      ExpandStage("typos", [&](const TokenSeq& t) {
        return TypoSites(t, lex, *r_.spell, DetectOriginalTypos(t, *r_.spell, r_.spell->max_dist()));
      }, nullptr);
    }
    Finish("typos");
    if (stats_) stats_->substitutions = caps_.subs_cap - budget_;
    return std::move(pool_);
  }

 private:
  void GrammarStage() {
    if (!FullyTagged(pool_.front().tokens)) return;
    for (auto& c : GrammarCandidates(pool_.front().tokens, morphology_)) {
      c.edit_distance = EditDistance(DecodeUtf8(Detokenize(c.tokens)), original_text_);
      pool_.push_back(std::move(c));
    }
  }

  template <typename SiteFn>
  void ExpandStage(const std::string& module, SiteFn sites_of, size_t* budget) {
    const size_t base_count = pool_.size();
    const size_t collect_limit = caps_.beam * kStageCollectFactor;
    for (size_t i = 0; i < base_count && pool_.size() < collect_limit; ++i) {
      if (budget && *budget == 0) break;
      if (!FullyTagged(pool_[i].tokens) && r_.tagger) TagTokens(pool_[i].tokens, *r_.tagger);
      auto sites = sites_of(pool_[i].tokens);
      if (sites.empty()) continue;
      ExpansionLimits limits;
      limits.edit_cap = caps_.edit_cap;
      limits.max_results = std::min(caps_.beam, collect_limit - pool_.size());
      limits.substitution_budget = budget;
      for (auto& c : ExpandSites(pool_[i], std::move(sites), module, original_text_, limits)) {
        if (!FullyTagged(c.tokens) && r_.tagger) TagTokens(c.tokens, *r_.tagger);
        pool_.push_back(std::move(c));
      }
    }
  }

  void Finish(const std::string& stage) {
    CandidateSentence original = std::move(pool_.front());
    std::vector<CandidateSentence> rest(std::make_move_iterator(pool_.begin() + 1),
                                        std::make_move_iterator(pool_.end()));
    std::erase_if(rest, [&](const CandidateSentence& c) {
      return c.edit_distance > caps_.edit_cap;
    });
    std::vector<std::string> texts;
    std::vector<size_t> order(rest.size());
    texts.reserve(rest.size());
    for (size_t i = 0; i < rest.size(); ++i) {
      texts.push_back(rest[i].text());
      order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (rest[a].edit_distance != rest[b].edit_distance) {
        return rest[a].edit_distance < rest[b].edit_distance;
      }
      return texts[a] < texts[b];
    });
    std::set<std::vector<std::string>> seen = {SurfaceKey(original.tokens)};
    pool_.clear();
    pool_.push_back(std::move(original));
    for (size_t i : order) {
      if (pool_.size() >= std::max<size_t>(1, caps_.beam)) break;
      if (!seen.insert(SurfaceKey(rest[i].tokens)).second) continue;
      pool_.push_back(std::move(rest[i]));
    }
    if (stats_) stats_->stage_sizes.emplace_back(stage, pool_.size());
  }

  const ResourceBundle& r_;
  const GenerationCaps& caps_;
  GenerationStats* stats_;
  size_t budget_;
  const TypoLexicon* typos_ = nullptr;
  Morphology morphology_;
  std::u32string original_text_;
  std::vector<CandidateSentence> pool_;
};

Sentence ToSentence(const CandidateSentence& c) {
  Sentence s;
  s.tokens = c.tokens;
  s.original_text = Detokenize(c.tokens);
  return s;
}

std::string SentenceText(const Sentence& s) {
  return s.original_text.empty() ? Detokenize(s.tokens) : s.original_text;
}

}  // namespace

std::vector<CandidateSentence> GenerateCandidates(const Sentence& sentence,
                                                  const ResourceBundle& resources,
                                                  const GenerationCaps& caps,
                                                  const std::string& target_class,
                                                  GenerationStats* stats) {
  if (stats) *stats = {};
  return Pipeline(sentence, resources, caps, target_class, stats).Run();
}

size_t SelectSentence(const std::vector<CandidateSentence>& candidates,
                      const Profiler& surrogate, const std::string& source,
                      const std::string& target, double* score) {
  if (candidates.empty()) throw TaskError("no candidates to select from");
  const size_t s = surrogate.ClassIndex(source);
  const size_t t = surrogate.ClassIndex(target);
  if (s == t) throw TaskError("source and target classes must differ");
  size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  std::string best_text;
  for (size_t i = 0; i < candidates.size(); ++i) {
    const std::string text = candidates[i].text();
    const auto p = surrogate.PredictProba(text);
    const double v = p[t] - p[s];
    bool better = v > best_score;
    if (v == best_score) {
      const size_t e = candidates[i].edit_distance;
      const size_t be = candidates[best].edit_distance;
      better = e < be || (e == be && text < best_text);
    }
    if (better) {
      best = i;
      best_score = v;
      best_text = text;
    }
  }
  if (score) *score = best_score;
  return best;
}

TransformResult TransformDocumentSentencewise(const Document& doc,
                                              const ResourceBundle& resources,
                                              const GenerationCaps& caps,
                                              const Profiler* surrogate,
                                              const SentencewiseOptions& options) {
  if (options.mode == SelectionMode::kTargeted && surrogate == nullptr) {
    throw TaskError("targeted selection needs a surrogate profiler");
  }
  Rng rng(options.seed);
  TransformResult result;
  result.original = doc;
  result.document.author_class = doc.author_class;
  result.document.id = doc.id;
  for (const auto& sentence : doc.sentences) {
    const auto candidates = GenerateCandidates(sentence, resources, caps, options.target);
    SentenceOutcome out;
    out.candidate_count = candidates.size();
    size_t pick = 0;
    if (options.mode == SelectionMode::kRandom) {
      pick = rng.UniformIndex(candidates.size());
    } else {
      pick = SelectSentence(candidates, *surrogate, options.source, options.target, &out.score);
    }
    out.chosen = candidates[pick];
    out.changed = out.chosen.text() != SentenceText(sentence);
    result.document.sentences.push_back(ToSentence(out.chosen));
    result.sentences.push_back(std::move(out));
  }
  return result;
}

void ValidateGaParams(const GaParams& p) {
  if (p.meteor_weight < 0 || p.prob_weight < 0 ||
      std::abs(p.meteor_weight + p.prob_weight - 1.0) > 1e-9) {
    throw TaskError("GA weights must be non-negative and sum to 1");
  }
  if (p.runs_per_iteration == 0 || p.survivors == 0) {
    throw TaskError("GA runs and survivors must be positive");
  }
}

namespace {

class GeneticSearch {
 public:
  static constexpr size_t kOriginal = static_cast<size_t>(-1);
  using Genome = std::vector<size_t>;  // candidate index per sentence

  GeneticSearch(const Document& doc, const ResourceBundle& r, const GenerationCaps& caps,
                const Profiler& profiler, size_t true_index, const GaParams& params,
                const std::string& typo_class)
      : doc_(doc), r_(r), caps_(caps), profiler_(profiler), true_index_(true_index),
        params_(params), typo_class_(typo_class), rng_(params.seed),
        candidates_(doc.sentences.size()), generated_(doc.sentences.size(), false) {
    original_text_ = DocumentText(doc);
    meteor_.stemmer = r.lemmatizer ? r.lemmatizer.get() : &Lemmatizer::Default();
    meteor_.wordnet = r.wordnet ? &*r.wordnet : nullptr;
  }

  struct Evaluation {
    double fitness = 0;
    bool misclassified = false;
  };

  void Run(TransformResult& result) {
    const Genome start(doc_.sentences.size(), kOriginal);
    std::vector<Genome> survivors = {start};
    Evaluate(start);
    for (size_t it = 0; it < params_.max_iterations; ++it) {
      std::vector<Genome> pool = survivors;
      std::set<Genome> in_pool(survivors.begin(), survivors.end());
      for (const Genome& parent : survivors) {
        for (size_t run = 0; run < params_.runs_per_iteration; ++run) {
          Genome child = parent;
          const size_t j = rng_.UniformIndex(child.size());
          const auto& cands = Candidates(j);
          const size_t k = rng_.UniformIndex(cands.size());
          child[j] = k == original_index_[j] ? kOriginal : k;
          Evaluate(child);
          if (in_pool.insert(child).second) pool.push_back(std::move(child));
        }
      }
      std::stable_sort(pool.begin(), pool.end(), [&](const Genome& a, const Genome& b) {
        return cache_.at(a).fitness > cache_.at(b).fitness;
      });
      if (pool.size() > params_.survivors) pool.resize(params_.survivors);
      survivors = std::move(pool);
      result.best_fitness.push_back(cache_.at(survivors.front()).fitness);
      result.iterations = it + 1;
      if (best_misclassified_) break;
    }
    const Genome& best = best_misclassified_ ? *best_misclassified_ : survivors.front();
    Materialize(best, result);
    result.misclassified = cache_.at(best).misclassified;
  }

 private:
  const std::vector<CandidateSentence>& Candidates(size_t j) {
    if (!generated_[j]) {
      candidates_[j] = GenerateCandidates(doc_.sentences[j], r_, caps_, typo_class_);
      generated_[j] = true;
      original_index_[j] = 0;  // GenerateCandidates puts the original first
    }
    return candidates_[j];
  }

  std::vector<std::string> SentenceTexts(const Genome& g) {
    std::vector<std::string> out;
    out.reserve(g.size());
    for (size_t j = 0; j < g.size(); ++j) {
      out.push_back(g[j] == kOriginal ? SentenceText(doc_.sentences[j])
                                      : candidates_[j][g[j]].text());
    }
    return out;
  }

  const Evaluation& Evaluate(const Genome& g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    const auto texts = SentenceTexts(g);
    std::string joined;
    for (const auto& t : texts) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    const auto p = profiler_.PredictProbaSentences(texts);
    Evaluation e;
    e.misclassified = Argmax(p) != true_index_;
    e.fitness = params_.prob_weight * (1.0 - p[true_index_]);
    if (params_.meteor_weight > 0) {
      e.fitness += params_.meteor_weight * MeteorScore(joined, original_text_, meteor_);
    }
    it = cache_.emplace(g, e).first;
    if (e.misclassified &&
        (!best_misclassified_ || e.fitness > cache_.at(*best_misclassified_).fitness)) {
      best_misclassified_ = g;
    }
    return it->second;
  }

  void Materialize(const Genome& g, TransformResult& result) {
    result.document.sentences.clear();
    result.sentences.clear();
    for (size_t j = 0; j < g.size(); ++j) {
      SentenceOutcome out;
      if (g[j] == kOriginal) {
        out.chosen.tokens = doc_.sentences[j].tokens;
      } else {
        out.chosen = candidates_[j][g[j]];
      }
      out.candidate_count = generated_[j] ? candidates_[j].size() : 0;
      out.changed = out.chosen.text() != SentenceText(doc_.sentences[j]);
      result.document.sentences.push_back(
          g[j] == kOriginal ? doc_.sentences[j] : ToSentence(out.chosen));
      result.sentences.push_back(std::move(out));
    }
  }

  const Document& doc_;
  const ResourceBundle& r_;
  const GenerationCaps& caps_;
  const Profiler& profiler_;
  size_t true_index_;
  const GaParams& params_;
  const std::string& typo_class_;
  Rng rng_;
  std::string original_text_;
  MeteorResources meteor_;
  std::vector<std::vector<CandidateSentence>> candidates_;
  std::vector<bool> generated_;
  std::map<size_t, size_t> original_index_;
  std::map<Genome, Evaluation> cache_;
  std::optional<Genome> best_misclassified_;
};

}  // namespace

TransformResult TransformDocumentGa(const Document& doc, const ResourceBundle& resources,
                                    const GenerationCaps& caps, const Profiler& profiler,
                                    const std::string& true_class, const GaParams& params,
                                    const std::string& typo_class) {
  ValidateGaParams(params);
  const size_t true_index = profiler.ClassIndex(true_class);
  TransformResult result;
  result.original = doc;
  result.document = doc;
  for (const auto& s : doc.sentences) {
    SentenceOutcome out;
    out.chosen.tokens = s.tokens;
    result.sentences.push_back(std::move(out));
  }
  std::vector<std::string> texts;
  for (const auto& s : doc.sentences) texts.push_back(SentenceText(s));
  if (Argmax(profiler.PredictProbaSentences(texts)) != true_index) {
    result.already_misclassified = true;
    result.misclassified = true;
    return result;
  }
  if (params.max_iterations == 0 || doc.sentences.empty()) return result;
  GeneticSearch(doc, resources, caps, profiler, true_index, params, typo_class).Run(result);
  result.document.author_class = doc.author_class;
  result.document.id = doc.id;
  return result;
}

double TransformedSentenceRate(const TransformResult& result) {
  const size_t n = result.original.sentences.size();
  if (n == 0) return 0.0;
  size_t changed = 0;
  for (size_t i = 0; i < n && i < result.document.sentences.size(); ++i) {
    changed += SentenceText(result.document.sentences[i]) !=
               SentenceText(result.original.sentences[i]);
  }
  return static_cast<double>(changed) / static_cast<double>(n);
}

std::string DocumentText(const Document& doc) {
  std::string out;
  for (const auto& s : doc.sentences) {
    if (!out.empty()) out += ' ';
    out += SentenceText(s);
  }
  return out;
}

}  // namespace parchoice

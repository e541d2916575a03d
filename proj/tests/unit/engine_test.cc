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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "fixtures.h"
#include "parchoice/engine.h"
#include "parchoice/errors.h"
#include "parchoice/meteor.h"

namespace parchoice {
namespace {

using fixtures::Tagged;

ResourceBundle DinnerBundle() {
  TaggedCorpus corpus = fixtures::ExampleTaggedCorpus();
  corpus.push_back(Tagged("the/DT supper/NN shares/NNS are/VBP tremendous/JJ ./."));
  corpus.push_back(Tagged("the/DT dinner/NN portions/NNS are/VBP huge/JJ ./."));
  std::istringstream wn("huge.a.01\ta\thuge,tremendous\textremely large\n");
  ResourceBundle b = BuildResources(corpus, WordNet::Parse(wn, "wn"));
  std::istringstream ppdb(
      "[NN] ||| dinner ||| supper ||| f ||| 0-0 ||| Equivalence\n"
      "[NNS] ||| portions ||| shares ||| f ||| 0-0 ||| Equivalence\n"
      "[NN] ||| restriction ||| limitation of individual freedom ||| f ||| 0-0 ||| Equivalence\n");
  b.ppdb = ParsePpdb(ppdb, "ppdb");
  return b;
}

std::vector<std::string> Texts(const std::vector<CandidateSentence>& c) {
  std::vector<std::string> out;
  for (const auto& x : c) out.push_back(x.text());
  return out;
}

bool Contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

Dataset ClassDataset(const SentenceCorpus& corpus, bool test) {
  Dataset d;
  d.classes = corpus.classes;
  for (size_t c = 0; c < corpus.classes.size(); ++c) {
    for (const auto& line : (test ? corpus.test : corpus.train).at(corpus.classes[c])) {
      d.examples.push_back({line, c, std::nullopt});
    }
  }
  return d;
}

Document MakeDoc(const std::vector<std::string>& lines) {
  Document d;
  for (const auto& l : lines) d.sentences.push_back(TokenizeSentence(l));
  return d;
}

TEST(Generate, NoSitesYieldsOriginalOnly) {
  const ResourceBundle b = DinnerBundle();
  const auto c = GenerateCandidates(TokenizeSentence("Zebras graze."), b);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].text(), "Zebras graze.");
  EXPECT_TRUE(c[0].trace.empty());
  EXPECT_EQ(c[0].edit_distance, 0u);
}

TEST(Generate, CombinesSubstitutionsAcrossStages) {
  const ResourceBundle b = DinnerBundle();
  GenerationCaps wide;
  wide.edit_cap = 100;
  GenerationStats stats;
  const auto c = GenerateCandidates(TokenizeSentence("the dinner portions are huge ."), b, wide, {},
                                    &stats);
  const auto texts = Texts(c);
  EXPECT_TRUE(Contains(texts, "the supper shares are tremendous."));
  EXPECT_TRUE(Contains(texts, "the supper portions are huge."));
  std::vector<std::string> stages;
  for (const auto& [name, size] : stats.stage_sizes) stages.push_back(name);
  EXPECT_EQ(stages, (std::vector<std::string>{"grammar", "simple", "ppdb", "wordnet", "simple",
                                              "typos"}));
  for (const auto& x : c) {
    if (x.text() != "the supper shares are tremendous.") continue;
    std::vector<std::string> modules;
    for (const auto& s : x.trace) modules.push_back(s.module);
    EXPECT_EQ(modules, (std::vector<std::string>{"ppdb", "ppdb", "wordnet"}));
  }
}

TEST(Generate, EditCapPrunes) {
  const ResourceBundle b = DinnerBundle();
  const Sentence s = TokenizeSentence("The restriction holds.");
  const auto narrow = Texts(GenerateCandidates(s, b));
  EXPECT_FALSE(Contains(narrow, "The limitation of individual freedom holds."));
  GenerationCaps wide;
  wide.edit_cap = 100;
  EXPECT_TRUE(Contains(Texts(GenerateCandidates(s, b, wide)),
                       "The limitation of individual freedom holds."));
  GenerationCaps zero;
  zero.edit_cap = 0;
  EXPECT_EQ(Texts(GenerateCandidates(s, b, zero)), std::vector<std::string>{"The restriction holds."});
}

TEST(Generate, InvariantsOnFuzzedSentences) {
  const auto style = fixtures::MakeStyleFixture(200, 10, 14);
  const auto typos = fixtures::MakeTypoFixture(3000, 14);
  const ResourceBundle b = fixtures::FullBundle(style, typos);
  for (size_t cap : {0, 3, 10}) {
    GenerationCaps caps;
    caps.edit_cap = cap;
    caps.subs_cap = 4;
    caps.beam = 64;
    for (const auto& line : fixtures::FuzzSentences(150, 20 + cap)) {
      const Sentence s = TokenizeSentence(line);
      GenerationStats stats;
      const auto c = GenerateCandidates(s, b, caps, "B", &stats);
      ASSERT_FALSE(c.empty());
      EXPECT_EQ(c[0].text(), s.original_text);
      EXPECT_LE(c.size(), caps.beam);
      EXPECT_LE(stats.substitutions, caps.subs_cap);
      std::set<std::vector<std::string>> seen;
      for (const auto& x : c) {
        EXPECT_TRUE(seen.insert(Surfaces(x.tokens)).second) << x.text();
        EXPECT_LE(x.edit_distance, cap);
        EXPECT_EQ(x.edit_distance,
                  EditDistance(DecodeUtf8(x.text()), DecodeUtf8(s.original_text)));
        EXPECT_EQ(x.trace.empty(), x.text() == s.original_text) << x.text();
      }
    }
  }
}

class SelectionTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    style_ = new fixtures::StyleFixture(fixtures::MakeStyleFixture(300, 60, 15));
    lr_ = new LogRegProfiler(LogRegProfiler::Train(ClassDataset(style_->corpus, false)));
  }
  static void TearDownTestSuite() {
    delete lr_;
    delete style_;
  }
  static fixtures::StyleFixture* style_;
  static LogRegProfiler* lr_;
};
fixtures::StyleFixture* SelectionTest::style_ = nullptr;
LogRegProfiler* SelectionTest::lr_ = nullptr;

TEST_F(SelectionTest, SingletonAndErrors) {
  const Sentence s = TokenizeSentence(style_->corpus.test.at("A")[0]);
  std::vector<CandidateSentence> only(1);
  only[0].tokens = s.tokens;
  EXPECT_EQ(SelectSentence(only, *lr_, "A", "B"), 0u);
  EXPECT_THROW(SelectSentence(only, *lr_, "A", "A"), TaskError);
  EXPECT_THROW(SelectSentence(only, *lr_, "A", "Z"), TaskError);
}

TEST_F(SelectionTest, PicksMaximumByDirectEnumeration) {
  size_t flipped = 0;
  for (const auto& line : style_->corpus.test.at("A")) {
    const auto c = GenerateCandidates(Tag(TokenizeSentence(line), *style_->resources.tagger),
                                      style_->resources, {}, "B");
    double score = 0;
    const size_t pick = SelectSentence(c, *lr_, "A", "B", &score);
    double best = -2;
    size_t best_i = 0;
    for (size_t i = 0; i < c.size(); ++i) {
      const auto p = lr_->PredictProba(c[i].text());
      const double v = p[1] - p[0];
      if (v > best || (v == best && (c[i].edit_distance < c[best_i].edit_distance ||
                                     (c[i].edit_distance == c[best_i].edit_distance &&
                                      c[i].text() < c[best_i].text())))) {
        best = v;
        best_i = i;
      }
    }
    EXPECT_EQ(pick, best_i) << line;
    EXPECT_EQ(score, best);
    const auto p0 = lr_->PredictProba(c[0].text());
    EXPECT_GE(score, p0[1] - p0[0]);
    if (lr_->Predict(c[0].text()) == 0 && lr_->Predict(c[pick].text()) == 1) ++flipped;
  }
  EXPECT_GT(flipped, 0u);
}

TEST_F(SelectionTest, SentencewiseShapeAndDeterminism) {
  std::vector<std::string> lines(style_->corpus.test.at("A").begin(),
                                 style_->corpus.test.at("A").begin() + 8);
  const Document doc = MakeDoc(lines);
  SentencewiseOptions opts;
  opts.source = "A";
  opts.target = "B";
  opts.mode = SelectionMode::kRandom;
  opts.seed = 3;
  const auto r1 = TransformDocumentSentencewise(doc, style_->resources, {}, nullptr, opts);
  const auto r2 = TransformDocumentSentencewise(doc, style_->resources, {}, nullptr, opts);
  ASSERT_EQ(r1.document.sentences.size(), doc.sentences.size());
  ASSERT_EQ(r1.sentences.size(), doc.sentences.size());
  EXPECT_EQ(DocumentText(r1.document), DocumentText(r2.document));
  for (size_t i = 0; i < r1.sentences.size(); ++i) {
    EXPECT_EQ(r1.sentences[i].chosen.trace, r2.sentences[i].chosen.trace);
  }

  opts.mode = SelectionMode::kTargeted;
  const auto t = TransformDocumentSentencewise(doc, style_->resources, {}, lr_, opts);
  ASSERT_EQ(t.sentences.size(), lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    const double before = lr_->PredictProba(lines[i])[0];
    const double after = lr_->PredictProba(t.document.sentences[i].original_text)[0];
    EXPECT_LE(after, before + 1e-12) << lines[i];
    EXPECT_EQ(t.sentences[i].changed, t.sentences[i].chosen.text() != lines[i]);
  }
}

TEST(TransformedSentenceRate, Counting) {
  TransformResult r;
  EXPECT_EQ(TransformedSentenceRate(r), 0.0);
  r.original = MakeDoc({"One.", "Two.", "Three.", "Four."});
  r.document = r.original;
  EXPECT_EQ(TransformedSentenceRate(r), 0.0);
  r.document.sentences[2] = TokenizeSentence("Drei.");
  EXPECT_EQ(TransformedSentenceRate(r), 0.25);
  r.document = MakeDoc({"Eins.", "Zwei.", "Drei.", "Vier."});
  EXPECT_EQ(TransformedSentenceRate(r), 1.0);
}

TEST(GaParams, Validation) {
  GaParams p;
  EXPECT_NO_THROW(ValidateGaParams(p));
  p.meteor_weight = 0.5;
  EXPECT_THROW(ValidateGaParams(p), TaskError);
  p.prob_weight = 0.5;
  EXPECT_NO_THROW(ValidateGaParams(p));
  p.meteor_weight = -0.5;
  p.prob_weight = 1.5;
  EXPECT_THROW(ValidateGaParams(p), TaskError);
}

class GaTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    docs_ = new fixtures::DocumentFixture(fixtures::MakeDocumentFixture(2));
    Dataset train;
    train.classes = docs_->corpus.authors;
    for (const auto& d : docs_->corpus.train) {
      const size_t label =
          std::find(train.classes.begin(), train.classes.end(), *d.author_class) -
          train.classes.begin();
      train.examples.push_back({DocumentText(d), label, {}});
    }
    TrainOptions options;
    options.tagger = docs_->resources.tagger;
    mlp_ = TrainProfiler(ProfilerKind::kWriteprintsMlp, train, options).release();
  }
  static void TearDownTestSuite() {
    delete mlp_;
    delete docs_;
  }
  bool Correct(const Document& d) const {
    return mlp_->classes()[mlp_->Predict(DocumentText(d))] == *d.author_class;
  }
  static fixtures::DocumentFixture* docs_;
  static Profiler* mlp_;
};
fixtures::DocumentFixture* GaTest::docs_ = nullptr;
Profiler* GaTest::mlp_ = nullptr;

TEST_F(GaTest, ZeroIterationsAndMisclassifiedAreUnchanged) {
  GaParams p;
  p.max_iterations = 0;
  const Document& doc = docs_->corpus.test.front();
  const auto r = TransformDocumentGa(doc, docs_->resources, {}, *mlp_, *doc.author_class, p);
  EXPECT_EQ(DocumentText(r.document), DocumentText(doc));
  EXPECT_EQ(r.iterations, 0u);

  // Labeling a document with a class the profiler does not predict makes it
  // misclassified from the start.
  Document wrong = doc;
  const size_t predicted = mlp_->Predict(DocumentText(doc));
  wrong.author_class = mlp_->classes()[(predicted + 1) % mlp_->classes().size()];
  const auto w = TransformDocumentGa(wrong, docs_->resources, {}, *mlp_, *wrong.author_class, {});
  EXPECT_TRUE(w.already_misclassified);
  EXPECT_EQ(w.iterations, 0u);
  EXPECT_EQ(DocumentText(w.document), DocumentText(wrong));
  EXPECT_EQ(TransformedSentenceRate(w), 0.0);
}

TEST_F(GaTest, PlantedSignalIsRemovedAcrossSeeds) {
  size_t docs_checked = 0;
  for (const auto& doc : docs_->corpus.test) {
    if (!Correct(doc) || docs_checked == 3) continue;
    ++docs_checked;
    size_t successes = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
      GaParams p;
      p.seed = seed;
      const auto r = TransformDocumentGa(doc, docs_->resources, {}, *mlp_, *doc.author_class, p);
      EXPECT_EQ(r.document.sentences.size(), doc.sentences.size());
      EXPECT_LE(r.iterations, p.max_iterations);
      for (size_t i = 1; i < r.best_fitness.size(); ++i) {
        EXPECT_GE(r.best_fitness[i], r.best_fitness[i - 1]);
      }
      if (r.misclassified) {
        ++successes;
        EXPECT_FALSE(Correct(r.document));
      }
    }
    EXPECT_GE(successes, 18u) << doc.id;
  }
  EXPECT_EQ(docs_checked, 3u);
}

TEST_F(GaTest, Deterministic) {
  GaParams p;
  p.seed = 9;
  p.runs_per_iteration = 20;
  const Document& doc = docs_->corpus.test.back();
  const auto a = TransformDocumentGa(doc, docs_->resources, {}, *mlp_, *doc.author_class, p);
  const auto b = TransformDocumentGa(doc, docs_->resources, {}, *mlp_, *doc.author_class, p);
  EXPECT_EQ(DocumentText(a.document), DocumentText(b.document));
  EXPECT_EQ(a.best_fitness, b.best_fitness);
  EXPECT_EQ(a.iterations, b.iterations);
}

}  // namespace
}  // namespace parchoice

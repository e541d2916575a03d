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

#include <cmath>
#include <sstream>

#include "fixtures.h"
#include "parchoice/errors.h"
#include "parchoice/profiler.h"
#include "parchoice/random.h"
#include "parchoice/writeprints.h"

namespace parchoice {
namespace {

Dataset TwoClass(std::vector<std::pair<std::string, size_t>> rows) {
  Dataset d;
  d.classes = {"c0", "c1"};
  for (auto& [text, label] : rows) d.examples.push_back({std::move(text), label, std::nullopt});
  return d;
}

Dataset StyleDataset(const SentenceCorpus& corpus, bool test) {
  Dataset d;
  d.classes = corpus.classes;
  for (size_t c = 0; c < corpus.classes.size(); ++c) {
    const auto& lines = (test ? corpus.test : corpus.train).at(corpus.classes[c]);
    for (const auto& line : lines) d.examples.push_back({line, c, std::nullopt});
  }
  return d;
}

double Feature(const WriteprintsExtractor& ex, const std::vector<double>& v,
               const std::string& name) {
  const auto names = ex.schema().FeatureNames();
  const auto it = std::find(names.begin(), names.end(), name);
  EXPECT_NE(it, names.end()) << name;
  return it == names.end() ? NAN : v[it - names.begin()];
}

void ExpectDistribution(const std::vector<double>& p, size_t classes) {
  ASSERT_EQ(p.size(), classes);
  double sum = 0;
  for (double x : p) {
    EXPECT_GE(x, 0.0);
    sum += x;
  }
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(Unigram, Featurize) {
  const std::map<std::string, size_t> vocab = {{"a", 0}, {"b", 1}};
  EXPECT_EQ(FeaturizeUnigram("a a b", vocab), (std::map<size_t, double>{{0, 2}, {1, 1}}));
  EXPECT_EQ(FeaturizeUnigram("A a", vocab), (std::map<size_t, double>{{0, 2}}));
  EXPECT_TRUE(FeaturizeUnigram("", vocab).empty());
  EXPECT_TRUE(FeaturizeUnigram("zzz q", vocab).empty());
}

TEST(LogReg, SeparableAndErrors) {
  const auto m = LogRegProfiler::Train(TwoClass({{"aaa", 0}, {"bbb", 1}}));
  EXPECT_GT(m.PredictProba("aaa")[0], 0.5);
  EXPECT_GT(m.PredictProba("bbb")[1], 0.5);
  EXPECT_THROW(LogRegProfiler::Train(TwoClass({{"aaa", 0}, {"bbb", 0}})), TaskError);
  Dataset one;
  one.classes = {"c0"};
  one.examples = {{"aaa", 0, std::nullopt}};
  EXPECT_THROW(LogRegProfiler::Train(one), TaskError);
}

TEST(LogReg, ZeroEpochsIsUniform) {
  LrParams p;
  p.epochs = 0;
  const auto m = LogRegProfiler::Train(TwoClass({{"aaa", 0}, {"bbb", 1}}), p);
  for (const char* t : {"aaa", "bbb", "", "unseen words"}) {
    EXPECT_EQ(m.PredictProba(t), (std::vector<double>{0.5, 0.5})) << t;
  }
}

TEST(LogReg, DuplicatedDatasetKeepsArgmax) {
  const auto style = fixtures::MakeStyleFixture(200, 100, 12);
  const Dataset train = StyleDataset(style.corpus, false);
  Dataset doubled = train;
  doubled.examples.insert(doubled.examples.end(), train.examples.begin(), train.examples.end());
  const auto a = LogRegProfiler::Train(train);
  const auto b = LogRegProfiler::Train(doubled);
  for (const auto& e : StyleDataset(style.corpus, true).examples) {
    EXPECT_EQ(a.Predict(e.text), b.Predict(e.text)) << e.text;
  }
}

TEST(LogReg, LossNonIncreasing) {
  const auto style = fixtures::MakeStyleFixture(200, 10, 13);
  for (double l2 : {0.0, 1e-4, 1e-2}) {
    LrParams p;
    p.l2 = l2;
    p.epochs = 30;
    std::vector<double> history;
    LogRegProfiler::Train(StyleDataset(style.corpus, false), p, &history);
    ASSERT_EQ(history.size(), 31u);
    for (size_t i = 1; i < history.size(); ++i) EXPECT_LE(history[i], history[i - 1] + 1e-6) << i;
  }
}

TEST(Writeprints, Examples) {
  const auto style = fixtures::MakeStyleFixture(50, 10, 2);
  const auto schema =
      WriteprintsExtractor::BuildSchema({"hello there friend", "aa aa"}, *style.resources.tagger);
  const WriteprintsExtractor ex(schema, style.resources.tagger);

  const auto hi = ex.Featurize("Hi!");
  EXPECT_EQ(Feature(ex, hi, "words"), 1);
  EXPECT_EQ(Feature(ex, hi, "avg_word_length"), 2);
  EXPECT_EQ(Feature(ex, hi, "digit_pct"), 0);
  EXPECT_EQ(Feature(ex, hi, "punct:!"), 1);
  EXPECT_EQ(Feature(ex, hi, "punct:."), 0);

  const auto aa = ex.Featurize("aa aa");
  EXPECT_EQ(Feature(ex, aa, "hapax"), 0);
  EXPECT_EQ(Feature(ex, aa, "dis"), 1);
  EXPECT_EQ(Feature(ex, aa, "short_words"), 2);

  const auto a1 = ex.Featurize("A1!");
  EXPECT_NEAR(Feature(ex, a1, "upper_pct"), 100.0 / 3, 1e-12);
  EXPECT_NEAR(Feature(ex, a1, "digit_pct"), 100.0 / 3, 1e-12);
  EXPECT_NEAR(Feature(ex, a1, "special_pct"), 100.0 / 3, 1e-12);
  EXPECT_EQ(Feature(ex, a1, "chars"), 3);
  EXPECT_EQ(Feature(ex, a1, "letters"), 1);
  EXPECT_EQ(Feature(ex, a1, "digits"), 1);
}

TEST(Writeprints, SchemaAndInvariants) {
  const auto style = fixtures::MakeStyleFixture(100, 10, 3);
  std::vector<std::string> texts;
  for (const auto& [c, lines] : style.corpus.train) texts.insert(texts.end(), lines.begin(), lines.end());
  const auto schema = WriteprintsExtractor::BuildSchema(texts, *style.resources.tagger);
  EXPECT_EQ(schema.bigrams.size(), 50u);
  EXPECT_EQ(schema.trigrams.size(), 50u);
  EXPECT_EQ(schema.dimension(), schema.FeatureNames().size());
  std::stringstream ss;
  schema.Save(ss);
  EXPECT_TRUE(WriteprintsSchema::Load(ss, "schema") == schema);

  const WriteprintsExtractor ex(schema, style.resources.tagger);
  const auto names = schema.FeatureNames();
  for (const auto& t : texts) {
    const auto v = ex.Featurize(t);
    ASSERT_EQ(v.size(), schema.dimension());
    EXPECT_EQ(v, ex.Featurize(t + "   \n\t"));
    EXPECT_EQ(v, ex.Featurize(t));
    for (size_t i = 0; i < v.size(); ++i) {
      if (names[i].find("pct") != std::string::npos) {
        EXPECT_GE(v[i], 0);
        EXPECT_LE(v[i], 100);
      }
    }
  }
}

std::vector<std::vector<double>> Cluster(Rng& rng, double cx, double cy, size_t n, double sd) {
  std::vector<std::vector<double>> out;
  for (size_t i = 0; i < n; ++i) out.push_back({cx + sd * rng.Normal(), cy + sd * rng.Normal()});
  return out;
}

double TrainNetwork(MlpNetwork& net, const std::vector<std::vector<double>>& x,
                    const std::vector<size_t>& y, int epochs, double lr) {
  for (int e = 0; e < epochs; ++e) {
    for (size_t i = 0; i < x.size(); ++i) net.Step({x[i]}, {y[i]}, lr);
  }
  size_t ok = 0;
  for (size_t i = 0; i < x.size(); ++i) ok += Argmax(net.Probabilities(x[i])) == y[i];
  return static_cast<double>(ok) / x.size();
}

TEST(Mlp, SeparatesGaussianClusters) {
  Rng rng(4);
  auto x = Cluster(rng, -3, -3, 100, 0.5);
  const auto b = Cluster(rng, 3, 3, 100, 0.5);
  std::vector<size_t> y(100, 0);
  x.insert(x.end(), b.begin(), b.end());
  y.resize(200, 1);
  MlpNetwork net(2, 100, 2, 1);
  EXPECT_GE(TrainNetwork(net, x, y, 200, 0.01), 0.95);
}

TEST(Mlp, OneHiddenUnitCannotFitXor) {
  Rng rng(5);
  std::vector<std::vector<double>> x;
  std::vector<size_t> y;
  for (const auto& [cx, cy, label] : std::vector<std::tuple<double, double, size_t>>{
           {-1, -1, 0}, {1, 1, 0}, {-1, 1, 1}, {1, -1, 1}}) {
    const auto pts = Cluster(rng, cx, cy, 50, 0.1);
    x.insert(x.end(), pts.begin(), pts.end());
    y.insert(y.end(), pts.size(), label);
  }
  for (uint64_t seed : {1, 2, 3}) {
    MlpNetwork narrow(2, 1, 2, seed);
    EXPECT_LE(TrainNetwork(narrow, x, y, 200, 0.05), 0.75);
  }
  MlpNetwork wide(2, 16, 2, 1);
  EXPECT_GE(TrainNetwork(wide, x, y, 200, 0.05), 0.95);
}

TEST(Mlp, GradientMatchesFiniteDifferences) {
  Rng rng(6);
  std::vector<std::vector<double>> x;
  std::vector<size_t> y;
  for (int i = 0; i < 5; ++i) {
    x.push_back({rng.Normal(), rng.Normal(), rng.Normal(), rng.Normal()});
    y.push_back(i % 3);
  }
  MlpNetwork net(4, 6, 3, 11);
  const auto g = net.Gradient(x, y);
  const auto p0 = net.parameters();
  const double h = 1e-6;
  for (size_t i = 0; i < p0.size(); ++i) {
    auto p = p0;
    p[i] += h;
    net.set_parameters(p);
    const double up = net.Loss(x, y);
    p[i] -= 2 * h;
    net.set_parameters(p);
    const double down = net.Loss(x, y);
    const double fd = (up - down) / (2 * h);
    const double denom = std::max({std::abs(fd), std::abs(g[i]), 1e-8});
    EXPECT_LE(std::abs(fd - g[i]) / denom, 1e-4) << "parameter " << i;
  }
  net.set_parameters(p0);
}

TEST(WpMlp, NoSignalPredictsPrior) {
  const auto style = fixtures::MakeStyleFixture(50, 10, 7);
  Dataset d;
  d.classes = {"c0", "c1"};
  for (int i = 0; i < 30; ++i) d.examples.push_back({"The same sentence again.", i < 18 ? 0u : 1u});
  MlpParams p;
  p.hidden = 8;
  p.epochs = 50;
  const auto m = WriteprintsMlpProfiler::Train(d, style.resources.tagger, p);
  EXPECT_NEAR(EvaluateAccuracy(m, d).accuracy, 0.6, 1e-12);
}

TEST(WpMlp, LearnsStyleFixture) {
  const auto style = fixtures::MakeStyleFixture(300, 100, 8);
  MlpParams p;
  p.hidden = 20;
  p.epochs = 30;
  const auto m =
      WriteprintsMlpProfiler::Train(StyleDataset(style.corpus, false), style.resources.tagger, p);
  EXPECT_GE(EvaluateAccuracy(m, StyleDataset(style.corpus, true)).accuracy, 0.8);
  EXPECT_THROW(WriteprintsMlpProfiler::Train(TwoClass({{"a", 0}}), style.resources.tagger, p),
               TaskError);
}

TEST(Accuracy, ExamplesAndErrors) {
  const auto m = LogRegProfiler::Train(TwoClass({{"aaa", 0}, {"bbb", 1}}));
  const auto r = EvaluateAccuracy(m, TwoClass({{"aaa", 0}, {"bbb", 1}, {"aaa aaa", 0}}));
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_EQ(r.correct, (std::vector<size_t>{2, 1}));
  EXPECT_EQ(r.total, (std::vector<size_t>{2, 1}));
  EXPECT_EQ(r.ClassAccuracy(1), 1.0);
  EXPECT_THROW(EvaluateAccuracy(m, TwoClass({})), TaskError);
  EXPECT_NEAR(AccuracyDecrease(0.88, 0.36), 0.52, 1e-12);
  EXPECT_EQ(Argmax({0.5, 0.5}), 0u);
  EXPECT_EQ(Argmax({0.2, 0.4, 0.4}), 1u);
}

TEST(Accuracy, RandomModelWithinBinomialBound) {
  Rng rng(21);
  auto random_text = [&rng] {
    std::string t;
    for (int k = 0; k < 6; ++k) t += "w" + std::to_string(rng.UniformIndex(200)) + " ";
    return t;
  };
  Dataset train = TwoClass({});
  for (int i = 0; i < 400; ++i) train.examples.push_back({random_text(), rng.UniformIndex(2)});
  const auto m = LogRegProfiler::Train(train);
  Dataset test = TwoClass({});
  for (int i = 0; i < 1000; ++i) test.examples.push_back({random_text(), static_cast<size_t>(i % 2)});
  const double sigma = std::sqrt(0.25 / 1000);
  EXPECT_NEAR(EvaluateAccuracy(m, test).accuracy, 0.5, 3 * sigma);
}

TEST(AdversarialRetrain, EmptySetMatchesBaseTraining) {
  const auto style = fixtures::MakeStyleFixture(150, 50, 9);
  const Dataset train = StyleDataset(style.corpus, false);
  TrainOptions opts;
  opts.tagger = style.resources.tagger;
  opts.mlp.hidden = 10;
  opts.mlp.epochs = 5;
  for (auto kind : {ProfilerKind::kUnigramLr, ProfilerKind::kWriteprintsMlp}) {
    const auto base = TrainProfiler(kind, train, opts);
    const auto re = AdversarialRetrain(kind, train, Dataset{}, opts);
    for (const auto& e : StyleDataset(style.corpus, true).examples) {
      EXPECT_EQ(base->PredictProba(e.text), re->PredictProba(e.text));
    }
  }
}

TEST(AdversarialRetrain, RejectsLabelMismatch) {
  const Dataset train = TwoClass({{"aaa", 0}, {"bbb", 1}});
  TrainOptions opts;
  Dataset bad = TwoClass({});
  bad.examples.push_back({"aab", 1, 0});
  EXPECT_THROW(AdversarialRetrain(ProfilerKind::kUnigramLr, train, bad, opts), TaskError);
  Dataset orphan = TwoClass({});
  orphan.examples.push_back({"aab", 0, std::nullopt});
  EXPECT_THROW(AdversarialRetrain(ProfilerKind::kUnigramLr, train, orphan, opts), TaskError);
  Dataset ok = TwoClass({});
  ok.examples.push_back({"aab", 0, 0});
  EXPECT_NO_THROW(AdversarialRetrain(ProfilerKind::kUnigramLr, train, ok, opts));
}

TEST(Persistence, SaveLoadPreservesPredictionsExactly) {
  const auto style = fixtures::MakeStyleFixture(150, 50, 10);
  const Dataset train = StyleDataset(style.corpus, false);
  TrainOptions opts;
  opts.tagger = style.resources.tagger;
  opts.mlp.hidden = 12;
  opts.mlp.epochs = 5;
  for (auto kind : {ProfilerKind::kUnigramLr, ProfilerKind::kWriteprintsMlp}) {
    const auto model = TrainProfiler(kind, train, opts);
    std::stringstream ss;
    model->Save(ss);
    EXPECT_EQ(ss.str().rfind("parchoice-model-v1\n", 0), 0u);
    const auto back = LoadProfiler(ss, style.resources.tagger);
    EXPECT_EQ(back->kind(), kind);
    EXPECT_EQ(back->classes(), model->classes());
    for (const auto& e : StyleDataset(style.corpus, true).examples) {
      EXPECT_EQ(back->PredictProba(e.text), model->PredictProba(e.text));
    }
  }
  std::istringstream junk("something-else\n");
  EXPECT_THROW(LoadProfiler(junk, nullptr), FormatError);
}

TEST(Probabilities, AreDistributionsOnFuzzedInputs) {
  const auto style = fixtures::MakeStyleFixture(150, 10, 11);
  const Dataset train = StyleDataset(style.corpus, false);
  TrainOptions opts;
  opts.tagger = style.resources.tagger;
  opts.mlp.hidden = 12;
  opts.mlp.epochs = 5;
  const auto lr = TrainProfiler(ProfilerKind::kUnigramLr, train, opts);
  const auto mlp = TrainProfiler(ProfilerKind::kWriteprintsMlp, train, opts);
  std::vector<std::string> inputs = fixtures::FuzzSentences(200, 3);
  inputs.push_back("");
  inputs.push_back("!!!! ???? 1234");
  inputs.push_back(std::string(2000, 'x'));
  for (const auto& t : inputs) {
    ExpectDistribution(lr->PredictProba(t), 2);
    ExpectDistribution(mlp->PredictProba(t), 2);
  }
}

TEST(Profiler, KindNamesAndClassIndex) {
  EXPECT_EQ(ParseProfilerKind(ProfilerKindName(ProfilerKind::kUnigramLr)), ProfilerKind::kUnigramLr);
  EXPECT_EQ(ParseProfilerKind(ProfilerKindName(ProfilerKind::kWriteprintsMlp)),
            ProfilerKind::kWriteprintsMlp);
  EXPECT_THROW(ParseProfilerKind("lstm"), TaskError);
  const auto m = LogRegProfiler::Train(TwoClass({{"aaa", 0}, {"bbb", 1}}));
  EXPECT_EQ(m.ClassIndex("c1"), 1u);
  EXPECT_THROW(m.ClassIndex("c9"), TaskError);
}

}  // namespace
}  // namespace parchoice

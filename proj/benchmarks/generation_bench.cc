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

#include <benchmark/benchmark.h>

#include "fixtures.h"
#include "parchoice/engine.h"
#include "parchoice/profiler.h"

namespace parchoice {
namespace {

const fixtures::StyleFixture& Style() {
  static const auto* style = new fixtures::StyleFixture(fixtures::MakeStyleFixture(400, 100, 5));
  return *style;
}

void BM_GenerateCandidates(benchmark::State& state) {
  const auto& style = Style();
  GenerationCaps caps;
  caps.beam = static_cast<size_t>(state.range(0));
  std::vector<Sentence> sentences;
  for (const auto& l : style.corpus.test.at("A")) sentences.push_back(TokenizeSentence(l));
  size_t i = 0, total = 0;
  for (auto _ : state) {
    const auto c = GenerateCandidates(sentences[i++ % sentences.size()], style.resources, caps);
    total += c.size();
    benchmark::DoNotOptimize(c.data());
  }
  state.counters["candidates"] =
      benchmark::Counter(static_cast<double>(total), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_GenerateCandidates)->Arg(64)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_SelectSentence(benchmark::State& state) {
  const auto& style = Style();
  Dataset d;
  d.classes = style.corpus.classes;
  for (size_t c = 0; c < d.classes.size(); ++c) {
    for (const auto& l : style.corpus.train.at(d.classes[c])) d.examples.push_back({l, c, {}});
  }
  const auto lr = LogRegProfiler::Train(d);
  const auto candidates =
      GenerateCandidates(TokenizeSentence(style.corpus.test.at("A")[0]), style.resources);
  for (auto _ : state) benchmark::DoNotOptimize(SelectSentence(candidates, lr, "A", "B"));
  state.counters["candidates"] = static_cast<double>(candidates.size());
}
BENCHMARK(BM_SelectSentence)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace parchoice

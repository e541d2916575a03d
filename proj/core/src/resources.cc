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

#include "parchoice/resources.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_set>

#include "parchoice/errors.h"

namespace parchoice {
namespace {

namespace fs = std::filesystem;

std::shared_ptr<const Lemmatizer> PrimedLemmatizer(const TaggedCorpus& corpus,
                                                   const std::optional<WordNet>& wn) {
  std::unordered_set<std::string> known;
  if (wn) {
    for (const auto& l : wn->Lemmas()) {
      if (l.find('_') == std::string::npos) known.insert(l);
    }
  }
  for (const auto& s : corpus) {
    for (const auto& t : s.tokens) {
      if (t.tag == "VB" || t.tag == "NN" || t.tag == "JJ") known.insert(ToLower(t.surface));
    }
  }
  auto lem = std::make_shared<Lemmatizer>();
  lem->SetKnownLemmas(std::move(known));
  return lem;
}

std::ofstream OpenOut(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + p.string());
  return out;
}

std::ifstream OpenIn(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ResourceError("cannot read " + p.string());
  return in;
}

}  // namespace

Morphology ResourceBundle::morphology() const {
  Morphology m;
  if (lemmatizer) m.lemmatizer = lemmatizer.get();
  m.inflections = &inflections;
  return m;
}

const TypoLexicon* ResourceBundle::TyposFor(const std::string& target_class) const {
  const auto it = typos.find(target_class);
  return it == typos.end() ? nullptr : &it->second;
}

ResourceBundle BuildResources(const TaggedCorpus& corpus, std::optional<WordNet> wordnet) {
  ResourceBundle b;
  b.tagger = std::make_shared<TaggerModel>(TrainTagger(corpus));
  b.lemmatizer = PrimedLemmatizer(corpus, wordnet);
  b.inflections = BuildInflectionTable(corpus, *b.lemmatizer);
  b.wordnet = std::move(wordnet);
  return b;
}

ResourceBundle BuildResources(const ResourceInputs& inputs) {
  if (inputs.tagged_corpus.empty()) throw ResourceError("a tagged corpus is required");
  std::optional<WordNet> wn;
  if (!inputs.wordnet.empty()) wn = WordNet::Load(inputs.wordnet);
  ResourceBundle b = BuildResources(ReadTaggedCorpus(inputs.tagged_corpus), std::move(wn));
  if (!inputs.ppdb.empty()) b.ppdb = LoadPpdb(inputs.ppdb, inputs.strict);
  if (!inputs.spell.empty()) {
    b.spell = SpellLexicon::Load(inputs.spell, inputs.typo_max_dist);
    for (const auto& [cls, sentences] : inputs.typo_corpora) {
      b.typos.emplace(cls, BuildTypoLexicon(sentences, *b.spell, inputs.typo_max_dist, cls));
    }
  }
  return b;
}

void SaveResources(const ResourceBundle& b, const std::string& dir) {
  fs::create_directories(dir);
  const fs::path root(dir);
  if (!b.tagger) throw ResourceError("bundle has no tagger");
  {
    auto out = OpenOut(root / "tagger.model");
    b.tagger->Save(out);
  }
  if (b.lemmatizer) {
    std::set<std::string> sorted(b.lemmatizer->known_lemmas().begin(),
                                 b.lemmatizer->known_lemmas().end());
    auto out = OpenOut(root / "lemmas.txt");
    for (const auto& l : sorted) out << l << '\n';
  }
  {
    auto out = OpenOut(root / "inflections.tsv");
    b.inflections.Save(out);
  }
  {
    auto out = OpenOut(root / "ppdb.cache");
    b.ppdb.Save(out);
  }
  if (b.wordnet) {
    auto out = OpenOut(root / "wordnet.tsv");
    b.wordnet->Save(out);
  }
  if (b.spell) {
    auto out = OpenOut(root / "spell.tsv");
    b.spell->Save(out);
  }
  for (const auto& [cls, lex] : b.typos) {
    auto out = OpenOut(root / ("typos." + cls + ".tsv"));
    lex.Save(out);
  }
}

ResourceBundle LoadResources(const std::string& dir) {
  const fs::path root(dir);
  if (!fs::is_directory(root)) throw ResourceError("resource directory not found: " + dir);
  ResourceBundle b;
  {
    auto in = OpenIn(root / "tagger.model");
    b.tagger = std::make_shared<TaggerModel>(
        TaggerModel::Load(in, (root / "tagger.model").string()));
  }
  if (fs::exists(root / "wordnet.tsv")) b.wordnet = WordNet::Load((root / "wordnet.tsv").string());
  {
    auto in = OpenIn(root / "inflections.tsv");
    b.inflections = InflectionTable::Load(in, (root / "inflections.tsv").string());
  }
  if (fs::exists(root / "ppdb.cache")) {
    auto in = OpenIn(root / "ppdb.cache");
    b.ppdb = PpdbLexicon::Load(in, (root / "ppdb.cache").string());
  }
  if (fs::exists(root / "spell.tsv")) b.spell = SpellLexicon::Load((root / "spell.tsv").string());
  for (const auto& entry : fs::directory_iterator(root)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("typos.") && name.ends_with(".tsv") && name.size() > 10) {
      auto in = OpenIn(entry.path());
      TypoLexicon lex = TypoLexicon::Load(in, entry.path().string());
      b.typos.emplace(name.substr(6, name.size() - 10), std::move(lex));
    }
  }
  std::unordered_set<std::string> known;
  if (fs::exists(root / "lemmas.txt")) {
    auto in = OpenIn(root / "lemmas.txt");
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) known.insert(line);
    }
  }
  auto lem = std::make_shared<Lemmatizer>();
  lem->SetKnownLemmas(std::move(known));
  b.lemmatizer = std::move(lem);
  return b;
}

std::string ResolveResourceDir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PARCHOICE_RESOURCES"); env && *env) return env;
  throw ResourceError("no resource directory: pass --resources or set PARCHOICE_RESOURCES");
}

}  // namespace parchoice

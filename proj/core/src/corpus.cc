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

#include "parchoice/corpus.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "parchoice/errors.h"

namespace parchoice {
namespace {

namespace fs = std::filesystem;

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() > suffix.size() && s.ends_with(suffix);
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!Trim(line).empty()) lines.emplace_back(Trim(line));
  }
  return lines;
}

void WriteLines(const std::string& path, const std::vector<std::string>& lines) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + path);
  for (const auto& l : lines) out << l << '\n';
}

SentenceCorpus LoadSentenceCorpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw ResourceError("corpus directory not found: " + dir);
  std::set<std::string> classes;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (EndsWith(name, ".train.txt")) classes.insert(name.substr(0, name.size() - 10));
    if (EndsWith(name, ".test.txt")) classes.insert(name.substr(0, name.size() - 9));
  }
  if (classes.empty()) throw ResourceError("no <class>.train.txt files in " + dir);
  SentenceCorpus c;
  for (const auto& cls : classes) {
    const fs::path train = fs::path(dir) / (cls + ".train.txt");
    const fs::path test = fs::path(dir) / (cls + ".test.txt");
    if (!fs::exists(train) || !fs::exists(test)) {
      throw FormatError("class " + cls + " needs both " + cls + ".train.txt and " + cls +
                        ".test.txt");
    }
    c.classes.push_back(cls);
    c.train[cls] = ReadLines(train.string());
    c.test[cls] = ReadLines(test.string());
  }
  return c;
}

void SaveSentenceCorpus(const SentenceCorpus& corpus, const std::string& dir) {
  for (const auto& cls : corpus.classes) {
    WriteLines((fs::path(dir) / (cls + ".train.txt")).string(), corpus.train.at(cls));
    WriteLines((fs::path(dir) / (cls + ".test.txt")).string(), corpus.test.at(cls));
  }
}

DocumentCorpus LoadDocumentCorpus(const std::string& dir, size_t train_per_author) {
  if (!fs::is_directory(dir)) throw ResourceError("corpus directory not found: " + dir);
  DocumentCorpus c;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_directory()) c.authors.push_back(e.path().filename().string());
  }
  std::sort(c.authors.begin(), c.authors.end());
  if (c.authors.empty()) throw ResourceError("no author directories in " + dir);
  for (const auto& author : c.authors) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(fs::path(dir) / author)) {
      if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (size_t i = 0; i < files.size(); ++i) {
      Document d;
      d.sentences = Tokenize(ReadFile(files[i].string()));
      d.author_class = author;
      d.id = author + "/" + files[i].filename().string();
      (i < train_per_author ? c.train : c.test).push_back(std::move(d));
    }
  }
  return c;
}

}  // namespace parchoice

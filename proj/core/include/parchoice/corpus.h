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

// On-disk corpus layouts for sentence-level and document-level tasks.

#ifndef PARCHOICE_CORPUS_H_
#define PARCHOICE_CORPUS_H_

#include <map>
#include <string>
#include <vector>

#include "parchoice/text.h"

namespace parchoice {

// `<class>.train.txt` and `<class>.test.txt`, one sentence per line.
struct SentenceCorpus {
  std::vector<std::string> classes;  // sorted
  std::map<std::string, std::vector<std::string>> train;
  std::map<std::string, std::vector<std::string>> test;
};

// Throws ResourceError when the directory is missing or holds no class,
// FormatError when a class lacks one of its two files.
SentenceCorpus LoadSentenceCorpus(const std::string& dir);
void SaveSentenceCorpus(const SentenceCorpus& corpus, const std::string& dir);

// `<author>/<doc>.txt` trees. The first `train_per_author` documents of
// each author (by file name) are training documents, the rest test.
struct DocumentCorpus {
  std::vector<std::string> authors;  // sorted
  std::vector<Document> train;
  std::vector<Document> test;
};

DocumentCorpus LoadDocumentCorpus(const std::string& dir, size_t train_per_author = 12);

std::vector<std::string> ReadLines(const std::string& path);
void WriteLines(const std::string& path, const std::vector<std::string>& lines);
std::string ReadFile(const std::string& path);

}  // namespace parchoice

#endif  // PARCHOICE_CORPUS_H_

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

#include "parchoice/tagger.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "parchoice/errors.h"

namespace parchoice {
namespace {

constexpr std::string_view kTaggerHeader = "parchoice-tagger-v1";
const std::string kStart = "-START-";
const std::string kStart2 = "-START2-";
const std::string kEnd = "-END-";

std::string Suffix(const std::string& s, size_t n) {
  return s.size() <= n ? s : s.substr(s.size() - n);
}

// Most frequent key; ties go to the lexicographically smallest key.
std::string ArgmaxCount(const std::map<std::string, size_t>& counts) {
  std::string best;
  size_t best_count = 0;
  for (const auto& [key, count] : counts) {
    if (count > best_count) {
      best = key;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

TaggedCorpus ParseTaggedCorpus(std::istream& in, const std::string& name) {
  TaggedCorpus corpus;
  Sentence current;
  std::string line;
  size_t line_no = 0;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.original_text = Detokenize(current.tokens);
    corpus.push_back(std::move(current));
    current = Sentence{};
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (Trim(view).empty()) {
      flush();
      continue;
    }
    const size_t tab = view.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == view.size() ||
        view.find('\t', tab + 1) != std::string_view::npos) {
      throw FormatError(name, line_no, "expected surface<TAB>tag");
    }
    std::string surface(view.substr(0, tab));
    std::string tag(view.substr(tab + 1));
    if (surface.find(' ') != std::string::npos) {
      throw FormatError(name, line_no, "token contains whitespace");
    }
    current.tokens.emplace_back(std::move(surface), std::move(tag));
  }
  flush();
  return corpus;
}

TaggedCorpus ReadTaggedCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot read tagged corpus: " + path);
  return ParseTaggedCorpus(in, path);
}

std::string WordShape(std::string_view word) {
  std::string shape;
  for (char c : word) {
    char k = c;
    if (c >= 'A' && c <= 'Z') {
      k = 'X';
    } else if (c >= 'a' && c <= 'z') {
      k = 'x';
    } else if (c >= '0' && c <= '9') {
      k = 'd';
    } else if (static_cast<unsigned char>(c) >= 0x80) {
      k = 'x';
    }
    if (shape.empty() || shape.back() != k) shape.push_back(k);
  }
  return shape;
}

std::vector<std::string> TaggerFeatures(const std::vector<std::string>& words,
                                        size_t i, const std::string& prev,
                                        const std::string& prev2) {
  const std::string w = ToLower(words[i]);
  const std::string pw = i > 0 ? ToLower(words[i - 1]) : kStart;
  const std::string nw = i + 1 < words.size() ? ToLower(words[i + 1]) : kEnd;
  return {
      "b",
      "w=" + w,
      "s1=" + Suffix(w, 1),
      "s2=" + Suffix(w, 2),
      "s3=" + Suffix(w, 3),
      "t1=" + prev,
      "t2=" + prev2,
      "t12=" + prev + "|" + prev2,
      "pw=" + pw,
      "nw=" + nw,
      "sh=" + WordShape(words[i]),
  };
}

int TaggerModel::TagIndex(const std::string& tag) const {
  auto it = std::lower_bound(tags_.begin(), tags_.end(), tag);
  if (it == tags_.end() || *it != tag) return -1;
  return static_cast<int>(it - tags_.begin());
}

std::string TaggerModel::FallbackTag(const std::string& lower_word) const {
  auto it = word_tags_.find(lower_word);
  return it != word_tags_.end() ? it->second : default_tag_;
}

double TaggerModel::Weight(const std::string& feature,
                           const std::string& tag) const {
  auto it = weights_.find(feature);
  const int t = TagIndex(tag);
  if (it == weights_.end() || t < 0) return 0.0;
  for (const auto& [idx, w] : it->second) {
    if (idx == t) return w;
  }
  return 0.0;
}

std::vector<std::string> TaggerModel::Predict(
    const std::vector<std::string>& words) const {
  std::vector<std::string> out;
  out.reserve(words.size());
  std::string prev = kStart, prev2 = kStart2;
  std::vector<double> scores(tags_.size());
  for (size_t i = 0; i < words.size(); ++i) {
    std::fill(scores.begin(), scores.end(), 0.0);
    for (const auto& f : TaggerFeatures(words, i, prev, prev2)) {
      auto it = weights_.find(f);
      if (it == weights_.end()) continue;
      for (const auto& [idx, w] : it->second) scores[idx] += w;
    }
    std::string tag;
    if (scores.empty()) {
      tag = default_tag_;
    } else {
      auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
      if (*lo == *hi) {
        tag = FallbackTag(ToLower(words[i]));
      } else {
        tag = tags_[std::max_element(scores.begin(), scores.end()) -
                    scores.begin()];
      }
    }
    prev2 = prev;
    prev = tag;
    out.push_back(std::move(tag));
  }
  return out;
}

void TaggerModel::Save(std::ostream& out) const {
  out << kTaggerHeader << '\n';
  out << "tags\t";
  for (size_t i = 0; i < tags_.size(); ++i) out << (i ? " " : "") << tags_[i];
  out << '\n';
  out << "default\t" << default_tag_ << '\n';
  for (const auto& [word, tag] : word_tags_) {
    out << "word " << word << '\t' << tag << '\n';
  }
  std::vector<const std::string*> features;
  features.reserve(weights_.size());
  for (const auto& [f, _] : weights_) features.push_back(&f);
  std::sort(features.begin(), features.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  for (const std::string* f : features) {
    for (const auto& [idx, w] : weights_.at(*f)) {
      out << "weight " << tags_[idx] << ' ' << *f << '\t' << FormatDouble(w)
          << '\n';
    }
  }
}

TaggerModel TaggerModel::Load(std::istream& in, const std::string& name) {
  TaggerModel model;
  std::string line;
  size_t line_no = 1;
  if (!std::getline(in, line) || Trim(line) != kTaggerHeader) {
    throw FormatError(name, line_no, "missing header parchoice-tagger-v1");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError(name, line_no, "expected key<TAB>value");
    }
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    if (key == "tags") {
      for (auto& t : SplitString(value, " ")) {
        if (!t.empty()) model.tags_.push_back(t);
      }
      if (!std::is_sorted(model.tags_.begin(), model.tags_.end())) {
        throw FormatError(name, line_no, "tag inventory must be sorted");
      }
    } else if (key == "default") {
      model.default_tag_ = value;
    } else if (key.starts_with("word ")) {
      model.word_tags_[key.substr(5)] = value;
    } else if (key.starts_with("weight ")) {
      const size_t sp = key.find(' ', 7);
      if (sp == std::string::npos) {
        throw FormatError(name, line_no, "malformed weight key");
      }
      const int t = model.TagIndex(key.substr(7, sp - 7));
      if (t < 0) throw FormatError(name, line_no, "unknown tag in weight");
      double w = 0;
      try {
        w = ParseDouble(value);
      } catch (const FormatError& e) {
        throw FormatError(name, line_no, e.what());
      }
      model.weights_[key.substr(sp + 1)].emplace_back(t, w);
    } else {
      throw FormatError(name, line_no, "unknown key '" + key + "'");
    }
  }
  return model;
}

// Holds the dense accumulators of averaged-perceptron training.
class TaggerTrainer {
 public:
  explicit TaggerTrainer(const TaggedCorpus& corpus) : corpus_(corpus) {
    std::set<std::string> tags;
    std::map<std::string, size_t> tag_counts;
    std::map<std::string, std::map<std::string, size_t>> word_counts;
    for (const auto& s : corpus) {
      for (const auto& t : s.tokens) {
        tags.insert(t.tag);
        ++tag_counts[t.tag];
        ++word_counts[ToLower(t.surface)][t.tag];
      }
    }
    model_.tags_.assign(tags.begin(), tags.end());
    model_.default_tag_ = ArgmaxCount(tag_counts);
    for (const auto& [w, counts] : word_counts) {
      model_.word_tags_[w] = ArgmaxCount(counts);
    }
  }

  TaggerModel Train(int iterations) {
    const size_t n = model_.tags_.size();
    std::vector<double> scores(n);
    for (int it = 0; it < iterations; ++it) {
      for (const auto& sentence : corpus_) {
        const std::vector<std::string> words = Surfaces(sentence.tokens);
        std::string prev = kStart, prev2 = kStart2;
        for (size_t i = 0; i < words.size(); ++i) {
          const auto features = TaggerFeatures(words, i, prev, prev2);
          std::fill(scores.begin(), scores.end(), 0.0);
          for (const auto& f : features) {
            auto found = weights_.find(f);
            if (found == weights_.end()) continue;
            for (size_t t = 0; t < n; ++t) scores[t] += found->second.w[t];
          }
          int guess;
          auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
          if (*lo == *hi) {
            guess = model_.TagIndex(model_.FallbackTag(ToLower(words[i])));
          } else {
            guess = static_cast<int>(
                std::max_element(scores.begin(), scores.end()) -
                scores.begin());
          }
          const int truth = model_.TagIndex(sentence.tokens[i].tag);
          ++instances_;
          if (guess != truth) {
            for (const auto& f : features) {
              Update(f, truth, 1.0);
              Update(f, guess, -1.0);
            }
          }
          prev2 = prev;
          prev = model_.tags_[guess];
        }
      }
    }
    Average();
    return std::move(model_);
  }

 private:
  struct Accumulator {
    std::vector<double> w, total;
    std::vector<size_t> stamp;
  };

  void Update(const std::string& feature, int tag, double delta) {
    auto& acc = weights_[feature];
    if (acc.w.empty()) {
      const size_t n = model_.tags_.size();
      acc.w.assign(n, 0.0);
      acc.total.assign(n, 0.0);
      acc.stamp.assign(n, 0);
    }
    acc.total[tag] += static_cast<double>(instances_ - acc.stamp[tag]) * acc.w[tag];
    acc.stamp[tag] = instances_;
    acc.w[tag] += delta;
  }

  void Average() {
    if (instances_ == 0) return;
    for (auto& [feature, acc] : weights_) {
      TaggerModel::TagWeights sparse;
      for (size_t t = 0; t < acc.w.size(); ++t) {
        const double total =
            acc.total[t] + static_cast<double>(instances_ - acc.stamp[t]) * acc.w[t];
        const double avg = total / static_cast<double>(instances_);
        if (avg != 0.0) sparse.emplace_back(static_cast<int>(t), avg);
      }
      if (!sparse.empty()) model_.weights_.emplace(feature, std::move(sparse));
    }
  }

  const TaggedCorpus& corpus_;
  TaggerModel model_;
  std::unordered_map<std::string, Accumulator> weights_;
  size_t instances_ = 0;
};

TaggerModel TrainTagger(const TaggedCorpus& corpus, int iterations) {
  size_t tokens = 0;
  for (const auto& s : corpus) tokens += s.tokens.size();
  if (tokens == 0) throw ResourceError("tagger training corpus is empty");
  if (iterations < 0) throw TaskError("tagger iterations must be >= 0");
  return TaggerTrainer(corpus).Train(iterations);
}

void TagTokens(TokenSeq& tokens, const TaggerModel& model) {
  const auto tags = model.Predict(Surfaces(tokens));
  for (size_t i = 0; i < tokens.size(); ++i) tokens[i].tag = tags[i];
}

Sentence Tag(const Sentence& sentence, const TaggerModel& model) {
  Sentence out = sentence;
  TagTokens(out.tokens, model);
  return out;
}

}  // namespace parchoice

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

#include "parchoice/profiler.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_map>

#include "parchoice/errors.h"
#include "parchoice/random.h"
#include "parchoice/text.h"

namespace parchoice {
namespace {

using Sparse = std::map<size_t, double>;

void CheckTrainable(const Dataset& data) {
  if (data.classes.size() < 2) throw TaskError("training needs at least two classes");
  std::vector<size_t> counts(data.classes.size(), 0);
  for (const auto& e : data.examples) {
    if (e.label >= counts.size()) throw TaskError("example label out of range");
    ++counts[e.label];
  }
  for (size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0) throw TaskError("class " + data.classes[c] + " has no examples");
  }
}

std::vector<double> Softmax(std::vector<double> z) {
  const double m = *std::max_element(z.begin(), z.end());
  double sum = 0;
  for (double& v : z) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double& v : z) v /= sum;
  return z;
}

double CrossEntropy(const std::vector<double>& p, size_t label) {
  return -std::log(std::max(p[label], 1e-300));
}

void WriteRow(std::ostream& out, const std::vector<double>& row) {
  for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << FormatDouble(row[i]);
  out << '\n';
}

std::vector<double> ReadRow(std::istream& in, size_t n, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(name + ": truncated model");
  std::vector<double> row;
  if (n == 0) return row;
  for (const auto& f : SplitString(line, "\t")) row.push_back(ParseDouble(f));
  if (row.size() != n) throw FormatError(name + ": wrong row width");
  return row;
}

std::string ReadKeyed(std::istream& in, const std::string& key,
                      const std::string& name) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(key + "\t")) {
    throw FormatError(name + ": expected " + key);
  }
  return line.substr(key.size() + 1);
}

void WriteHeader(std::ostream& out, ProfilerKind kind,
                 const std::vector<std::string>& classes) {
  out << "parchoice-model-v1\n";
  out << "kind\t" << ProfilerKindName(kind) << '\n';
  out << "classes\t" << classes.size() << '\n';
  for (const auto& c : classes) out << c << '\n';
}

}  // namespace

std::string ProfilerKindName(ProfilerKind kind) {
  return kind == ProfilerKind::kUnigramLr ? "unigram-lr" : "writeprints-mlp";
}

ProfilerKind ParseProfilerKind(const std::string& name) {
  if (name == "unigram-lr" || name == "lr") return ProfilerKind::kUnigramLr;
  if (name == "writeprints-mlp" || name == "mlp") return ProfilerKind::kWriteprintsMlp;
  throw TaskError("unknown profiler kind " + name);
}

size_t Argmax(const std::vector<double>& values) {
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

size_t Profiler::ClassIndex(const std::string& label) const {
  const auto it = std::find(classes_.begin(), classes_.end(), label);
  if (it == classes_.end()) throw TaskError("class " + label + " not in model");
  return static_cast<size_t>(it - classes_.begin());
}

std::vector<double> Profiler::PredictProbaSentences(
    const std::vector<std::string>& sentences) const {
  std::string text;
  for (const auto& s : sentences) {
    if (!text.empty()) text += ' ';
    text += s;
  }
  return PredictProba(text);
}

size_t Profiler::Predict(const std::string& text) const {
  return Argmax(PredictProba(text));
}

Sparse FeaturizeUnigram(const std::string& text,
                        const std::map<std::string, size_t>& vocabulary) {
  Sparse x;
  for (const auto& sentence : Tokenize(text)) {
    for (const auto& tok : sentence.tokens) {
      const auto it = vocabulary.find(ToLower(tok.surface));
      if (it != vocabulary.end()) x[it->second] += 1;
    }
  }
  return x;
}

LogRegProfiler LogRegProfiler::Train(const Dataset& data, const LrParams& params,
                                     std::vector<double>* loss_history) {
  CheckTrainable(data);
  LogRegProfiler m;
  m.classes_ = data.classes;
  std::set<std::string> words;
  for (const auto& e : data.examples) {
    for (const auto& sentence : Tokenize(e.text)) {
      for (const auto& tok : sentence.tokens) words.insert(ToLower(tok.surface));
    }
  }
  for (const auto& w : words) m.vocabulary_.emplace(w, m.vocabulary_.size());
  const size_t C = data.classes.size();
  const size_t V = m.vocabulary_.size();

  std::vector<Sparse> xs;
  xs.reserve(data.examples.size());
  for (const auto& e : data.examples) xs.push_back(FeaturizeUnigram(e.text, m.vocabulary_));

  std::vector<std::vector<double>> v(C, std::vector<double>(V, 0.0));
  std::vector<double> b(C, 0.0);
  double scale = 1.0;

  auto loss = [&](const std::vector<std::vector<double>>& vv,
                  const std::vector<double>& bb, double s) {
    double total = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      std::vector<double> z = bb;
      for (size_t c = 0; c < C; ++c) {
        for (const auto& [j, val] : xs[i]) z[c] += s * vv[c][j] * val;
      }
      total += CrossEntropy(Softmax(z), data.examples[i].label);
    }
    double norm = 0;
    for (const auto& row : vv) {
      for (double w : row) norm += w * w;
    }
    return total / static_cast<double>(xs.size()) + 0.5 * params.l2 * s * s * norm;
  };

  Rng rng(params.seed);
  double current = loss(v, b, scale);
  if (loss_history) loss_history->assign(1, current);
  std::vector<size_t> order(xs.size());
  for (int epoch = 1; epoch <= params.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    double lr = params.learning_rate / epoch;
    bool accepted = false;
    for (int attempt = 0; attempt < 10 && !accepted; ++attempt, lr /= 2) {
      auto tv = v;
      auto tb = b;
      double ts = scale;
      for (size_t i : order) {
        std::vector<double> z = tb;
        for (size_t c = 0; c < C; ++c) {
          for (const auto& [j, val] : xs[i]) z[c] += ts * tv[c][j] * val;
        }
        const auto p = Softmax(z);
        ts *= 1.0 - lr * params.l2;
        for (size_t c = 0; c < C; ++c) {
          const double g = p[c] - (c == data.examples[i].label ? 1.0 : 0.0);
          for (const auto& [j, val] : xs[i]) tv[c][j] -= lr * g * val / ts;
          tb[c] -= lr * g;
        }
        if (ts < 1e-6) {
          for (auto& row : tv) {
            for (double& w : row) w *= ts;
          }
          ts = 1.0;
        }
      }
      const double next = loss(tv, tb, ts);
      if (next <= current) {
        v = std::move(tv);
        b = std::move(tb);
        scale = ts;
        current = next;
        accepted = true;
      }
    }
    if (loss_history) loss_history->push_back(current);
  }
  for (auto& row : v) {
    for (double& w : row) w *= scale;
  }
  m.weights_ = std::move(v);
  m.bias_ = std::move(b);
  return m;
}

std::vector<double> LogRegProfiler::PredictProbaFeatures(const Sparse& x) const {
  std::vector<double> z = bias_;
  for (size_t c = 0; c < z.size(); ++c) {
    for (const auto& [j, val] : x) z[c] += weights_[c][j] * val;
  }
  return Softmax(std::move(z));
}

std::vector<double> LogRegProfiler::PredictProba(const std::string& text) const {
  return PredictProbaFeatures(FeaturizeUnigram(text, vocabulary_));
}

double LogRegProfiler::Loss(const Dataset& data, double l2) const {
  double total = 0;
  for (const auto& e : data.examples) {
    total += CrossEntropy(PredictProba(e.text), e.label);
  }
  double norm = 0;
  for (const auto& row : weights_) {
    for (double w : row) norm += w * w;
  }
  const double n = std::max<double>(1.0, static_cast<double>(data.examples.size()));
  return total / n + 0.5 * l2 * norm;
}

void LogRegProfiler::Save(std::ostream& out) const {
  WriteHeader(out, kind(), classes_);
  std::vector<std::string> words(vocabulary_.size());
  for (const auto& [w, i] : vocabulary_) words[i] = w;
  out << "vocabulary\t" << words.size() << '\n';
  for (const auto& w : words) out << w << '\n';
  out << "weights\t" << weights_.size() << '\t' << words.size() << '\n';
  for (const auto& row : weights_) WriteRow(out, row);
  out << "bias\n";
  WriteRow(out, bias_);
}

LogRegProfiler LogRegProfiler::LoadBody(std::istream& in,
                                        std::vector<std::string> classes,
                                        const std::string& name) {
  LogRegProfiler m;
  m.classes_ = std::move(classes);
  const size_t v = std::stoul(ReadKeyed(in, "vocabulary", name));
  std::string line;
  for (size_t i = 0; i < v; ++i) {
    if (!std::getline(in, line)) throw FormatError(name + ": truncated vocabulary");
    m.vocabulary_.emplace(line, i);
  }
  if (m.vocabulary_.size() != v) throw FormatError(name + ": duplicate vocabulary entry");
  const auto dims = SplitString(ReadKeyed(in, "weights", name), "\t");
  if (dims.size() != 2 || std::stoul(dims[0]) != m.classes_.size() ||
      std::stoul(dims[1]) != v) {
    throw FormatError(name + ": weight shape mismatch");
  }
  for (size_t c = 0; c < m.classes_.size(); ++c) m.weights_.push_back(ReadRow(in, v, name));
  if (!std::getline(in, line) || line != "bias") throw FormatError(name + ": expected bias");
  m.bias_ = ReadRow(in, m.classes_.size(), name);
  return m;
}

// ---------------------------------------------------------------------------

namespace {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixMap = Eigen::Map<const Matrix>;
using MutableMatrixMap = Eigen::Map<Matrix>;
using VectorMap = Eigen::Map<const Eigen::VectorXd>;

struct Views {
  MatrixMap w1;
  VectorMap b1;
  MatrixMap w2;
  VectorMap b2;
};

Views MakeViews(const std::vector<double>& p, size_t d, size_t h, size_t c) {
  const double* base = p.data();
  return {MatrixMap(base, h, d), VectorMap(base + h * d, h),
          MatrixMap(base + h * d + h, c, h), VectorMap(base + h * d + h + c * h, c)};
}

Matrix Rows(const std::vector<std::vector<double>>& x, size_t d) {
  Matrix m(x.size(), d);
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < d; ++j) m(i, j) = x[i][j];
  }
  return m;
}

}  // namespace

MlpNetwork::MlpNetwork(size_t inputs, size_t hidden, size_t outputs, uint64_t seed)
    : inputs_(inputs), hidden_(hidden), outputs_(outputs) {
  params_.assign(hidden * inputs + hidden + outputs * hidden + outputs, 0.0);
  Rng rng(seed);
  const double l1 = std::sqrt(6.0 / static_cast<double>(inputs + hidden));
  const double l2 = std::sqrt(6.0 / static_cast<double>(hidden + outputs));
  for (size_t i = 0; i < hidden * inputs; ++i) {
    params_[i] = (2 * rng.UniformDouble() - 1) * l1;
  }
  const size_t w2 = hidden * inputs + hidden;
  for (size_t i = 0; i < outputs * hidden; ++i) {
    params_[w2 + i] = (2 * rng.UniformDouble() - 1) * l2;
  }
}

void MlpNetwork::set_parameters(std::vector<double> p) {
  if (p.size() != params_.size()) throw TaskError("parameter count mismatch");
  params_ = std::move(p);
}

std::vector<double> MlpNetwork::Probabilities(const std::vector<double>& x) const {
  const Views v = MakeViews(params_, inputs_, hidden_, outputs_);
  const Eigen::VectorXd in = VectorMap(x.data(), inputs_);
  const Eigen::VectorXd a = (v.w1 * in + v.b1).cwiseMax(0.0);
  const Eigen::VectorXd z = v.w2 * a + v.b2;
  return Softmax(std::vector<double>(z.data(), z.data() + z.size()));
}

double MlpNetwork::Loss(const std::vector<std::vector<double>>& x,
                        const std::vector<size_t>& y) const {
  double total = 0;
  for (size_t i = 0; i < x.size(); ++i) total += CrossEntropy(Probabilities(x[i]), y[i]);
  return x.empty() ? 0.0 : total / static_cast<double>(x.size());
}

std::vector<double> MlpNetwork::Gradient(const std::vector<std::vector<double>>& x,
                                         const std::vector<size_t>& y) const {
  const Views v = MakeViews(params_, inputs_, hidden_, outputs_);
  std::vector<double> grad(params_.size(), 0.0);
  if (x.empty()) return grad;
  const Matrix in = Rows(x, inputs_);                       // n x d
  const Matrix pre = (in * v.w1.transpose()).rowwise() + v.b1.transpose();
  const Matrix a = pre.cwiseMax(0.0);                       // n x h
  Matrix z = (a * v.w2.transpose()).rowwise() + v.b2.transpose();  // n x c
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    const double m = z.row(i).maxCoeff();
    z.row(i) = (z.row(i).array() - m).exp();
    z.row(i) /= z.row(i).sum();
    z(i, static_cast<Eigen::Index>(y[i])) -= 1.0;
  }
  z /= static_cast<double>(x.size());  // dL/dz
  Matrix da = z * v.w2;                // n x h
  da.array() *= (pre.array() > 0.0).cast<double>();

  double* g = grad.data();
  MutableMatrixMap(g, hidden_, inputs_) = da.transpose() * in;
  Eigen::Map<Eigen::VectorXd>(g + hidden_ * inputs_, hidden_) = da.colwise().sum().transpose();
  MutableMatrixMap(g + hidden_ * inputs_ + hidden_, outputs_, hidden_) = z.transpose() * a;
  Eigen::Map<Eigen::VectorXd>(g + hidden_ * inputs_ + hidden_ + outputs_ * hidden_, outputs_) =
      z.colwise().sum().transpose();
  return grad;
}

void MlpNetwork::Step(const std::vector<std::vector<double>>& x,
                      const std::vector<size_t>& y, double learning_rate) {
  const auto g = Gradient(x, y);
  for (size_t i = 0; i < params_.size(); ++i) params_[i] -= learning_rate * g[i];
}

// ---------------------------------------------------------------------------

struct WriteprintsMlpProfiler::Cache {
  std::mutex mu;
  std::unordered_map<std::string, WriteprintsCounts> counts;
};

WriteprintsMlpProfiler::WriteprintsMlpProfiler() : cache_(std::make_unique<Cache>()) {}

WriteprintsMlpProfiler::WriteprintsMlpProfiler(const WriteprintsMlpProfiler& o)
    : Profiler(o),
      extractor_(std::make_unique<WriteprintsExtractor>(*o.extractor_)),
      mean_(o.mean_),
      scale_(o.scale_),
      network_(o.network_),
      cache_(std::make_unique<Cache>()) {}

WriteprintsMlpProfiler::WriteprintsMlpProfiler(WriteprintsMlpProfiler&&) noexcept = default;
WriteprintsMlpProfiler::~WriteprintsMlpProfiler() = default;

std::vector<double> WriteprintsMlpProfiler::Standardize(const std::vector<double>& v) const {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - mean_[i]) / scale_[i];
  return out;
}

WriteprintsMlpProfiler WriteprintsMlpProfiler::Train(
    const Dataset& data, std::shared_ptr<const TaggerModel> tagger,
    const MlpParams& params) {
  CheckTrainable(data);
  if (!tagger) throw TaskError("Writeprints profiler needs a tagger");
  std::vector<std::string> texts;
  for (const auto& e : data.examples) texts.push_back(e.text);
  WriteprintsMlpProfiler m;
  m.classes_ = data.classes;
  m.extractor_ = std::make_unique<WriteprintsExtractor>(
      WriteprintsExtractor::BuildSchema(texts, *tagger, DefaultFunctionWords(),
                                        params.top_ngrams),
      tagger);

  std::vector<std::vector<double>> x;
  std::vector<size_t> y;
  for (const auto& e : data.examples) {
    x.push_back(m.extractor_->Featurize(e.text));
    y.push_back(e.label);
  }
  const size_t d = m.extractor_->schema().dimension();
  const double n = static_cast<double>(x.size());
  m.mean_.assign(d, 0.0);
  m.scale_.assign(d, 0.0);
  for (const auto& row : x) {
    for (size_t j = 0; j < d; ++j) m.mean_[j] += row[j] / n;
  }
  for (const auto& row : x) {
    for (size_t j = 0; j < d; ++j) m.scale_[j] += (row[j] - m.mean_[j]) * (row[j] - m.mean_[j]) / n;
  }
  for (double& s : m.scale_) s = s > 1e-12 ? std::sqrt(s) : 1.0;
  for (auto& row : x) row = m.Standardize(row);

  m.network_ = MlpNetwork(d, params.hidden, data.classes.size(), params.seed);
  Rng rng(params.seed ^ 0x9E3779B97F4A7C15ULL);
  std::vector<size_t> order(x.size());
  const size_t batch = std::max<size_t>(1, params.batch_size);
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    for (size_t start = 0; start < order.size(); start += batch) {
      std::vector<std::vector<double>> bx;
      std::vector<size_t> by;
      for (size_t k = start; k < std::min(order.size(), start + batch); ++k) {
        bx.push_back(x[order[k]]);
        by.push_back(y[order[k]]);
      }
      m.network_.Step(bx, by, params.learning_rate);
    }
  }
  return m;
}

std::vector<double> WriteprintsMlpProfiler::PredictProbaVector(
    const std::vector<double>& features) const {
  return network_.Probabilities(Standardize(features));
}

std::vector<double> WriteprintsMlpProfiler::PredictProba(const std::string& text) const {
  std::vector<std::string> sentences;
  for (const auto& s : Tokenize(text)) sentences.push_back(s.original_text);
  return PredictProbaSentences(sentences);
}

std::vector<double> WriteprintsMlpProfiler::PredictProbaSentences(
    const std::vector<std::string>& sentences) const {
  const auto& schema = extractor_->schema();
  WriteprintsCounts total;
  total.bigrams.assign(schema.bigrams.size(), 0);
  total.trigrams.assign(schema.trigrams.size(), 0);
  total.function_words.assign(schema.function_words.size(), 0);
  total.pos.assign(schema.pos_tags.size(), 0);
  total.punctuation.assign(schema.punctuation.size(), 0);
  for (const auto& s : sentences) {
    // Re-split so a sentence string holding several sentences counts the
    // same as their separate texts.
    for (const auto& part : Tokenize(s)) {
      const std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->counts.find(part.original_text);
      if (it == cache_->counts.end()) {
        if (cache_->counts.size() > 200000) cache_->counts.clear();
        it = cache_->counts.emplace(part.original_text,
                                    extractor_->CountSentence(part.original_text)).first;
      }
      total.Add(it->second);
    }
  }
  return PredictProbaVector(extractor_->Vector(total));
}

void WriteprintsMlpProfiler::Save(std::ostream& out) const {
  WriteHeader(out, kind(), classes_);
  extractor_->schema().Save(out);
  out << "dims\t" << network_.inputs() << '\t' << network_.hidden() << '\t'
      << network_.outputs() << '\n';
  out << "mean\n";
  WriteRow(out, mean_);
  out << "scale\n";
  WriteRow(out, scale_);
  out << "parameters\t" << network_.parameters().size() << '\n';
  WriteRow(out, network_.parameters());
}

WriteprintsMlpProfiler WriteprintsMlpProfiler::LoadBody(
    std::istream& in, std::vector<std::string> classes,
    std::shared_ptr<const TaggerModel> tagger, const std::string& name) {
  if (!tagger) throw ResourceError(name + ": Writeprints model needs a tagger");
  WriteprintsMlpProfiler m;
  m.classes_ = std::move(classes);
  m.extractor_ = std::make_unique<WriteprintsExtractor>(
      WriteprintsSchema::Load(in, name), std::move(tagger));
  const auto dims = SplitString(ReadKeyed(in, "dims", name), "\t");
  if (dims.size() != 3) throw FormatError(name + ": bad dims");
  const size_t d = std::stoul(dims[0]);
  const size_t h = std::stoul(dims[1]);
  const size_t c = std::stoul(dims[2]);
  if (d != m.extractor_->schema().dimension() || c != m.classes_.size()) {
    throw FormatError(name + ": network shape does not match schema");
  }
  std::string line;
  if (!std::getline(in, line) || line != "mean") throw FormatError(name + ": expected mean");
  m.mean_ = ReadRow(in, d, name);
  if (!std::getline(in, line) || line != "scale") throw FormatError(name + ": expected scale");
  m.scale_ = ReadRow(in, d, name);
  const size_t p = std::stoul(ReadKeyed(in, "parameters", name));
  m.network_ = MlpNetwork(d, h, c, 0);
  if (p != m.network_.parameters().size()) throw FormatError(name + ": parameter count");
  m.network_.set_parameters(ReadRow(in, p, name));
  return m;
}

std::unique_ptr<Profiler> LoadProfiler(std::istream& in,
                                       std::shared_ptr<const TaggerModel> tagger,
                                       const std::string& name) {
  std::string line;
  if (!std::getline(in, line) || line != "parchoice-model-v1") {
    throw FormatError(name, 1, "missing parchoice-model-v1 header");
  }
  const ProfilerKind kind = ParseProfilerKind(ReadKeyed(in, "kind", name));
  const size_t n = std::stoul(ReadKeyed(in, "classes", name));
  std::vector<std::string> classes;
  for (size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw FormatError(name + ": truncated class list");
    classes.push_back(line);
  }
  if (kind == ProfilerKind::kUnigramLr) {
    return std::make_unique<LogRegProfiler>(
        LogRegProfiler::LoadBody(in, std::move(classes), name));
  }
  return std::make_unique<WriteprintsMlpProfiler>(
      WriteprintsMlpProfiler::LoadBody(in, std::move(classes), std::move(tagger), name));
}

std::unique_ptr<Profiler> TrainProfiler(ProfilerKind kind, const Dataset& data,
                                        const TrainOptions& options) {
  if (kind == ProfilerKind::kUnigramLr) {
    return std::make_unique<LogRegProfiler>(LogRegProfiler::Train(data, options.lr));
  }
  return std::make_unique<WriteprintsMlpProfiler>(
      WriteprintsMlpProfiler::Train(data, options.tagger, options.mlp));
}

double AccuracyReport::ClassAccuracy(size_t c) const {
  return total[c] == 0 ? 0.0 : static_cast<double>(correct[c]) / static_cast<double>(total[c]);
}

AccuracyReport EvaluateAccuracy(const Profiler& model, const Dataset& data) {
  if (data.examples.empty()) throw TaskError("cannot evaluate on an empty dataset");
  AccuracyReport r;
  r.correct.assign(data.classes.size(), 0);
  r.total.assign(data.classes.size(), 0);
  size_t hits = 0;
  for (const auto& e : data.examples) {
    if (e.label >= data.classes.size()) throw TaskError("example label out of range");
    const size_t predicted = Argmax(model.PredictProba(e.text));
    const bool ok = model.classes()[predicted] == data.classes[e.label];
    ++r.total[e.label];
    if (ok) {
      ++r.correct[e.label];
      ++hits;
    }
  }
  r.accuracy = static_cast<double>(hits) / static_cast<double>(data.examples.size());
  return r;
}

double AccuracyDecrease(double original, double transformed) {
  return original - transformed;
}

std::unique_ptr<Profiler> AdversarialRetrain(ProfilerKind kind, const Dataset& train,
                                             const Dataset& transformed,
                                             const TrainOptions& options) {
  if (transformed.classes != train.classes && !transformed.examples.empty()) {
    throw TaskError("transformed set uses a different class list");
  }
  Dataset combined = train;
  for (const auto& e : transformed.examples) {
    if (!e.origin || *e.origin >= train.examples.size()) {
      throw TaskError("transformed example without a valid origin");
    }
    if (train.examples[*e.origin].label != e.label) {
      throw TaskError("transformed example label differs from its origin");
    }
    combined.examples.push_back(e);
  }
  return TrainProfiler(kind, combined, options);
}

}  // namespace parchoice

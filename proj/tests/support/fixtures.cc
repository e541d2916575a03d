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

#include "fixtures.h"

#include <sstream>

#include "parchoice/ppdb.h"
#include "parchoice/tagger.h"
#include "parchoice/wordnet.h"

namespace parchoice::fixtures {
namespace {

using Word = std::pair<const char*, const char*>;

const Word& Pick(const std::vector<Word>& words, Rng& rng) {
  return words[rng.UniformIndex(words.size())];
}

void Push(Sentence* s, const Word& w) { s->tokens.emplace_back(w.first, w.second); }

Sentence Finish(Sentence s) {
  s.original_text = Detokenize(s.tokens);
  return s;
}

void Capitalize(Sentence* s) {
  auto& w = s->tokens.front().surface;
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
}

TaggedCorpus Repeat(const TaggedCorpus& c, size_t times) {
  TaggedCorpus out;
  for (size_t i = 0; i < times; ++i) out.insert(out.end(), c.begin(), c.end());
  return out;
}

PpdbLexicon PpdbFromText(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  return ParsePpdb(in, name, true);
}

std::string PpdbLine(const std::string& lhs, const std::string& phrase,
                     const std::string& paraphrase,
                     const std::string& relation = "Equivalence") {
  return lhs + " ||| " + phrase + " ||| " + paraphrase +
         " ||| PPDB2.0Score=3.5 ||| 0-0 ||| " + relation + "\n";
}

// Style fixture vocabulary.
const std::vector<Word> kSubjects = {{"chef", "NN"},    {"family", "NN"},  {"teacher", "NN"},
                                     {"neighbor", "NN"}, {"student", "NN"}, {"farmer", "NN"}};
const std::vector<Word> kSubjectAdjectives = {{"old", "JJ"}, {"young", "JJ"}};
const std::vector<Word> kVerbs = {{"cooked", "VBD"}, {"served", "VBD"}, {"wanted", "VBD"},
                                  {"liked", "VBD"},  {"found", "VBD"},  {"ordered", "VBD"}};
const std::vector<Word> kObjectAdjectives = {{"warm", "JJ"}, {"fresh", "JJ"}, {"simple", "JJ"}};
const std::vector<Word> kObjects = {{"bread", "NN"}, {"soup", "NN"}, {"meal", "NN"}};

}  // namespace

Sentence Tagged(const std::string& notation) {
  Sentence s;
  std::istringstream in(notation);
  for (std::string item; in >> item;) {
    const size_t slash = item.rfind('/');
    s.tokens.emplace_back(item.substr(0, slash), item.substr(slash + 1));
  }
  return Finish(std::move(s));
}

std::string Notation(const Sentence& sentence) {
  std::string out;
  for (const auto& t : sentence.tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface + "/" + t.tag;
  }
  return out;
}

TaggedCorpus ExampleTaggedCorpus() {
  static const char* const kLines[] = {
      "John/NNP saw/VBD Mary/NNP ./.",
      "Mary/NNP saw/VBD John/NNP ./.",
      "John/NNP did/VBD n't/RB see/VB Mary/NNP ./.",
      "Did/VBD John/NNP see/VB Mary/NNP ?/.",
      "Did/VBD n't/RB John/NNP see/VB Mary/NNP ?/.",
      "Mary/NNP was/VBD seen/VBN by/IN John/NNP ./.",
      "Mary/NNP was/VBD n't/RB seen/VBN ./.",
      "John/NNP slept/VBD ./.",
      "John/NNP likes/VBZ Mary/NNP ./.",
      "Mary/NNP saw/VBD the/DT dog/NN ./.",
      "I/PRP am/VBP sorry/JJ I/PRP was/VBD late/JJ ./.",
      "I/PRP am/VBP sorry/JJ for/IN the/DT delay/NN ./.",
      "I/PRP am/VBP sorry/JJ about/IN the/DT noise/NN ./.",
      "I/PRP am/VBP sorry/JJ ,/, he/PRP left/VBD ./.",
      "I/PRP am/VBP sorry/JJ to/TO have/VB to/TO leave/VB ./.",
      "I/PRP regret/VBP to/TO say/VB this/DT ./.",
      "the/DT restriction/NN applies/VBZ to/TO everyone/NN ./.",
      "the/DT new/JJ restriction/NN was/VBD unpopular/JJ ./.",
      "a/DT restriction/NN is/VBZ a/DT limit/NN ./.",
      "we/PRP must/MD co-operate/VB with/IN them/PRP ./.",
      "they/PRP have/VBP gone/VBN home/NN ./.",
      "you/PRP can/MD go/VB now/RB ./.",
      "he/PRP ca/MD n't/RB come/VB today/NN ./.",
      "she/PRP will/MD not/RB help/VB us/PRP ./.",
      "nobody/NN knows/VBZ the/DT answer/NN ./.",
      "the/DT teacher/NN saw/VBD the/DT students/NNS ./.",
      "the/DT students/NNS liked/VBD the/DT teacher/NN ./.",
      "I/PRP do/VBP n't/RB think/VB that/IN John/NNP saw/VBD Mary/NNP ./.",
      "Is/VBZ it/PRP true/JJ that/IN John/NNP saw/VBD Mary/NNP ?/.",
  };
  TaggedCorpus corpus;
  for (const char* line : kLines) corpus.push_back(Tagged(line));
  return corpus;
}

std::string ExamplePpdbText() {
  return PpdbLine("[NN]", "restriction", "constraint") +
         PpdbLine("[VB]", "co-operate", "collaborate") +
         PpdbLine("[S/VP]", "i am sorry to have to", "i regret to") +
         PpdbLine("[S/S]", "i am sorry", "i regret");
}

ResourceBundle ExampleBundle() {
  ResourceBundle b = BuildResources(Repeat(ExampleTaggedCorpus(), 3));
  b.ppdb = PpdbFromText(ExamplePpdbText(), "example.ppdb");
  return b;
}

std::string StylePpdbText() {
  return PpdbLine("[NN]", "dinner", "supper") + PpdbLine("[NN]", "supper", "dinner") +
         PpdbLine("[NNS]", "portions", "shares") + PpdbLine("[NNS]", "shares", "portions") +
         PpdbLine("[JJ]", "huge", "vast") + PpdbLine("[JJ]", "vast", "huge") +
         PpdbLine("[NN]", "soup", "broth", "ForwardEntailment") +
         PpdbLine("[NN]", "meal", "food", "OtherRelated");
}

std::string StyleWordNetText() {
  return "big.a.01\ta\tbig,large\tabove average in size or amount or quantity\n"
         "buy.v.01\tv\tbuy,purchase\tobtain something by paying money for it\n"
         "quickly.r.01\tr\tquickly,rapidly\twith speed or in a short time\n";
}

Sentence StyleSentence(bool a, Rng& rng) {
  Sentence s;
  Push(&s, {"the", "DT"});
  if (rng.UniformDouble() < 0.3) Push(&s, Pick(kSubjectAdjectives, rng));
  Push(&s, Pick(kSubjects, rng));
  if (rng.UniformDouble() < 0.35) {
    Push(&s, a ? Word{"bought", "VBD"} : Word{"purchased", "VBD"});
  } else {
    Push(&s, Pick(kVerbs, rng));
  }
  Push(&s, {"the", "DT"});
  if (rng.UniformDouble() < 0.5) {
    const bool size = rng.UniformDouble() < 0.5;
    Push(&s, a ? Word{size ? "big" : "huge", "JJ"} : Word{size ? "large" : "vast", "JJ"});
  } else {
    Push(&s, Pick(kObjectAdjectives, rng));
  }
  if (rng.UniformDouble() < 0.5) {
    const bool meal = rng.UniformDouble() < 0.5;
    if (meal) {
      Push(&s, a ? Word{"dinner", "NN"} : Word{"supper", "NN"});
    } else {
      Push(&s, a ? Word{"portions", "NNS"} : Word{"shares", "NNS"});
    }
  } else {
    Push(&s, Pick(kObjects, rng));
  }
  const double adverb = rng.UniformDouble();
  if (adverb < 0.35) {
    Push(&s, a ? Word{"quickly", "RB"} : Word{"rapidly", "RB"});
  } else if (adverb < 0.55) {
    Push(&s, {"slowly", "RB"});
  }
  if (rng.UniformDouble() < 0.5) Push(&s, a ? Word{"yesterday", "NN"} : Word{"recently", "RB"});
  Push(&s, {".", "."});
  Capitalize(&s);
  return Finish(std::move(s));
}

StyleFixture MakeStyleFixture(size_t train_per_class, size_t test_per_class, uint64_t seed) {
  StyleFixture f;
  f.marker_pairs = {{"bought", "purchased"}, {"big", "large"},       {"huge", "vast"},
                    {"dinner", "supper"},   {"portions", "shares"}, {"quickly", "rapidly"}};
  f.residual_cues = {"yesterday", "recently"};
  f.corpus.classes = {"A", "B"};
  Rng rng(seed);
  TaggedCorpus tagged = Repeat(ExampleTaggedCorpus(), 2);
  for (const bool a : {true, false}) {
    const std::string cls = a ? "A" : "B";
    auto& train = f.corpus.train[cls];
    auto& test = f.corpus.test[cls];
    for (size_t i = 0; i < train_per_class; ++i) {
      Sentence s = StyleSentence(a, rng);
      if (i < 300) tagged.push_back(s);
      train.push_back(s.original_text);
    }
    for (size_t i = 0; i < test_per_class; ++i) test.push_back(StyleSentence(a, rng).original_text);
  }
  std::istringstream wn(StyleWordNetText());
  f.resources = BuildResources(tagged, WordNet::Parse(wn, "style.wordnet"));
  f.resources.ppdb = PpdbFromText(StylePpdbText(), "style.ppdb");
  return f;
}

namespace {

// Document fixture vocabulary.
const std::vector<Word> kDocNouns = {{"cat", "NN"},   {"dog", "NN"},    {"boy", "NN"},
                                     {"girl", "NN"},  {"bird", "NN"},   {"river", "NN"},
                                     {"city", "NN"},  {"garden", "NN"}, {"window", "NN"},
                                     {"letter", "NN"}};
const std::vector<Word> kDocVerbs = {{"saw", "VBD"},     {"found", "VBD"},   {"liked", "VBD"},
                                     {"watched", "VBD"}, {"painted", "VBD"}, {"visited", "VBD"}};
const std::vector<Word> kDocAdjectives = {{"old", "JJ"},   {"red", "JJ"},   {"small", "JJ"},
                                          {"quiet", "JJ"}, {"green", "JJ"}, {"bright", "JJ"}};

struct Marker {
  const char* word;
  const char* replacement;
  const char* tag;
  enum Slot { kInitial, kDegree, kClause, kPreposition } slot;
};

const Marker kMarkers[] = {
    {"hence", "ergo", "RB", Marker::kInitial},
    {"indeed", "truly", "RB", Marker::kInitial},
    {"perhaps", "maybe", "RB", Marker::kInitial},
    {"nevertheless", "nonetheless", "RB", Marker::kInitial},
    {"otherwise", "else", "RB", Marker::kInitial},
    {"quite", "fairly", "RB", Marker::kDegree},
    {"almost", "nearly", "RB", Marker::kDegree},
    {"rather", "somewhat", "RB", Marker::kDegree},
    {"although", "albeit", "IN", Marker::kClause},
    {"amongst", "amid", "IN", Marker::kPreposition},
};

void PushNp(Sentence* s, Rng& rng, bool adjective) {
  Push(s, {"the", "DT"});
  if (adjective) Push(s, Pick(kDocAdjectives, rng));
  Push(s, Pick(kDocNouns, rng));
}

Sentence NeutralSentence(Rng& rng) {
  Sentence s;
  switch (rng.UniformIndex(3)) {
    case 0:
      PushNp(&s, rng, false);
      Push(&s, Pick(kDocVerbs, rng));
      PushNp(&s, rng, true);
      break;
    case 1:
      PushNp(&s, rng, rng.UniformDouble() < 0.5);
      Push(&s, {"was", "VBD"});
      Push(&s, Pick(kDocAdjectives, rng));
      break;
    default:
      PushNp(&s, rng, false);
      Push(&s, Pick(kDocVerbs, rng));
      PushNp(&s, rng, false);
      Push(&s, {"in", "IN"});
      PushNp(&s, rng, false);
      break;
  }
  Push(&s, {".", "."});
  Capitalize(&s);
  return Finish(std::move(s));
}

Sentence SignalSentence(const Marker& m, Rng& rng) {
  Sentence s;
  const Word marker{m.word, m.tag};
  switch (m.slot) {
    case Marker::kInitial:
      Push(&s, marker);
      Push(&s, {",", ","});
      PushNp(&s, rng, false);
      Push(&s, Pick(kDocVerbs, rng));
      PushNp(&s, rng, false);
      break;
    case Marker::kDegree:
      PushNp(&s, rng, false);
      Push(&s, {"was", "VBD"});
      Push(&s, marker);
      Push(&s, Pick(kDocAdjectives, rng));
      break;
    case Marker::kClause:
      Push(&s, marker);
      PushNp(&s, rng, false);
      Push(&s, {"was", "VBD"});
      Push(&s, Pick(kDocAdjectives, rng));
      Push(&s, {",", ","});
      PushNp(&s, rng, false);
      Push(&s, Pick(kDocVerbs, rng));
      PushNp(&s, rng, false);
      break;
    case Marker::kPreposition:
      PushNp(&s, rng, false);
      Push(&s, Pick(kDocVerbs, rng));
      PushNp(&s, rng, false);
      Push(&s, marker);
      PushNp(&s, rng, false);
      break;
  }
  Push(&s, {".", "."});
  Capitalize(&s);
  return Finish(std::move(s));
}

}  // namespace

DocumentFixture MakeDocumentFixture(uint64_t seed, size_t docs_per_author,
                                    size_t sentences_per_doc) {
  DocumentFixture f;
  Rng rng(seed);
  TaggedCorpus tagged = Repeat(ExampleTaggedCorpus(), 2);
  std::string ppdb;
  const size_t train_docs = std::min<size_t>(12, docs_per_author - 1);
  for (size_t a = 0; a < std::size(kMarkers); ++a) {
    const Marker& m = kMarkers[a];
    const std::string author = "author" + std::to_string(a);
    f.corpus.authors.push_back(author);
    f.markers.push_back(m.word);
    ppdb += PpdbLine(std::string("[") + m.tag + "]", m.word, m.replacement);
    for (size_t d = 0; d < docs_per_author; ++d) {
      Document doc;
      doc.author_class = author;
      doc.id = author + "/doc" + std::to_string(d) + ".txt";
      const size_t signal = rng.UniformIndex(sentences_per_doc);
      for (size_t k = 0; k < sentences_per_doc; ++k) {
        Sentence s = k == signal ? SignalSentence(m, rng) : NeutralSentence(rng);
        if (d < 2) tagged.push_back(s);
        doc.sentences.push_back(std::move(s));
      }
      // The engine tags on demand; drop gold tags so documents look like
      // freshly loaded text.
      for (auto& s : doc.sentences) {
        for (auto& t : s.tokens) t.tag.clear();
      }
      (d < train_docs ? f.corpus.train : f.corpus.test).push_back(std::move(doc));
    }
  }
  f.resources = BuildResources(tagged);
  f.resources.ppdb = PpdbFromText(ppdb, "documents.ppdb");
  return f;
}

namespace {

const char* const kTypoVocabulary[] = {
    "the",      "and",     "people",   "would",    "about",    "there",     "their",
    "think",    "because", "really",   "before",   "friend",   "little",    "always",
    "morning",  "evening", "between",  "different", "problem", "question",  "answer",
    "remember", "weather", "tomorrow", "together", "children", "family",    "country",
    "important", "believe", "beautiful", "interesting", "probably", "actually", "anyway",
    "something", "everything", "nothing", "window",  "kitchen",  "garden",    "letter",
    "record",   "station", "market",   "village",  "journey",  "library",   "picture",
    "holiday",  "weekend", "coffee",   "dinner",   "sister",   "brother",   "mother",
    "father",   "teacher", "student",  "doctor",   "office",   "street",    "travel",
    "finish",   "listen",  "follow",   "change",   "happen",   "wonder",    "bring",
    "early",    "later",   "great",    "small",    "quiet",    "happy",     "strange",
    "simple",   "pretty",  "slowly",   "quickly",  "suddenly", "usually",   "nearly",
    "don't",    "can't",   "it's",     "you're",   "i'm",      "isn't",     "we're",
    "they're",  "won't",   "didn't",
};

// Misspelling by one random edit; inner apostrophes are kept.
std::string Misspell(const std::string& w, Rng& rng) {
  std::string out = w;
  const size_t n = out.size();
  switch (rng.UniformIndex(4)) {
    case 0:
      out.erase(1 + rng.UniformIndex(n - 1), 1);
      break;
    case 1: {
      const size_t i = 1 + rng.UniformIndex(n - 2);
      std::swap(out[i], out[i + 1]);
      break;
    }
    case 2:
      out[1 + rng.UniformIndex(n - 1)] = static_cast<char>('a' + rng.UniformIndex(26));
      break;
    default:
      out.insert(1 + rng.UniformIndex(n - 1), 1, static_cast<char>('a' + rng.UniformIndex(26)));
      break;
  }
  return out;
}

}  // namespace

TypoFixture MakeTypoFixture(size_t tokens, uint64_t seed) {
  TypoFixture f;
  std::map<std::string, uint64_t> freq;
  const size_t vocab = std::size(kTypoVocabulary);
  for (size_t i = 0; i < vocab; ++i) freq[kTypoVocabulary[i]] = 100000 / (i + 1);
  f.spell = SpellLexicon(freq, 2);
  Rng rng(seed);
  size_t emitted = 0;
  while (emitted < tokens) {
    const size_t len = 5 + rng.UniformIndex(11);
    std::string text;
    for (size_t k = 0; k < len; ++k) {
      // Roughly Zipfian draw: square a uniform to favor frequent words.
      const double u = rng.UniformDouble();
      std::string w = kTypoVocabulary[static_cast<size_t>(u * u * vocab)];
      if (w.size() >= 5 && w.find('\'') == std::string::npos && rng.UniformDouble() < 0.04) {
        w = Misspell(w, rng);
      }
      text += (k ? " " : "") + w;
    }
    text += " .";
    for (auto& s : Tokenize(text)) {
      emitted += s.tokens.size();
      f.corpus.push_back(std::move(s));
    }
  }
  return f;
}

std::vector<std::string> FuzzSentences(size_t count, uint64_t seed) {
  Rng rng(seed);
  std::vector<Word> vocab;
  for (const auto* list : {&kSubjects, &kVerbs, &kObjects, &kObjectAdjectives, &kDocNouns,
                           &kDocVerbs, &kDocAdjectives}) {
    vocab.insert(vocab.end(), list->begin(), list->end());
  }
  for (const Word w : std::vector<Word>{{"big", "JJ"},        {"large", "JJ"},
                                        {"huge", "JJ"},       {"vast", "JJ"},
                                        {"dinner", "NN"},     {"supper", "NN"},
                                        {"portions", "NNS"},  {"shares", "NNS"},
                                        {"bought", "VBD"},    {"purchased", "VBD"},
                                        {"quickly", "RB"},    {"rapidly", "RB"},
                                        {"not", "RB"},        {"can", "MD"},
                                        {"should", "MD"},     {"will", "MD"},
                                        {"have", "VBP"},      {"are", "VBP"},
                                        {",", ","},           {"nobody", "NN"},
                                        {"somebody", "NN"},   {"restriction", "NN"},
                                        {"they", "PRP"},      {"I", "PRP"}}) {
    vocab.push_back(w);
  }
  std::vector<std::string> out;
  while (out.size() < count) {
    const size_t kind = rng.UniformIndex(4);
    if (kind == 0) {
      out.push_back(StyleSentence(rng.UniformDouble() < 0.5, rng).original_text);
    } else if (kind == 1) {
      std::string text;
      for (int k = 0; k < 3; ++k) text += (k ? " " : "") + StyleSentence(k % 2 == 0, rng).original_text;
      out.push_back(text);
    } else {
      Sentence s;
      const size_t len = 3 + rng.UniformIndex(18);
      for (size_t k = 0; k < len; ++k) Push(&s, Pick(vocab, rng));
      Push(&s, {".", "."});
      out.push_back(Detokenize(s.tokens));
    }
  }
  return out;
}

ResourceBundle FullBundle(const StyleFixture& style, const TypoFixture& typos) {
  ResourceBundle b = style.resources;
  std::map<std::string, uint64_t> freq = typos.spell.words();
  for (const auto* list : {&kSubjects, &kVerbs, &kObjects, &kObjectAdjectives}) {
    for (const auto& w : *list) freq.emplace(w.first, 500);
  }
  b.spell = SpellLexicon(freq, 2);
  for (const auto& cls : style.corpus.classes) {
    b.typos[cls] = BuildTypoLexicon(typos.corpus, *b.spell, 2, cls);
  }
  return b;
}

}  // namespace parchoice::fixtures

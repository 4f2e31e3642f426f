// Copyright 2026 The CommentEval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commenteval/corpus.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "commenteval/comment_syntax.h"
#include "commenteval/corpus_io.h"
#include "commenteval/error.h"
#include "commenteval/ingest.h"
#include "commenteval/language_id.h"
#include "fakes.h"
#include "gtest/gtest.h"
#include "mock_servers.h"

namespace commenteval {
namespace {

using ::commenteval::testing::FakeSearchClient;
using ::commenteval::testing::MakeFile;
using ::commenteval::testing::SampleAround;

SyntaxTable Syntax() { return SyntaxTable::LoadDefault(); }

// A tokenizer that answers a fixed count for every text, or throws.
class FixedTokenizer final : public Tokenizer {
 public:
  FixedTokenizer(std::string name, std::size_t comment, std::size_t context,
                 std::string comment_text)
      : name_(std::move(name)),
        comment_(comment),
        context_(context),
        comment_text_(std::move(comment_text)) {}
  std::string name() const override { return name_; }
  std::vector<Token> Tokenize(std::string_view text) const override {
    if (fail) throw std::runtime_error("vocabulary overflow");
    const std::size_t n = text == comment_text_ ? comment_ : context_ / 2;
    return std::vector<Token>(n, Token{"t", 0, 0});
  }
  bool fail = false;

 private:
  std::string name_;
  std::size_t comment_;
  std::size_t context_;
  std::string comment_text_;
};

TEST(ExtractCommentsTest, NoDelimitersYieldsNothing) {
  EXPECT_TRUE(
      ExtractComments(MakeFile("a", "x = 1\ny = 2\n"), Syntax()).empty());
}

TEST(ExtractCommentsTest, SingleLineComment) {
  const SourceFile file = MakeFile("a", "x = 1  # som");
  const auto spans = ExtractComments(file, Syntax());
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].text, "som");
  EXPECT_EQ(spans[0].syntax_kind, CommentSyntaxKind::kLine);
  EXPECT_EQ(file.content.substr(spans[0].byte_start, 3), "som");
}

TEST(ExtractCommentsTest, BlockAndLineCommentsInByteOrder) {
  const std::string content =
      "/* first line\n   second line\n   third line */\n"
      "int x = 1;  // after x\n"
      "int y = 2;  // after y\n";
  const auto spans = ExtractComments(MakeFile("c", content, "en", "c"),
                                     Syntax());
  ASSERT_EQ(spans.size(), 3u);
  // Offsets located by hand.
  EXPECT_EQ(spans[0].byte_start, 3u);
  EXPECT_EQ(spans[0].byte_end, content.find(" */"));
  EXPECT_EQ(spans[0].syntax_kind, CommentSyntaxKind::kBlock);
  EXPECT_EQ(spans[1].byte_start, content.find("after x"));
  EXPECT_EQ(spans[2].byte_start, content.find("after y"));
  for (const auto& s : spans) {
    EXPECT_EQ(content.substr(s.byte_start, s.byte_end - s.byte_start), s.text);
  }
  EXPECT_LT(spans[0].byte_end, spans[1].byte_start);
  EXPECT_LT(spans[1].byte_end, spans[2].byte_start);
}

TEST(ExtractCommentsTest, DelimitersInsideStringsAreIgnored) {
  const auto spans = ExtractComments(
      MakeFile("s", "s = \"# no\"  # yes\nt = '\\\\'  # also\n"), Syntax());
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].text, "yes");
  EXPECT_EQ(spans[1].text, "also");
}

TEST(ExtractCommentsTest, FirstCloserEndsNestedBlock) {
  const std::string content = "/* a /* b */ c */";
  const auto spans = ExtractComments(MakeFile("n", content, "en", "c"),
                                     Syntax());
  ASSERT_GE(spans.size(), 1u);
  EXPECT_EQ(spans[0].text, "a /* b");
}

TEST(ExtractCommentsTest, UnknownLanguageThrows) {
  try {
    ExtractComments(MakeFile("x", "# hi", "en", "cobol-2077"), Syntax());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedLanguage);
  }
}

TEST(ExtractCommentsTest, SpansAreVerbatimSlicesOfTestFiles) {
  for (const auto& file : testing::TestSourceFiles()) {
    const auto spans = ExtractComments(file, Syntax());
    EXPECT_FALSE(spans.empty()) << file.id;
    std::size_t last_end = 0;
    for (const auto& s : spans) {
      EXPECT_LE(last_end, s.byte_start) << file.id;
      EXPECT_LT(s.byte_start, s.byte_end);
      EXPECT_EQ(file.content.substr(s.byte_start, s.byte_end - s.byte_start),
                s.text);
      last_end = s.byte_end;
    }
  }
}

LanguageDetector Fixed(std::string tag, double confidence) {
  return [=](std::string_view) { return LanguageGuess{tag, confidence}; };
}

TEST(VerifyLanguageTest, Accepts) {
  const auto v = VerifyLanguage("x", Fixed("nl", 0.99), "nl", 0.5);
  EXPECT_TRUE(v.accepted);
}

TEST(VerifyLanguageTest, RejectsWrongLanguage) {
  const auto v = VerifyLanguage("x", Fixed("en", 0.9), "el", 0.5);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.reason, VerifyReason::kWrongLanguage);
}

TEST(VerifyLanguageTest, RejectsLowConfidence) {
  const auto v = VerifyLanguage("x", Fixed("pl", 0.3), "pl", 0.5);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.reason, VerifyReason::kLowConfidence);
}

TEST(VerifyLanguageTest, DetectorFailureIsRejection) {
  const LanguageDetector broken = [](std::string_view) -> LanguageGuess {
    throw std::runtime_error("model missing");
  };
  const auto v = VerifyLanguage("x", broken, "en");
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.reason, VerifyReason::kDetectorError);
  EXPECT_EQ(std::string(VerifyReasonName(v.reason)), "detector_error");
}

TEST(VerifyLanguageTest, HeuristicDetectorOnTestCorpus) {
  const LanguageDetector detector = MakeHeuristicDetector();
  std::size_t accepted = 0, total = 0;
  for (const auto& s : testing::TestCorpus()) {
    ++total;
    if (VerifyLanguage(s.ground_truth, detector, s.file.language_tag).accepted) {
      ++accepted;
    }
  }
  EXPECT_EQ(accepted, total);
}

TEST(FilterTest, TooShortUnderEveryTokenizer) {
  const auto sample = SampleAround("s", "# a b\n", "a b");
  FixedTokenizer t1("one", 9, 10, "a b"), t2("two", 9, 10, "a b");
  const CorpusStats stats = {{"one", {9, 0, 1}}, {"two", {9, 0, 1}}};
  const auto d = FilterSample(sample, {&t1, &t2}, stats);
  EXPECT_FALSE(d.keep);
  EXPECT_EQ(d.reason, DropReason::kTooShort);
}

TEST(FilterTest, LongUnderOneTokenizerIsNotTooShort) {
  const auto sample = SampleAround("s", "# a b\n", "a b");
  FixedTokenizer t1("one", 9, 10, "a b"), t2("two", 10, 10, "a b");
  const CorpusStats stats = {{"one", {9, 0, 1}}, {"two", {10, 0, 1}}};
  EXPECT_TRUE(FilterSample(sample, {&t1, &t2}, stats).keep);
}

TEST(FilterTest, BudgetExceeded) {
  const auto sample = SampleAround("s", "x\n# a b\ny\n", "a b");
  FixedTokenizer tok("t", 12, 4000, "a b");
  // mean + 3 sigma = 110 + 3 * 30 = 200; 4000 + 200 > 4096.
  const CorpusStats stats = {{"t", {110, 30, 50}}};
  const auto d = FilterSample(sample, {&tok}, stats);
  EXPECT_FALSE(d.keep);
  EXPECT_EQ(d.reason, DropReason::kBudgetExceeded);
}

TEST(FilterTest, WithinBudgetKeeps) {
  const auto sample = SampleAround("s", "x\n# a b\ny\n", "a b");
  FixedTokenizer tok("t", 12, 100, "a b");
  const CorpusStats stats = {{"t", {110, 30, 50}}};
  EXPECT_TRUE(FilterSample(sample, {&tok}, stats).keep);
}

TEST(FilterTest, TokenizerFailureDrops) {
  const auto sample = SampleAround("s", "# a b\n", "a b");
  FixedTokenizer tok("t", 12, 100, "a b");
  tok.fail = true;
  const auto d = FilterSample(sample, {&tok}, {{"t", {1, 0, 1}}});
  EXPECT_EQ(d.reason, DropReason::kTokenizationError);
}

TEST(FilterTest, PopulationStatistics) {
  std::vector<CommentSample> pool = {
      SampleAround("a", "# one two\n", "one two"),
      SampleAround("b", "# one two three four\n", "one two three four")};
  WhitespaceTokenizer ws;
  const auto stats = ComputeLengthStats(pool, {&ws});
  EXPECT_DOUBLE_EQ(stats.at("whitespace").mean, 3.0);
  EXPECT_DOUBLE_EQ(stats.at("whitespace").stddev, 1.0);
}

TEST(FilterTest, KeptSetIsOrderIndependent) {
  auto pool = testing::TestCorpus();
  WhitespaceTokenizer ws;
  PunctuationTokenizer punct;
  FilterOptions options;
  options.max_context = 200;
  std::set<std::string> reference;
  const auto decisions = FilterPool(pool, {&ws, &punct}, options);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (decisions[i].keep) reference.insert(pool[i].id);
  }
  EXPECT_FALSE(reference.empty());
  std::mt19937 rng(7);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto d = FilterPool(pool, {&ws, &punct}, options);
    std::set<std::string> kept;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (d[i].keep) kept.insert(pool[i].id);
    }
    EXPECT_EQ(kept, reference);
  }
}

TEST(FimTest, ZeroPrimeIsEmpty) {
  const auto s = SampleAround("s", "a = 1  # check it now\n", "check it now");
  EXPECT_EQ(BuildFimPrompt(s, 0, WhitespaceTokenizer()).prime, "");
}

TEST(FimTest, PrimeIsLeadingTokens) {
  const auto s = SampleAround("s", "x  # controleer de invoer waarde\n",
                              "controleer de invoer waarde", "nl");
  const auto prompt = BuildFimPrompt(s, 3, WhitespaceTokenizer());
  EXPECT_EQ(prompt.prime, "controleer de invoer");
  EXPECT_EQ(prompt.prefix, "x  # ");
  EXPECT_EQ(prompt.suffix, "\n");
  EXPECT_EQ(prompt.Render(),
            "<fim_prefix>x  # <fim_suffix>\n<fim_middle>controleer de invoer");
}

TEST(FimTest, PrimeTooLong) {
  const auto s = SampleAround("s", "# two words\n", "two words");
  try {
    BuildFimPrompt(s, 3, WhitespaceTokenizer());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrimeTooLong);
  }
}

TEST(FimTest, CustomSentinels) {
  const auto s = SampleAround("s", "p # one two three four\n", "one two three four");
  const auto prompt =
      BuildFimPrompt(s, kDefaultPrimeTokens, WhitespaceTokenizer(),
                     {"<PRE>", "<SUF>", "<MID>"});
  EXPECT_EQ(prompt.Render(), "<PRE>p # <SUF>\n<MID>one two three");
}

TEST(FimTest, RoundTripOverTestCorpus) {
  for (const auto& s : testing::TestCorpus()) {
    const auto prompt = BuildFimPrompt(s, 3, PunctuationTokenizer());
    EXPECT_EQ(prompt.prefix + s.ground_truth + prompt.suffix, s.file.content);
    EXPECT_EQ(s.ground_truth.compare(0, prompt.prime.size(), prompt.prime), 0);
  }
}

TEST(MakeSampleTest, RejectsMismatchedSpan) {
  const SourceFile f = MakeFile("f", "# hello\n");
  EXPECT_THROW(MakeSample("s", f, {2, 7, "howdy", CommentSyntaxKind::kLine}),
               Error);
  EXPECT_THROW(MakeSample("s", f, {2, 99, "hello", CommentSyntaxKind::kLine}),
               Error);
}

TEST(CorpusIoTest, RoundTripsThroughJsonLines) {
  auto samples = testing::TestCorpus();
  samples[0].predictions = {{"m1", "pred one"}, {"m2", "pred two"}};
  samples[0].annotations["m1"] = {OrdinalLabel::kCorrect, {}};
  samples[0].annotations["m2"] = {OrdinalLabel::kIncorrect, {"SE-MD", "LG-IS"}};
  const auto path = std::filesystem::temp_directory_path() / "corpus_rt.jsonl";
  WriteCorpus(path, samples);
  const auto back = ReadCorpus(path);
  std::filesystem::remove(path);
  ASSERT_EQ(back.size(), samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    // File id and span kind are not part of the record format.
    auto expected = samples[i];
    expected.file.id = expected.id;
    expected.span.syntax_kind = CommentSyntaxKind::kLine;
    EXPECT_EQ(back[i], expected) << expected.id;
  }
}

TEST(CorpusIoTest, RecordHasExactlyTheDeclaredFields) {
  const auto record = SampleToJson(testing::TestCorpus().front());
  std::set<std::string> keys;
  for (const auto& [k, v] : record.items()) keys.insert(k);
  EXPECT_EQ(keys, (std::set<std::string>{"id", "language", "pl", "prefix",
                                         "suffix", "ground_truth",
                                         "predictions", "label",
                                         "error_codes", "origin"}));
  EXPECT_TRUE(record["label"].is_null());
}

TEST(IngestTest, DuplicateAcrossKeywordsCollapses) {
  FakeSearchClient client;
  client.results["alpha"] = {MakeFile("1", "same body")};
  client.results["beta"] = {MakeFile("2", "same   body")};
  const auto r = IngestKeywords({"alpha", "beta"}, client);
  ASSERT_EQ(r.files.size(), 1u);
  EXPECT_EQ(r.files[0].id, "1");
}

TEST(IngestTest, EmptyWordList) {
  FakeSearchClient client;
  EXPECT_TRUE(IngestKeywords({}, client).files.empty());
}

TEST(IngestTest, CountedDuplicates) {
  // 3 x 100 candidates; keyword b repeats 25 of a, c repeats 15 of a.
  FakeSearchClient client;
  for (int i = 0; i < 100; ++i) {
    client.results["a"].push_back(MakeFile("a" + std::to_string(i),
                                           "file " + std::to_string(i)));
    client.results["b"].push_back(MakeFile(
        "b" + std::to_string(i),
        i < 25 ? "file " + std::to_string(i) : "b file " + std::to_string(i)));
    client.results["c"].push_back(MakeFile(
        "c" + std::to_string(i), i < 15 ? "file " + std::to_string(50 + i)
                                        : "c file " + std::to_string(i)));
  }
  const auto r = IngestKeywords({"a", "b", "c"}, client);
  EXPECT_EQ(r.files.size(), 260u);
  EXPECT_TRUE(std::is_sorted(r.files.begin(), r.files.end(),
                             [](const auto& x, const auto& y) {
                               return x.id < y.id;
                             }));
}

TEST(IngestTest, PerWordLimitAndIdempotence) {
  FakeSearchClient client;
  for (int i = 0; i < 10; ++i) {
    client.results["w"].push_back(
        MakeFile("w" + std::to_string(i), "body " + std::to_string(i)));
  }
  IngestOptions options;
  options.per_word_limit = 4;
  const auto first = IngestKeywords({"w"}, client, options);
  EXPECT_EQ(first.files.size(), 4u);
  EXPECT_EQ(IngestKeywords({"w"}, client, options).files, first.files);
}

TEST(IngestTest, RetriesThenPartialResultWithWarning) {
  FakeSearchClient client;
  client.results["ok"] = {MakeFile("1", "one")};
  client.results["flaky"] = {MakeFile("2", "two")};
  client.results["down"] = {MakeFile("3", "three")};
  client.failures["flaky"] = 2;
  client.failures["down"] = 100;
  IngestOptions options;
  options.retry.max_attempts = 3;
  int sleeps = 0;
  options.sleeper = [&](std::chrono::milliseconds) { ++sleeps; };
  options.max_in_flight = 1;
  const auto r = IngestKeywords({"ok", "flaky", "down"}, client, options);
  ASSERT_EQ(r.files.size(), 2u);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].keyword, "down");
  EXPECT_EQ(sleeps, 4);
}

TEST(GitHubSearchClientTest, SearchesAndFetchesRawFiles) {
  testing::MockForgeServer forge(
      {{"zwraca",
        {{"src/a.rs", "// zwraca sume\nfn a() {}\n"},
         {"README", "no extension"},
         {"b.py", "# zwraca liste\n"}}}});
  forge.RateLimitNext(1);
  GitHubSearchClient::Options options;
  options.api_base = forge.base_url();
  options.language_tag = "pl";
  options.search_qualifiers = "language:Rust";
  GitHubSearchClient client(options, Syntax());
  IngestOptions ingest;
  ingest.sleeper = [](std::chrono::milliseconds) {};
  const auto r = IngestKeywords({"zwraca"}, client, ingest);
  ASSERT_EQ(r.files.size(), 2u);
  for (const auto& f : r.files) {
    EXPECT_EQ(f.language_tag, "pl");
    EXPECT_EQ(f.id.size(), 16u);
  }
  std::set<std::string> pls;
  for (const auto& f : r.files) pls.insert(f.pl_tag);
  EXPECT_EQ(pls, (std::set<std::string>{"python", "rust"}));
  const auto queries = forge.queries();
  ASSERT_EQ(queries.size(), 2u);
  EXPECT_EQ(queries[1], "\"zwraca\" language:Rust");
}

}  // namespace
}  // namespace commenteval

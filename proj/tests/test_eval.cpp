// Copyright 2026 The digits-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "digits/eval.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "digits/errors.hpp"
#include "digits/grammar.hpp"
#include "digits/textnorm.hpp"
#include "test_util.hpp"

using namespace digits;

namespace {

// Exhaustive edit-distance search, deliberately kept free of the dynamic
// program used by align(): plain recursion over the three edit moves.
int brute_distance(const std::vector<int>& ref, const std::vector<int>& hyp,
                   std::size_t i, std::size_t j) {
  if (i == ref.size()) return static_cast<int>(hyp.size() - j);
  if (j == hyp.size()) return static_cast<int>(ref.size() - i);
  int best = brute_distance(ref, hyp, i + 1, j + 1) +
             (ref[i] == hyp[j] ? 0 : 1);
  best = std::min(best, 1 + brute_distance(ref, hyp, i + 1, j));
  best = std::min(best, 1 + brute_distance(ref, hyp, i, j + 1));
  return best;
}

WordList words_of(const std::vector<int>& ids) {
  static const char* lexicon[] = {"one", "two",  "three", "oh",
                                  "six", "nine", "forty", "spree"};
  WordList out;
  for (int id : ids) out.emplace_back(lexicon[id % 8]);
  return out;
}

WerReport report_of(int s, int d, int i, int n) {
  WerReport r;
  r.substitutions = s;
  r.deletions = d;
  r.insertions = i;
  r.ref_words = n;
  return r;
}

}  // namespace

TEST_CASE("align counts a lone insertion") {
  auto a = align({"six", "hundred", "fifty", "three"},
                 {"six", "hundred", "and", "fifty", "three"});
  CHECK(a.substitutions == 0);
  CHECK(a.deletions == 0);
  CHECK(a.insertions == 1);
  CHECK(a.ref_words == 4);
  CHECK(wer(a).wer() == doctest::Approx(0.25));
}

TEST_CASE("align scores raw out-of-vocabulary hypotheses") {
  auto a = align({"twelve", "six"}, {"well", "fix"});
  CHECK(a.substitutions == 2);
  CHECK(a.deletions == 0);
  CHECK(a.insertions == 0);
}

TEST_CASE("a blank hypothesis is all deletions") {
  auto a = align({"one", "two", "three"}, {});
  CHECK(a.deletions == 3);
  CHECK(wer(a).wer() == doctest::Approx(1.0));
  CHECK_THROWS_AS(align({}, {"one"}), EmptyReference);
}

TEST_CASE("alignment step list is consistent with its counts") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> ref_ids(1 + rng() % 8), hyp_ids(rng() % 9);
    for (int& v : ref_ids) v = static_cast<int>(rng() % 8);
    for (int& v : hyp_ids) v = static_cast<int>(rng() % 8);
    auto a = align(words_of(ref_ids), words_of(hyp_ids));
    int matches = 0, subs = 0, dels = 0, ins = 0;
    for (const AlignStep& s : a.steps) {
      switch (s.op) {
        case EditOp::kMatch: ++matches; break;
        case EditOp::kSub: ++subs; break;
        case EditOp::kDel: ++dels; break;
        case EditOp::kIns: ++ins; break;
      }
    }
    CHECK(subs == a.substitutions);
    CHECK(dels == a.deletions);
    CHECK(ins == a.insertions);
    CHECK(matches + subs + dels == a.ref_words);
    CHECK(matches + subs + ins == static_cast<int>(hyp_ids.size()));
  }
}

TEST_CASE("align matches the exhaustive oracle on random pairs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> ref_ids(1 + rng() % 8), hyp_ids(rng() % 9);
    for (int& v : ref_ids) v = static_cast<int>(rng() % 8);
    for (int& v : hyp_ids) v = static_cast<int>(rng() % 8);
    auto a = align(words_of(ref_ids), words_of(hyp_ids));
    CHECK(a.edits() == brute_distance(ref_ids, hyp_ids, 0, 0));
  }
}

TEST_CASE("swapping equal-length substitution-only pairs keeps the count") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t len = 1 + rng() % 6;
    std::vector<int> a_ids(len), b_ids(len);
    for (std::size_t i = 0; i < len; ++i) {
      a_ids[i] = static_cast<int>(rng() % 8);
      b_ids[i] = static_cast<int>(rng() % 8);
    }
    auto forward = align(words_of(a_ids), words_of(b_ids));
    auto backward = align(words_of(b_ids), words_of(a_ids));
    CHECK(forward.edits() == backward.edits());
  }
}

TEST_CASE("wer formula spot checks") {
  CHECK(report_of(1, 0, 0, 4).wer() == doctest::Approx(0.25));
  CHECK(report_of(0, 0, 0, 6).wer() == doctest::Approx(0.0));
  CHECK(report_of(0, 3, 0, 3).wer() == doctest::Approx(1.0));
}

TEST_CASE("wer may exceed one and is not clamped") {
  auto a = align({"one"}, {"two", "three", "four"});
  CHECK(wer(a).wer() > 1.0);
  CHECK(wer(a).wer() == doctest::Approx(3.0));
}

TEST_CASE("corpus_wer micro-averages") {
  auto total = corpus_wer({report_of(1, 0, 0, 4), report_of(0, 0, 0, 6)});
  CHECK(total.wer() == doctest::Approx(0.10));
  CHECK(corpus_wer({report_of(0, 0, 0, 5)}).wer() == doctest::Approx(0.0));
  CHECK_THROWS_AS(corpus_wer({}), EmptyCorpus);
}

TEST_CASE("corpus edit counts add exactly") {
  std::mt19937 rng(17);
  std::vector<WerReport> reports;
  int expected_edits = 0;
  for (int i = 0; i < 50; ++i) {
    auto r = report_of(static_cast<int>(rng() % 4), static_cast<int>(rng() % 3),
                       static_cast<int>(rng() % 3), 4 + static_cast<int>(rng() % 9));
    expected_edits += r.substitutions + r.deletions + r.insertions;
    reports.push_back(r);
  }
  auto total = corpus_wer(reports);
  CHECK(total.substitutions + total.deletions + total.insertions ==
        expected_edits);
}

TEST_CASE("a fixture with 26 edits over 1000 words scores 2.60") {
  std::vector<WerReport> reports;
  for (int i = 0; i < 500; ++i) {
    reports.push_back(i < 26 ? report_of(1, 0, 0, 2) : report_of(0, 0, 0, 2));
  }
  auto total = corpus_wer(reports);
  CHECK(total.ref_words == 1000);
  CHECK(total.edits() == 26);
  CHECK(format_wer_line(total) == "WER 2.60 S 26 D 0 I 0 N 1000");
}

TEST_CASE("rtf quotient and flags") {
  CHECK(rtf(2.0, 10.0).rtf() == doctest::Approx(0.2));
  CHECK_FALSE(rtf(2.0, 10.0).at_or_above_realtime());
  CHECK(rtf(3646.3, 3646.3).rtf() == doctest::Approx(1.0));
  CHECK(rtf(3646.3, 3646.3).at_or_above_realtime());
  CHECK_THROWS_AS(rtf(1.0, 0.0), ZeroDuration);
  CHECK_THROWS_AS(rtf(1.0, -4.0), ZeroDuration);
  CHECK_THROWS_AS(rtf(-1.0, 4.0), Error);
}

TEST_CASE("rtf back-computed from the published test-set duration") {
  double r = rtf(2.188, 3646.3).rtf();
  // Two significant figures: 60e-5.
  long long scaled = std::llround(r / 1e-5);
  CHECK(scaled == 60);
}

TEST_CASE("rtf is scale-invariant and monotone in T") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> pos(0.01, 1000.0);
  for (int i = 0; i < 200; ++i) {
    double t = pos(rng), d = pos(rng), k = pos(rng);
    CHECK(std::abs(rtf(k * t, k * d).rtf() - rtf(t, d).rtf()) <= 1e-12);
    CHECK(rtf(t + 1.0, d).rtf() > rtf(t, d).rtf());
  }
}

TEST_CASE("categorize_errors buckets by reference value") {
  std::vector<CategorizedRecord> records;
  records.push_back({{Token::kTwo}, {}});                       // blank, 0-9
  records.push_back({{Token::kSixteen}, {"sixty"}});            // sub, 11-99
  records.push_back({tokenize("six hundred fifty three"),
                     normalize_words("six hundred fifty three")});  // exact
  auto buckets = categorize_errors(records);
  CHECK(buckets[0].blank_output == 1);
  CHECK(buckets[0].total() == 1);
  CHECK(buckets[1].substitution_error == 1);
  CHECK(buckets[1].total() == 1);
  CHECK(buckets[2].exact_match == 1);
  CHECK(buckets[2].total() == 1);
}

TEST_CASE("bucket boundary values are a policy choice") {
  std::vector<CategorizedRecord> records;
  records.push_back({{Token::kTen}, {"ten"}});
  records.push_back({tokenize("one hundred"), normalize_words("one hundred")});
  auto buckets = categorize_errors(records);
  CHECK(buckets[1].exact_match == 1);  // 10 sits with two-digit by default
  CHECK(buckets[2].exact_match == 1);  // 100 sits with multi-digit

  BucketPolicy widened;
  widened.single_max = 10;
  auto moved = categorize_errors(records, widened);
  CHECK(moved[0].exact_match == 1);
  CHECK(moved[1].exact_match == 0);
}

TEST_CASE("categorize_errors rejects unparseable references") {
  std::vector<CategorizedRecord> records;
  records.push_back({{Token::kAnd}, {}});
  CHECK_THROWS_AS(categorize_errors(records), UnparseableReference);
}

TEST_CASE("scoring and timing TSV parsing") {
  auto utts = parse_scoring_lines(
      "u1\tfour five\tfour nine\nu2\tsix\t\nu3\ttwo\n");
  REQUIRE(utts.size() == 3);
  CHECK(utts[0].ref == WordList{"four", "five"});
  CHECK(utts[0].hyp == WordList{"four", "nine"});
  CHECK(utts[1].hyp.empty());
  CHECK(utts[2].hyp.empty());
  CHECK_THROWS_AS(parse_scoring_lines("no-tabs-here\n"), Error);

  auto times = parse_timing_lines("u1\t2.188\t3646.3\n");
  REQUIRE(times.size() == 1);
  CHECK(times[0].transcribe_seconds == doctest::Approx(2.188));
  CHECK(times[0].audio_seconds == doctest::Approx(3646.3));
  CHECK_THROWS_AS(parse_timing_lines("u1\tx\t3\n"), Error);
}

TEST_CASE("report formatting") {
  CHECK(format_wer_line(report_of(0, 0, 0, 10)) == "WER 0.00 S 0 D 0 I 0 N 10");
  ErrorBucket bucket{ValueCategory::kTwoDigit11To99};
  bucket.exact_match = 474;
  bucket.substitution_error = 26;
  CHECK(format_bucket_line(bucket) ==
        "two-digit-11-99 exact 474 substitution 26 blank 0 other 0");
}

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

#include "digits/grammar.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <doctest.h>

#include "digits/errors.hpp"
#include "test_util.hpp"

using namespace digits;

namespace {

std::set<TokenSeq> verbalization_set(std::string_view d) {
  auto v = verbalizations(d);
  return {v.begin(), v.end()};
}

bool parses_to(const TokenSeq& tokens, const std::string& d,
               const ParsePolicy& policy = {}) {
  auto result = parse(tokens, policy);
  return std::find(result.begin(), result.end(), d) != result.end();
}

std::vector<std::string> enumerate_digit_strings(int length) {
  std::vector<std::string> out;
  int count = 1;
  for (int i = 0; i < length; ++i) count *= 10;
  out.reserve(count);
  for (int x = 0; x < count; ++x) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%0*d", length, x);
    out.emplace_back(buf);
  }
  return out;
}

}  // namespace

TEST_CASE("vocabulary is closed at 33 tokens") {
  CHECK(all_tokens().size() == 33);
  CHECK(vocab_table_order().size() == 33);
  std::set<Token> unique(vocab_table_order().begin(),
                         vocab_table_order().end());
  CHECK(unique.size() == 33);
  CHECK(token_from_surface("oh") == Token::kOh);
  CHECK(token_from_surface("o") == Token::kO);
  CHECK(token_from_surface("zero") == Token::kZero);
  CHECK(!token_from_surface("nought").has_value());
  // Export ordering is row-major over the published table.
  CHECK(vocab_table_order().front() == Token::kOne);
  CHECK(vocab_table_order()[1] == Token::kEleven);
  CHECK(vocab_table_order()[2] == Token::kTwenty);
  CHECK(vocab_table_order().back() == Token::kZero);
}

TEST_CASE("tokenize splits hyphens and strips punctuation") {
  CHECK(tokenize("fifty-three") == TokenSeq{Token::kFifty, Token::kThree});
  CHECK(tokenize("Four hundred and eighty") ==
        TokenSeq{Token::kFour, Token::kHundred, Token::kAnd, Token::kEighty});
  CHECK(tokenize("  SIX,  fifty three.") ==
        TokenSeq{Token::kSix, Token::kFifty, Token::kThree});
}

TEST_CASE("tokenize reports the first out-of-vocabulary word") {
  try {
    tokenize("well fix");
    FAIL("expected OutOfVocabulary");
  } catch (const OutOfVocabulary& e) {
    CHECK(e.word() == "well");
    CHECK(e.position() == 0);
  }
  CHECK_THROWS_AS(tokenize("six transactions"), OutOfVocabulary);
  CHECK_THROWS_AS(tokenize("..."), OutOfVocabulary);
}

TEST_CASE("verbalizations of 653 are exactly the five variants") {
  std::set<TokenSeq> expected = {
      {Token::kSix, Token::kFive, Token::kThree},
      {Token::kSix, Token::kFifty, Token::kThree},
      {Token::kSixty, Token::kFive, Token::kThree},
      {Token::kSix, Token::kHundred, Token::kFifty, Token::kThree},
      {Token::kSix, Token::kHundred, Token::kAnd, Token::kFifty,
       Token::kThree},
  };
  CHECK(verbalization_set("653") == expected);
}

TEST_CASE("verbalizations of 480 include both hundred forms") {
  auto set = verbalization_set("480");
  CHECK(set.size() == 9);
  CHECK(set.count({Token::kFour, Token::kHundred, Token::kEighty}) == 1);
  CHECK(set.count(
            {Token::kFour, Token::kHundred, Token::kAnd, Token::kEighty}) ==
        1);
}

TEST_CASE("single digit has exactly one reading") {
  CHECK(verbalizations("7") == std::vector<TokenSeq>{{Token::kSeven}});
}

TEST_CASE("zero digits expand to zero, oh, and o") {
  auto set = verbalization_set("0");
  CHECK(set ==
        std::set<TokenSeq>{{Token::kZero}, {Token::kOh}, {Token::kO}});
}

TEST_CASE("thousand readings") {
  auto set = verbalization_set("1000");
  CHECK(set.count({Token::kOne, Token::kThousand}) == 1);
  // Tail with leading zeros reads the nonzero remainder.
  auto set34 = verbalization_set("12034");
  CHECK(set34.count({Token::kTwelve, Token::kThousand, Token::kThirty,
                     Token::kFour}) == 1);
  CHECK(set34.count({Token::kTwelve, Token::kThousand, Token::kAnd,
                     Token::kThirty, Token::kFour}) == 1);
  // "and" directly after thousand is invalid when the tail has "hundred".
  auto set345 = verbalization_set("12345");
  CHECK(set345.count({Token::kTwelve, Token::kThousand, Token::kThree,
                      Token::kHundred, Token::kForty, Token::kFive}) == 1);
  CHECK(set345.count({Token::kTwelve, Token::kThousand, Token::kAnd,
                      Token::kThree, Token::kHundred, Token::kForty,
                      Token::kFive}) == 0);
  // A zero head blocks the thousand form entirely.
  for (const TokenSeq& v : verbalizations("0345")) {
    CHECK(std::find(v.begin(), v.end(), Token::kThousand) == v.end());
  }
}

TEST_CASE("parse maps the cited phrases back to digits") {
  CHECK(parse(tokenize("four hundred and eighty")) ==
        std::vector<std::string>{"480"});
  CHECK(parse({Token::kOh}) == std::vector<std::string>{"0"});
  auto r = parse({Token::kOne, Token::kTwenty, Token::kThree});
  CHECK(r == std::vector<std::string>{"123", "1203"});
}

TEST_CASE("parse ranking prefers expected length, then fewer groups") {
  ParsePolicy three;
  three.expected_length = 3;
  CHECK(parse({Token::kOne, Token::kTwenty, Token::kThree}, three) ==
        std::vector<std::string>{"123"});
  ParsePolicy four;
  four.expected_length = 4;
  CHECK(parse({Token::kOne, Token::kTwenty, Token::kThree}, four) ==
        std::vector<std::string>{"1203"});
  // "six fifty three" is 653 first, 6503 second.
  auto r = parse({Token::kSix, Token::kFifty, Token::kThree});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == "653");
  CHECK(r[1] == "6503");
}

TEST_CASE("parse with allow_and disabled rejects and-sequences") {
  ParsePolicy no_and;
  no_and.allow_and = false;
  CHECK(parse(tokenize("four hundred and eighty"), no_and).empty());
  CHECK(parse(tokenize("four hundred eighty"), no_and) ==
        std::vector<std::string>{"480"});
}

TEST_CASE("unparseable sequences yield an empty list") {
  CHECK(parse({Token::kAnd}).empty());
  CHECK(parse({Token::kHundred}).empty());
  CHECK(parse({Token::kOne, Token::kHundred, Token::kAnd}).empty());
  CHECK(parse({Token::kOne, Token::kThousand, Token::kThousand}).empty());
  CHECK(parse({Token::kOne, Token::kHundred, Token::kAnd, Token::kZero})
            .empty());
}

TEST_CASE("canonical verbalizations") {
  CHECK(canonical_verbalization("05", VerbalStyle::kDigitByDigit) ==
        TokenSeq{Token::kZero, Token::kFive});
  auto compact = canonical_verbalization("653", VerbalStyle::kCompact);
  // Must be an and-free argmin of the enumerated set.
  std::size_t min_len = SIZE_MAX;
  for (const TokenSeq& v : verbalizations("653")) {
    if (std::find(v.begin(), v.end(), Token::kAnd) == v.end()) {
      min_len = std::min(min_len, v.size());
    }
  }
  CHECK(compact.size() == min_len);
  CHECK(verbalization_set("653").count(compact) == 1);
  CHECK(canonical_verbalization("7", VerbalStyle::kCompact) ==
        TokenSeq{Token::kSeven});
  CHECK(canonical_verbalization("10000", VerbalStyle::kCompact) ==
        TokenSeq{Token::kTen, Token::kThousand});
}

TEST_CASE("digit-by-digit reading is always generated") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int len = 1 + static_cast<int>(rng() % 5);
    std::string d = testutil::random_digit_string(rng, len);
    TokenSeq pure;
    for (char c : d) {
      pure.push_back(c == '0' ? Token::kZero : unit_token(c - '0'));
    }
    CHECK(verbalization_set(d).count(pure) == 1);
  }
}

TEST_CASE("round trip holds exhaustively through length 3") {
  for (int len = 1; len <= 3; ++len) {
    for (const std::string& d : enumerate_digit_strings(len)) {
      ParsePolicy exact;
      exact.expected_length = len;
      for (const TokenSeq& v : verbalizations(d)) {
        CHECK(parses_to(v, d));
        CHECK(parses_to(v, d, exact));
      }
    }
  }
}

TEST_CASE("parse agrees with brute-force inversion through length 3") {
  // Invert the generator over every digit string of length <= 3, then
  // check parse() returns exactly the same sources (restricted to the
  // exhaustively enumerated lengths).
  std::map<TokenSeq, std::set<std::string>> inverted;
  for (int len = 1; len <= 3; ++len) {
    for (const std::string& d : enumerate_digit_strings(len)) {
      for (const TokenSeq& v : verbalizations(d)) inverted[v].insert(d);
    }
  }
  REQUIRE(inverted.size() > 1000);
  for (const auto& [tokens, sources] : inverted) {
    std::set<std::string> got;
    for (const std::string& d : parse(tokens)) {
      if (d.size() <= 3) got.insert(d);
    }
    CHECK(got == sources);
  }
}

TEST_CASE("soundness: every parse result regenerates its input") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    int len = 1 + static_cast<int>(rng() % 5);
    std::string d = testutil::random_digit_string(rng, len);
    for (const TokenSeq& v : verbalizations(d)) {
      for (const std::string& back : parse(v)) {
        CHECK(verbalization_set(back).count(v) == 1);
      }
    }
  }
}

TEST_CASE("zero words are interchangeable under parse") {
  std::mt19937 rng(31);
  const Token zeros[3] = {Token::kZero, Token::kOh, Token::kO};
  for (int trial = 0; trial < 80; ++trial) {
    int len = 1 + static_cast<int>(rng() % 5);
    std::string d = testutil::random_digit_string(rng, len);
    for (TokenSeq v : verbalizations(d)) {
      auto baseline = parse(v);
      bool mutated = false;
      for (Token& t : v) {
        if (is_zero_word(t)) {
          t = zeros[rng() % 3];
          mutated = true;
        }
      }
      if (mutated) CHECK(parse(v) == baseline);
    }
  }
}

TEST_CASE("deleting any single and keeps the reading valid") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    int len = 1 + static_cast<int>(rng() % 5);
    std::string d = testutil::random_digit_string(rng, len);
    auto set = verbalization_set(d);
    for (const TokenSeq& v : set) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != Token::kAnd) continue;
        TokenSeq without = v;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK(set.count(without) == 1);
      }
    }
  }
}

TEST_CASE("outputs are deterministic across calls") {
  CHECK(verbalizations("90210") == verbalizations("90210"));
  auto tokens = tokenize("nine oh two one oh");
  CHECK(parse(tokens) == parse(tokens));
}

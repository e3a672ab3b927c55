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

#include "digits/vocab.hpp"

#include <cassert>
#include <string>
#include <unordered_map>

namespace digits {

namespace {

constexpr std::string_view kSurfaces[kVocabSize] = {
    "one",      "two",      "three",    "four",     "five",     "six",
    "seven",    "eight",    "nine",     "ten",      "eleven",   "twelve",
    "thirteen", "fourteen", "fifteen",  "sixteen",  "seventeen", "eighteen",
    "nineteen", "twenty",   "thirty",   "forty",    "fifty",    "sixty",
    "seventy",  "eighty",   "ninety",   "hundred",  "thousand", "zero",
    "oh",       "o",        "and",
};

}  // namespace

std::string_view surface(Token t) { return kSurfaces[static_cast<int>(t)]; }

std::optional<Token> token_from_surface(std::string_view word) {
  static const std::unordered_map<std::string_view, Token> map = [] {
    std::unordered_map<std::string_view, Token> m;
    for (Token t : all_tokens()) m.emplace(surface(t), t);
    return m;
  }();
  auto it = map.find(word);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

const std::array<Token, kVocabSize>& all_tokens() {
  static const std::array<Token, kVocabSize> tokens = [] {
    std::array<Token, kVocabSize> a{};
    for (int i = 0; i < kVocabSize; ++i) a[i] = static_cast<Token>(i);
    return a;
  }();
  return tokens;
}

const std::array<Token, kVocabSize>& vocab_table_order() {
  // Row-major over the published three-column table.
  static const std::array<Token, kVocabSize> order = {
      Token::kOne,      Token::kEleven,    Token::kTwenty,
      Token::kTwo,      Token::kTwelve,    Token::kThirty,
      Token::kThree,    Token::kThirteen,  Token::kForty,
      Token::kFour,     Token::kFourteen,  Token::kFifty,
      Token::kFive,     Token::kFifteen,   Token::kSixty,
      Token::kSix,      Token::kSixteen,   Token::kSeventy,
      Token::kSeven,    Token::kSeventeen, Token::kEighty,
      Token::kEight,    Token::kEighteen,  Token::kNinety,
      Token::kNine,     Token::kNineteen,  Token::kHundred,
      Token::kOh,       Token::kO,         Token::kTen,
      Token::kThousand, Token::kAnd,       Token::kZero,
  };
  return order;
}

int vocab_rank(Token t) {
  static const std::array<int, kVocabSize> ranks = [] {
    std::array<int, kVocabSize> r{};
    const auto& order = vocab_table_order();
    for (int i = 0; i < kVocabSize; ++i) r[static_cast<int>(order[i])] = i;
    return r;
  }();
  return ranks[static_cast<int>(t)];
}

bool is_unit(Token t) { return t >= Token::kOne && t <= Token::kNine; }

bool is_teen(Token t) { return t >= Token::kEleven && t <= Token::kNineteen; }

bool is_tens(Token t) { return t >= Token::kTwenty && t <= Token::kNinety; }

bool is_zero_word(Token t) {
  return t == Token::kZero || t == Token::kOh || t == Token::kO;
}

int unit_value(Token t) {
  assert(is_unit(t));
  return static_cast<int>(t) - static_cast<int>(Token::kOne) + 1;
}

int teen_value(Token t) {
  assert(is_teen(t));
  return static_cast<int>(t) - static_cast<int>(Token::kEleven) + 11;
}

int tens_value(Token t) {
  assert(is_tens(t));
  return (static_cast<int>(t) - static_cast<int>(Token::kTwenty) + 2) * 10;
}

Token unit_token(int digit) {
  assert(digit >= 1 && digit <= 9);
  return static_cast<Token>(static_cast<int>(Token::kOne) + digit - 1);
}

Token teen_token(int value) {
  assert(value >= 11 && value <= 19);
  return static_cast<Token>(static_cast<int>(Token::kEleven) + value - 11);
}

Token tens_token(int value) {
  assert(value >= 20 && value <= 90 && value % 10 == 0);
  return static_cast<Token>(static_cast<int>(Token::kTwenty) + value / 10 - 2);
}

std::string to_text(const TokenSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += surface(seq[i]);
  }
  return out;
}

}  // namespace digits

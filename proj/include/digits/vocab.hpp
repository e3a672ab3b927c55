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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace digits {

// The closed 33-word vocabulary of the spoken-digit domain. "oh" and "o"
// are distinct tokens; both read as digit 0. "and" is a connective only.
enum class Token : std::uint8_t {
  kOne,
  kTwo,
  kThree,
  kFour,
  kFive,
  kSix,
  kSeven,
  kEight,
  kNine,
  kTen,
  kEleven,
  kTwelve,
  kThirteen,
  kFourteen,
  kFifteen,
  kSixteen,
  kSeventeen,
  kEighteen,
  kNineteen,
  kTwenty,
  kThirty,
  kForty,
  kFifty,
  kSixty,
  kSeventy,
  kEighty,
  kNinety,
  kHundred,
  kThousand,
  kZero,
  kOh,
  kO,
  kAnd,
};

inline constexpr int kVocabSize = 33;

using TokenSeq = std::vector<Token>;

// Lowercase surface form, e.g. surface(Token::kForty) == "forty".
std::string_view surface(Token t);

// Exact lowercase surface lookup; nullopt for anything outside the vocabulary.
std::optional<Token> token_from_surface(std::string_view word);

// All tokens in internal (numeric) order.
const std::array<Token, kVocabSize>& all_tokens();

// The canonical published ordering of the vocabulary (row-major across the
// three-column token table). This is the export order and the tie-break
// order used wherever "vocabulary order" is called for.
const std::array<Token, kVocabSize>& vocab_table_order();

// Rank of a token in vocab_table_order(), 0-based.
int vocab_rank(Token t);

// Classification helpers over the number-word subsets.
bool is_unit(Token t);      // one..nine
bool is_teen(Token t);      // eleven..nineteen
bool is_tens(Token t);      // twenty..ninety
bool is_zero_word(Token t);  // zero, oh, o

int unit_value(Token t);  // 1..9
int teen_value(Token t);  // 11..19
int tens_value(Token t);  // 20..90

Token unit_token(int digit);  // 1..9
Token teen_token(int value);  // 11..19
Token tens_token(int value);  // 20, 30, ... 90

// "six fifty three" style rendering of a token sequence.
std::string to_text(const TokenSeq& seq);

}  // namespace digits

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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digits/vocab.hpp"

namespace digits {

// A digit string is 1 to 5 characters of '0'..'9'. Leading zeros are
// meaningful (account numbers, CVVs), so "05" and "5" are distinct values.
inline constexpr std::size_t kMaxDigits = 5;

bool is_valid_digit_string(std::string_view d);

// How parse() filters and orders its candidates.
//
// Candidates are ranked by (fewest groups in the best derivation, shortest
// digit string, lexicographically smallest digit string). With
// expected_length set, only candidates of exactly that length survive.
// With allow_and false, sequences containing "and" do not parse at all.
struct ParsePolicy {
  std::optional<int> expected_length;  // in [1, 5] when set
  bool allow_and = true;
};

// Splits free-form text into vocabulary tokens: lowercase, punctuation
// stripped, whitespace/hyphen separated. Throws OutOfVocabulary naming the
// first piece that is not one of the 33 tokens.
TokenSeq tokenize(std::string_view text);

// Every reading of `d` generated by the number grammar, duplicate-free and
// in a stable order.
//
// The grammar: pick a partition of the digit string into contiguous groups
// of 1-3 digits and read each group (single digits read as their word, with
// 0 reading as any of zero/oh/o; two-digit groups read as ten/teens/tens
// words when the leading digit is nonzero; three-digit groups read as
// "<unit> hundred [and] <rest>"). In addition, 4- and 5-digit strings whose
// leading 1-2 digits are nonzero get "<head> thousand [and] <tail>"
// readings. "and" may only follow "hundred" or "thousand", and never
// precedes a tail that itself contains "hundred". The plain digit-by-digit
// reading is always present.
std::vector<TokenSeq> verbalizations(std::string_view d);

// Inverse of the grammar: every digit string whose verbalizations contain
// `tokens`, filtered and ranked per the policy. Empty when nothing parses.
std::vector<std::string> parse(const TokenSeq& tokens,
                               const ParsePolicy& policy = {});

enum class VerbalStyle {
  kDigitByDigit,  // one word per digit, 0 -> "zero"
  kCompact,       // shortest and-free reading
};

// Deterministic reference reading for fixtures and transcripts.
TokenSeq canonical_verbalization(std::string_view d, VerbalStyle style);

}  // namespace digits

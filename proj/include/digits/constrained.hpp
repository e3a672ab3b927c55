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

#include <string>
#include <string_view>
#include <vector>

#include "digits/grammar.hpp"
#include "digits/vocab.hpp"

namespace digits {

// A vocabulary token within edit distance of an observed word.
struct SnapCandidate {
  std::string original;
  Token token;
  int distance = 0;  // grapheme-level Levenshtein
};

struct DroppedWord {
  std::string word;
  std::string reason;
};

struct ConstrainedResult {
  TokenSeq snapped;
  int total_distance = 0;
  std::vector<std::string> digit_candidates;  // grammar parse of `snapped`
  std::vector<DroppedWord> dropped;
};

// Grapheme-level Levenshtein distance over the normalized forms.
int edit_distance(std::string_view a, std::string_view b);

// Every vocabulary token within max_distance of the word, ascending by
// (distance, vocabulary order). An in-vocabulary word returns itself at
// distance 0 first; an empty list means the word is unsnappable. Matching
// is by spelling, not sound, so look-alikes ("fix" -> six) snap while
// sound-alikes ("well" -> twelve) generally do not at tight distances.
std::vector<SnapCandidate> snap_to_vocab(std::string_view word,
                                         int max_distance);

// Greedy per-word snapping of a hypothesis onto the vocabulary followed by
// a grammar parse. Words with no candidate are dropped with a reason and
// the rest of the sequence is decoded without them.
ConstrainedResult constrained_transcript(
    const std::vector<std::string>& hyp_words, int max_distance = 1,
    const ParsePolicy& policy = {});

}  // namespace digits

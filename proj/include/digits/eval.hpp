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
#include <string>
#include <vector>

#include "digits/vocab.hpp"

namespace digits {

// Scoring runs over plain words so hypotheses may contain anything; only
// references are expected to stay inside the vocabulary.
using WordList = std::vector<std::string>;

enum class EditOp : std::uint8_t { kMatch, kSub, kDel, kIns };

struct AlignStep {
  EditOp op;
  std::string ref;  // empty for insertions
  std::string hyp;  // empty for deletions
};

// Minimal-cost word alignment with unit costs. S + D + I is the edit
// distance; N is the reference length.
struct Alignment {
  std::vector<AlignStep> steps;
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int ref_words = 0;

  int edits() const { return substitutions + deletions + insertions; }
};

struct WerReport {
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int ref_words = 0;

  int edits() const { return substitutions + deletions + insertions; }
  double wer() const {
    return static_cast<double>(substitutions + deletions + insertions) /
           ref_words;
  }
  double percent() const { return wer() * 100.0; }
};

struct RtfReport {
  double transcribe_seconds = 0.0;
  double audio_seconds = 0.0;

  double rtf() const { return transcribe_seconds / audio_seconds; }
  bool at_or_above_realtime() const { return rtf() >= 1.0; }
};

enum class ValueCategory {
  kSingleDigit0To9,
  kTwoDigit11To99,
  kMultiDigitOver99,
};

// Where the 10/100 boundary values land is a reporting choice, not a fact
// of the data; defaults put 10 with the two-digit bucket and 100 with the
// multi-digit bucket.
struct BucketPolicy {
  int single_max = 9;   // values <= this are single-digit
  int multi_min = 100;  // values >= this are multi-digit
};

struct ErrorBucket {
  ValueCategory category;
  int exact_match = 0;
  int substitution_error = 0;  // nonzero edits, hypothesis present
  int blank_output = 0;        // empty hypothesis
  int other = 0;

  int total() const {
    return exact_match + substitution_error + blank_output + other;
  }
};

struct ScoredUtterance {
  std::string utt_id;
  WordList ref;
  WordList hyp;
};

// Levenshtein alignment with a MATCH > SUB > DEL > INS backtrace
// preference. Throws EmptyReference when ref is empty; an empty hypothesis
// is a legal all-deletions alignment.
Alignment align(const WordList& ref, const WordList& hyp);

WerReport wer(const Alignment& alignment);

// Micro-average: edit counts and reference lengths sum across utterances.
WerReport corpus_wer(const std::vector<WerReport>& reports);

// Throws ZeroDuration unless audio_seconds > 0; transcribe_seconds must be
// non-negative.
RtfReport rtf(double transcribe_seconds, double audio_seconds);

struct CategorizedRecord {
  TokenSeq ref;
  WordList hyp;  // empty = blank output
};

// Buckets utterances by the numeric value of the reference's top-ranked
// parse and classifies each as exact / substitution / blank. Throws
// UnparseableReference when a reference has no parse.
std::array<ErrorBucket, 3> categorize_errors(
    const std::vector<CategorizedRecord>& records,
    const BucketPolicy& policy = {});

// TSV interfaces: `utt_id<TAB>reference<TAB>hypothesis` (hypothesis may be
// empty or absent) and `utt_id<TAB>transcribe_seconds<TAB>audio_seconds`.
std::vector<ScoredUtterance> parse_scoring_lines(const std::string& text);

struct TimingRecord {
  std::string utt_id;
  double transcribe_seconds = 0.0;
  double audio_seconds = 0.0;
};
std::vector<TimingRecord> parse_timing_lines(const std::string& text);

// `WER <pct> S <n> D <n> I <n> N <n>`, percentage to two decimals.
std::string format_wer_line(const WerReport& report);

std::string bucket_name(ValueCategory category);
std::string format_bucket_line(const ErrorBucket& bucket);

}  // namespace digits

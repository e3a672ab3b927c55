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

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "digits/errors.hpp"
#include "digits/grammar.hpp"
#include "digits/textnorm.hpp"

namespace digits {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

double parse_seconds(const std::string& field, const std::string& line) {
  try {
    std::size_t used = 0;
    double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw Error("bad numeric field \"" + field + "\" in line \"" + line +
                "\"");
  }
}

}  // namespace

Alignment align(const WordList& ref, const WordList& hyp) {
  if (ref.empty()) throw EmptyReference("reference has no words");
  const std::size_t m = ref.size(), n = hyp.size();
  std::vector<std::vector<int>> cost(m + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) cost[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= n; ++j) cost[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      int sub = cost[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cost[i][j] = std::min({sub, cost[i - 1][j] + 1, cost[i][j - 1] + 1});
    }
  }

  // Backtrace preferring match, then substitution, deletion, insertion.
  Alignment out;
  out.ref_words = static_cast<int>(m);
  std::size_t i = m, j = n;
  std::vector<AlignStep> reversed;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        cost[i][j] == cost[i - 1][j - 1]) {
      reversed.push_back({EditOp::kMatch, ref[i - 1], hyp[j - 1]});
      --i, --j;
    } else if (i > 0 && j > 0 && cost[i][j] == cost[i - 1][j - 1] + 1) {
      reversed.push_back({EditOp::kSub, ref[i - 1], hyp[j - 1]});
      ++out.substitutions;
      --i, --j;
    } else if (i > 0 && cost[i][j] == cost[i - 1][j] + 1) {
      reversed.push_back({EditOp::kDel, ref[i - 1], {}});
      ++out.deletions;
      --i;
    } else {
      reversed.push_back({EditOp::kIns, {}, hyp[j - 1]});
      ++out.insertions;
      --j;
    }
  }
  out.steps.assign(reversed.rbegin(), reversed.rend());
  return out;
}

WerReport wer(const Alignment& alignment) {
  WerReport report;
  report.substitutions = alignment.substitutions;
  report.deletions = alignment.deletions;
  report.insertions = alignment.insertions;
  report.ref_words = alignment.ref_words;
  return report;
}

WerReport corpus_wer(const std::vector<WerReport>& reports) {
  if (reports.empty()) throw EmptyCorpus("no utterances to aggregate");
  WerReport total;
  for (const WerReport& r : reports) {
    total.substitutions += r.substitutions;
    total.deletions += r.deletions;
    total.insertions += r.insertions;
    total.ref_words += r.ref_words;
  }
  return total;
}

RtfReport rtf(double transcribe_seconds, double audio_seconds) {
  if (audio_seconds <= 0.0) {
    throw ZeroDuration("audio duration must be positive, got " +
                       std::to_string(audio_seconds));
  }
  if (transcribe_seconds < 0.0) {
    throw Error("transcription time must be non-negative");
  }
  return RtfReport{transcribe_seconds, audio_seconds};
}

std::array<ErrorBucket, 3> categorize_errors(
    const std::vector<CategorizedRecord>& records,
    const BucketPolicy& policy) {
  std::array<ErrorBucket, 3> buckets = {
      ErrorBucket{ValueCategory::kSingleDigit0To9},
      ErrorBucket{ValueCategory::kTwoDigit11To99},
      ErrorBucket{ValueCategory::kMultiDigitOver99},
  };
  for (const CategorizedRecord& record : records) {
    std::vector<std::string> candidates = parse(record.ref);
    if (candidates.empty()) {
      throw UnparseableReference("reference \"" + to_text(record.ref) +
                                 "\" has no digit parse");
    }
    long value = std::stol(candidates.front());
    ErrorBucket& bucket =
        value <= policy.single_max  ? buckets[0]
        : value >= policy.multi_min ? buckets[2]
                                    : buckets[1];
    if (record.hyp.empty()) {
      ++bucket.blank_output;
      continue;
    }
    WordList ref_words;
    ref_words.reserve(record.ref.size());
    for (Token t : record.ref) ref_words.emplace_back(surface(t));
    if (align(ref_words, record.hyp).edits() == 0) {
      ++bucket.exact_match;
    } else {
      ++bucket.substitution_error;
    }
  }
  return buckets;
}

std::vector<ScoredUtterance> parse_scoring_lines(const std::string& text) {
  std::vector<ScoredUtterance> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      throw Error("scoring line needs utt_id<TAB>ref[<TAB>hyp]: \"" + line +
                  "\"");
    }
    ScoredUtterance utt;
    utt.utt_id = fields[0];
    utt.ref = normalize_words(fields[1]);
    if (fields.size() == 3) utt.hyp = normalize_words(fields[2]);
    out.push_back(std::move(utt));
  }
  return out;
}

std::vector<TimingRecord> parse_timing_lines(const std::string& text) {
  std::vector<TimingRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 3 || fields[0].empty()) {
      throw Error("timing line needs utt_id<TAB>seconds<TAB>seconds: \"" +
                  line + "\"");
    }
    out.push_back({fields[0], parse_seconds(fields[1], line),
                   parse_seconds(fields[2], line)});
  }
  return out;
}

std::string format_wer_line(const WerReport& report) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "WER %.2f S %d D %d I %d N %d",
                report.percent(), report.substitutions, report.deletions,
                report.insertions, report.ref_words);
  return buf;
}

std::string bucket_name(ValueCategory category) {
  switch (category) {
    case ValueCategory::kSingleDigit0To9:
      return "single-digit-0-9";
    case ValueCategory::kTwoDigit11To99:
      return "two-digit-11-99";
    case ValueCategory::kMultiDigitOver99:
      return "multi-digit-gt-99";
  }
  return "unknown";
}

std::string format_bucket_line(const ErrorBucket& bucket) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%s exact %d substitution %d blank %d other %d",
                bucket_name(bucket.category).c_str(), bucket.exact_match,
                bucket.substitution_error, bucket.blank_output, bucket.other);
  return buf;
}

}  // namespace digits

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

#include "digits/constrained.hpp"

#include <algorithm>

#include "digits/textnorm.hpp"

namespace digits {

int edit_distance(std::string_view a, std::string_view b) {
  const std::size_t m = a.size(), n = b.size();
  std::vector<int> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = std::min({prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1),
                         prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

std::vector<SnapCandidate> snap_to_vocab(std::string_view word,
                                         int max_distance) {
  std::string normalized = normalize_word(word);
  if (normalized.empty()) return {};
  std::vector<SnapCandidate> out;
  for (Token t : vocab_table_order()) {
    int d = edit_distance(normalized, surface(t));
    if (d <= max_distance) {
      out.push_back({std::string(word), t, d});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SnapCandidate& a, const SnapCandidate& b) {
                     if (a.distance != b.distance) return a.distance < b.distance;
                     return vocab_rank(a.token) < vocab_rank(b.token);
                   });
  return out;
}

ConstrainedResult constrained_transcript(
    const std::vector<std::string>& hyp_words, int max_distance,
    const ParsePolicy& policy) {
  ConstrainedResult result;
  for (const std::string& word : hyp_words) {
    for (const std::string& piece : normalize_words(word)) {
      std::vector<SnapCandidate> candidates =
          snap_to_vocab(piece, max_distance);
      if (candidates.empty()) {
        result.dropped.push_back(
            {piece, "no vocabulary token within distance " +
                        std::to_string(max_distance)});
        continue;
      }
      result.snapped.push_back(candidates.front().token);
      result.total_distance += candidates.front().distance;
    }
  }
  if (!result.snapped.empty()) {
    result.digit_candidates = parse(result.snapped, policy);
  }
  return result;
}

}  // namespace digits

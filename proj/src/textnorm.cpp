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

#include "digits/textnorm.hpp"

#include <cctype>

namespace digits {

namespace {

inline bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

inline bool is_separator(unsigned char c) {
  return std::isspace(c) != 0 || c == '-';
}

}  // namespace

std::vector<std::string> normalize_words(std::string_view text) {
  std::vector<std::string> pieces;
  std::string current;
  for (unsigned char c : text) {
    if (is_word_char(c)) {
      current += static_cast<char>(std::tolower(c));
    } else if (is_separator(c)) {
      if (!current.empty()) {
        pieces.push_back(std::move(current));
        current.clear();
      }
    }
    // Anything else is punctuation: dropped, not a separator.
  }
  if (!current.empty()) pieces.push_back(std::move(current));
  return pieces;
}

std::string normalize_word(std::string_view word) {
  std::string out;
  for (unsigned char c : word) {
    if (is_word_char(c)) out += static_cast<char>(std::tolower(c));
  }
  return out;
}

}  // namespace digits

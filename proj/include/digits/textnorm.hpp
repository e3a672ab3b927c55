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

namespace digits {

// Shared text normalization: lowercase, drop punctuation, split on
// whitespace and hyphens ("fifty-three" -> {"fifty", "three"}). Used by the
// tokenizer, the scorer and the snapper so all three agree on word
// boundaries. Pieces never contain uppercase or punctuation; the result may
// be empty if the input had no word characters.
std::vector<std::string> normalize_words(std::string_view text);

// Single-word form: lowercase and strip everything that is not a letter or
// digit, without splitting. "Fifty-three" -> "fiftythree".
std::string normalize_word(std::string_view word);

}  // namespace digits

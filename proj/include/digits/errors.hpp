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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace digits {

// Base for all domain errors raised by the toolkit. The CLI maps these to
// exit code 1; anything else escaping main is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class OutOfVocabulary : public Error {
 public:
  OutOfVocabulary(std::string word, std::size_t position)
      : Error("out-of-vocabulary word \"" + word + "\" at position " +
              std::to_string(position)),
        word_(std::move(word)),
        position_(position) {}
  const std::string& word() const { return word_; }
  std::size_t position() const { return position_; }

 private:
  std::string word_;
  std::size_t position_;
};

class MalformedDocument : public Error {
 public:
  using Error::Error;
};

class NegativeDuration : public Error {
 public:
  using Error::Error;
};

class MalformedWav : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedRate : public Error {
 public:
  using Error::Error;
};

class EmptyManifest : public Error {
 public:
  using Error::Error;
};

class MalformedManifest : public Error {
 public:
  using Error::Error;
};

class DuplicateUttId : public Error {
 public:
  using Error::Error;
};

class EmptyReference : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class ZeroDuration : public Error {
 public:
  using Error::Error;
};

class UnparseableReference : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class BadConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace digits

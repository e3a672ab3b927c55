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

#include "digits/curation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "digits/errors.hpp"
#include "digits/grammar.hpp"
#include "digits/textnorm.hpp"

namespace digits {

namespace {

using nlohmann::json;

std::string stem_of(std::string_view path) {
  return std::filesystem::path(path).stem().string();
}

// Tokenization of a single stamped word; nullopt when any piece falls
// outside the vocabulary (the word then breaks a run).
std::optional<TokenSeq> try_tokenize_word(const std::string& text) {
  std::vector<std::string> pieces = normalize_words(text);
  if (pieces.empty()) return std::nullopt;
  TokenSeq out;
  for (const std::string& piece : pieces) {
    std::optional<Token> t = token_from_surface(piece);
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  return out;
}

void write_lines(const std::filesystem::path& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  for (const std::string& line : lines) out << line << '\n';
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedManifest("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::pair<std::string, std::string> split_first_field(const std::string& line,
                                                      const char* what) {
  std::size_t sp = line.find(' ');
  if (sp == std::string::npos || sp == 0) {
    throw MalformedManifest(std::string(what) + ": bad line \"" + line + "\"");
  }
  return {line.substr(0, sp), line.substr(sp + 1)};
}

}  // namespace

TranscriptDoc load_word_stamps(std::string_view json_bytes,
                               std::string audio_path, double epsilon) {
  json doc;
  try {
    doc = json::parse(json_bytes);
  } catch (const json::exception& e) {
    throw MalformedDocument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("words") || !doc["words"].is_array()) {
    throw MalformedDocument("missing top-level \"words\" array");
  }
  TranscriptDoc out;
  out.audio_path = std::move(audio_path);
  for (const json& w : doc["words"]) {
    if (!w.is_object() || !w.contains("text") || !w.contains("start") ||
        !w.contains("end")) {
      throw MalformedDocument("word entry missing text/start/end");
    }
    if (!w["text"].is_string() || !w["start"].is_number() ||
        !w["end"].is_number()) {
      throw MalformedDocument("word entry has wrong field types");
    }
    WordStamp stamp;
    stamp.text = w["text"].get<std::string>();
    stamp.start = w["start"].get<double>();
    stamp.end = w["end"].get<double>();
    if (w.contains("confidence")) {
      if (!w["confidence"].is_number()) {
        throw MalformedDocument("confidence must be numeric");
      }
      stamp.confidence = w["confidence"].get<double>();
    }
    if (stamp.end < stamp.start) {
      if (stamp.start - stamp.end > epsilon) {
        throw NegativeDuration("word \"" + stamp.text + "\" ends at " +
                               std::to_string(stamp.end) + "s before start " +
                               std::to_string(stamp.start) + "s");
      }
      stamp.end = stamp.start;
    }
    out.words.push_back(std::move(stamp));
  }
  std::stable_sort(
      out.words.begin(), out.words.end(),
      [](const WordStamp& a, const WordStamp& b) { return a.start < b.start; });
  return out;
}

std::vector<ClipSpec> extract_number_runs(const TranscriptDoc& doc,
                                          double max_gap) {
  std::vector<ClipSpec> clips;
  std::size_t i = 0;
  int run_index = 0;
  while (i < doc.words.size()) {
    std::optional<TokenSeq> first = try_tokenize_word(doc.words[i].text);
    if (!first) {
      ++i;
      continue;
    }
    ClipSpec clip;
    clip.source = doc.audio_path;
    clip.start = doc.words[i].start;
    clip.end = doc.words[i].end;
    clip.tokens = std::move(*first);
    std::size_t j = i + 1;
    while (j < doc.words.size()) {
      double gap = doc.words[j].start - doc.words[j - 1].end;
      if (gap > max_gap) break;
      std::optional<TokenSeq> next = try_tokenize_word(doc.words[j].text);
      if (!next) break;
      clip.end = doc.words[j].end;
      clip.tokens.insert(clip.tokens.end(), next->begin(), next->end());
      ++j;
    }
    clip.digit_candidates = parse(clip.tokens);
    clip.utt_id = make_utt_id(doc.audio_path, run_index, clip.start);
    clips.push_back(std::move(clip));
    ++run_index;
    i = j;
  }
  return clips;
}

AudioBuffer slice_audio(const AudioBuffer& audio, const ClipSpec& clip,
                        double boundary_pad) {
  return slice_audio(audio, clip.start, clip.end, boundary_pad);
}

std::pair<Manifest, Manifest> split_train_test(const Manifest& manifest,
                                               double ratio,
                                               std::uint64_t seed) {
  const std::size_t n = manifest.entries.size();
  if (n == 0) throw EmptyManifest("cannot split an empty manifest");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // Explicit Fisher-Yates so the partition does not depend on any
  // library's shuffle internals.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  const auto train_n = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(n)));
  Manifest train, test;
  train.split = Split::kTrain;
  test.split = Split::kTest;
  for (std::size_t i = 0; i < n; ++i) {
    (i < train_n ? train : test).entries.push_back(manifest.entries[order[i]]);
  }
  auto by_id = [](const ManifestEntry& a, const ManifestEntry& b) {
    return a.utt_id < b.utt_id;
  };
  std::sort(train.entries.begin(), train.entries.end(), by_id);
  std::sort(test.entries.begin(), test.entries.end(), by_id);
  return {std::move(train), std::move(test)};
}

std::pair<Manifest, Manifest> split_train_test_by_speaker(
    const Manifest& manifest, double ratio, std::uint64_t seed) {
  if (manifest.entries.empty()) {
    throw EmptyManifest("cannot split an empty manifest");
  }
  std::map<std::string, Manifest> groups;
  for (const ManifestEntry& e : manifest.entries) {
    groups[e.speaker].entries.push_back(e);
  }
  Manifest train, test;
  train.split = Split::kTrain;
  test.split = Split::kTest;
  for (const auto& [speaker, group] : groups) {
    // FNV-1a over the speaker id keeps group seeds stable and distinct.
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : speaker) h = (h ^ c) * 1099511628211ull;
    auto [gtrain, gtest] = split_train_test(group, ratio, seed ^ h);
    train.entries.insert(train.entries.end(), gtrain.entries.begin(),
                         gtrain.entries.end());
    test.entries.insert(test.entries.end(), gtest.entries.begin(),
                        gtest.entries.end());
  }
  auto by_id = [](const ManifestEntry& a, const ManifestEntry& b) {
    return a.utt_id < b.utt_id;
  };
  std::sort(train.entries.begin(), train.entries.end(), by_id);
  std::sort(test.entries.begin(), test.entries.end(), by_id);
  return {std::move(train), std::move(test)};
}

Manifest emit_corpus(const std::vector<ClipSpec>& clips,
                     const std::map<std::string, AudioBuffer>& audio_store,
                     const std::filesystem::path& out_dir,
                     const EmitOptions& options) {
  std::filesystem::create_directories(out_dir / "wav");

  Manifest manifest;
  std::set<std::string> seen_ids;
  for (const ClipSpec& clip : clips) {
    if (!seen_ids.insert(clip.utt_id).second) {
      throw DuplicateUttId("duplicate utterance id " + clip.utt_id);
    }
    auto it = audio_store.find(clip.source);
    if (it == audio_store.end()) {
      throw Error("no audio loaded for " + clip.source);
    }
    AudioBuffer cut = slice_audio(it->second, clip, options.boundary_pad);
    AudioBuffer standardized = resample_to_8k(cut);
    AudioBuffer padded =
        pad_silence(standardized, options.lead, options.trail);
    std::string rel = "wav/" + clip.utt_id + ".wav";
    write_wav(out_dir / rel, padded);

    ManifestEntry entry;
    entry.utt_id = clip.utt_id;
    entry.wav_path = rel;
    entry.transcript = to_text(clip.tokens);
    entry.speaker = stem_of(clip.source);
    manifest.entries.push_back(std::move(entry));
  }
  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.utt_id < b.utt_id;
            });
  write_manifest(manifest, out_dir);
  return manifest;
}

void write_manifest(const Manifest& manifest,
                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<ManifestEntry> sorted = manifest.entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.utt_id < b.utt_id;
            });
  std::vector<std::string> scp, text, utt2spk;
  for (const ManifestEntry& e : sorted) {
    scp.push_back(e.utt_id + " " + e.wav_path);
    text.push_back(e.utt_id + " " + e.transcript);
    utt2spk.push_back(e.utt_id + " " + e.speaker);
  }
  write_lines(dir / "wav.scp", scp);
  write_lines(dir / "text", text);
  write_lines(dir / "utt2spk", utt2spk);
}

Manifest read_data_dir(const std::filesystem::path& dir) {
  std::map<std::string, ManifestEntry> by_id;
  for (const std::string& line : read_lines(dir / "wav.scp")) {
    auto [id, path] = split_first_field(line, "wav.scp");
    ManifestEntry& e = by_id[id];
    e.utt_id = id;
    e.wav_path = path;
  }
  for (const std::string& line : read_lines(dir / "text")) {
    auto [id, transcript] = split_first_field(line, "text");
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw MalformedManifest("utterance " + id + " in text but not wav.scp");
    }
    tokenize(transcript);  // throws OutOfVocabulary on a bad transcript
    it->second.transcript = transcript;
  }
  for (const std::string& line : read_lines(dir / "utt2spk")) {
    auto [id, speaker] = split_first_field(line, "utt2spk");
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw MalformedManifest("utterance " + id +
                              " in utt2spk but not wav.scp");
    }
    it->second.speaker = speaker;
  }
  Manifest out;
  for (auto& [id, entry] : by_id) {
    if (entry.transcript.empty()) {
      throw MalformedManifest("utterance " + id + " missing from text");
    }
    if (entry.speaker.empty()) {
      throw MalformedManifest("utterance " + id + " missing from utt2spk");
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string make_utt_id(std::string_view source, int run_index, double start) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "-%04d-%08lld", run_index,
                static_cast<long long>(std::llround(start * 1000.0)));
  return stem_of(source) + buf;
}

}  // namespace digits

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

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digits/audio.hpp"
#include "digits/vocab.hpp"

namespace digits {

// One word from a forced-alignment document, times in seconds.
struct WordStamp {
  std::string text;
  double start = 0.0;
  double end = 0.0;
  std::optional<double> confidence;
};

struct TranscriptDoc {
  std::string audio_path;
  std::vector<WordStamp> words;
};

// A planned excerpt: a maximal run of vocabulary words with merged bounds.
struct ClipSpec {
  std::string source;  // audio path
  double start = 0.0;
  double end = 0.0;
  TokenSeq tokens;
  std::vector<std::string> digit_candidates;  // ranked parses of tokens
  std::string utt_id;
};

struct ManifestEntry {
  std::string utt_id;
  std::string wav_path;  // relative to the data directory
  std::string transcript;
  std::string speaker;
};

enum class Split { kAll, kTrain, kTest };

struct Manifest {
  std::vector<ManifestEntry> entries;
  Split split = Split::kAll;
};

// Parses an alignment document: UTF-8 JSON with a top-level "words" array
// of {"text", "start", "end"[, "confidence"]}. Words are re-sorted by start
// when the source violates ordering. An end earlier than its start by more
// than `epsilon` raises NegativeDuration; smaller inversions are clamped.
TranscriptDoc load_word_stamps(std::string_view json_bytes,
                               std::string audio_path = {},
                               double epsilon = 0.01);

// Finds maximal runs of consecutive in-vocabulary words whose inter-word
// gap does not exceed max_gap (seconds; infinity merges on adjacency
// alone). Non-vocabulary words always break a run. Matching is whole-word
// after normalization, so "tenth" does not count as "ten".
std::vector<ClipSpec> extract_number_runs(
    const TranscriptDoc& doc,
    double max_gap = std::numeric_limits<double>::infinity());

AudioBuffer slice_audio(const AudioBuffer& audio, const ClipSpec& clip,
                        double boundary_pad = 0.0);

// Deterministic shuffle-and-cut at round(ratio * N). Same seed, same
// partition; the two halves are disjoint and cover the input.
std::pair<Manifest, Manifest> split_train_test(const Manifest& manifest,
                                               double ratio, std::uint64_t seed);

// Per-speaker variant: the 90:10-style cut is applied within each speaker
// group, with a group-derived seed, then merged.
std::pair<Manifest, Manifest> split_train_test_by_speaker(
    const Manifest& manifest, double ratio, std::uint64_t seed);

struct EmitOptions {
  double boundary_pad = 0.0;
  double lead = 1.0;
  double trail = 1.0;
};

// Cuts every clip from its source audio, standardizes to 8 kHz / 16-bit
// mono, pads silence, and writes `wav/<utt_id>.wav` plus the wav.scp /
// text / utt2spk triple under out_dir. Duplicate utt_ids are fatal.
Manifest emit_corpus(const std::vector<ClipSpec>& clips,
                     const std::map<std::string, AudioBuffer>& audio_store,
                     const std::filesystem::path& out_dir,
                     const EmitOptions& options = {});

// Writes only the metadata triple (wav.scp, text, utt2spk), sorted by
// utt_id, one directory per manifest.
void write_manifest(const Manifest& manifest,
                    const std::filesystem::path& dir);

// Re-parses a data directory written by write_manifest/emit_corpus.
// Validates that transcripts stay inside the vocabulary.
Manifest read_data_dir(const std::filesystem::path& dir);

// `<source-stem>-<run-index>-<start-ms>`, zero-padded so lexicographic and
// chronological order agree.
std::string make_utt_id(std::string_view source, int run_index, double start);

}  // namespace digits

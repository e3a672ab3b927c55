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
#include <vector>

namespace digits {

inline constexpr int kTargetRate = 8000;

// Mono 16-bit PCM audio. Everything the curation pipeline emits is
// standardized to 8000 Hz.
struct AudioBuffer {
  int sample_rate = 0;
  std::vector<std::int16_t> samples;

  double duration() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// Reads a RIFF/WAVE file holding 16-bit PCM. Multi-channel input is
// downmixed to mono by averaging. Throws MalformedWav on anything else.
AudioBuffer read_wav(const std::filesystem::path& path);

// Writes mono 16-bit little-endian PCM with a plain 44-byte header.
void write_wav(const std::filesystem::path& path, const AudioBuffer& audio);

// Extracts [start - pad, end + pad], clamped to the buffer. Throws
// OutOfRange when start lies beyond the end of the audio.
AudioBuffer slice_audio(const AudioBuffer& audio, double start, double end,
                        double boundary_pad = 0.0);

// Rate conversion to 8000 Hz with a Kaiser-windowed sinc low-pass at
// 0.45x the lower of the two rates. Input already at 8000 Hz is returned
// bit-identical. Output length is round(n_in * 8000 / rate_in) exactly.
AudioBuffer resample_to_8k(const AudioBuffer& audio);

// Prepends/appends digital-zero silence. Lengths round half away from zero.
AudioBuffer pad_silence(const AudioBuffer& audio, double lead, double trail);

}  // namespace digits

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

#include "digits/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <string>

#include "digits/errors.hpp"

namespace digits {

namespace {

constexpr double kCutoffFraction = 0.45;  // of the lower sample rate
constexpr double kKaiserBeta = 8.6;
constexpr int kSincZeroCrossings = 32;    // per side, at the cutoff rate

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0]) |
         static_cast<std::uint16_t>(p[1] << 8);
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

// Zeroth-order modified Bessel function, power series.
double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= (x / (2.0 * k)) * (x / (2.0 * k));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

// round(num/den) for non-negative integers, halves away from zero.
std::int64_t round_ratio(std::int64_t num, std::int64_t den) {
  return (2 * num + den) / (2 * den);
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedWav("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 12 || std::memcmp(p, "RIFF", 4) != 0 ||
      std::memcmp(p + 8, "WAVE", 4) != 0) {
    throw MalformedWav(path.string() + ": not a RIFF/WAVE file");
  }

  int channels = 0, rate = 0, bits = 0;
  std::size_t data_off = 0, data_len = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    std::uint32_t chunk_len = read_u32(p + pos + 4);
    if (std::memcmp(p + pos, "fmt ", 4) == 0 && chunk_len >= 16 &&
        pos + 8 + 16 <= bytes.size()) {
      const unsigned char* f = p + pos + 8;
      std::uint16_t format = read_u16(f);
      channels = read_u16(f + 2);
      rate = static_cast<int>(read_u32(f + 4));
      bits = read_u16(f + 14);
      if (format != 1) {
        throw MalformedWav(path.string() + ": only PCM (format 1) supported");
      }
    } else if (std::memcmp(p + pos, "data", 4) == 0) {
      data_off = pos + 8;
      data_len = std::min<std::size_t>(chunk_len, bytes.size() - data_off);
    }
    pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }
  if (channels <= 0 || rate <= 0 || data_off == 0) {
    throw MalformedWav(path.string() + ": missing fmt or data chunk");
  }
  if (bits != 16) {
    throw MalformedWav(path.string() + ": only 16-bit PCM supported, got " +
                       std::to_string(bits) + "-bit");
  }

  const std::size_t frame_bytes = 2 * static_cast<std::size_t>(channels);
  const std::size_t frames = data_len / frame_bytes;
  AudioBuffer out;
  out.sample_rate = rate;
  out.samples.resize(frames);
  const unsigned char* d = p + data_off;
  for (std::size_t i = 0; i < frames; ++i) {
    int acc = 0;
    for (int c = 0; c < channels; ++c) {
      acc += static_cast<std::int16_t>(
          read_u16(d + i * frame_bytes + 2 * static_cast<std::size_t>(c)));
    }
    out.samples[i] = static_cast<std::int16_t>(acc / channels);
  }
  return out;
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& audio) {
  const std::uint32_t data_len =
      static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_len);
  out.append("RIFF");
  put_u32(out, 36 + data_len);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(audio.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(audio.sample_rate * 2));  // byte rate
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out.append("data");
  put_u32(out, data_len);
  for (std::int16_t s : audio.samples) {
    put_u16(out, static_cast<std::uint16_t>(s));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw Error("short write to " + path.string());
}

AudioBuffer slice_audio(const AudioBuffer& audio, double start, double end,
                        double boundary_pad) {
  const double duration = audio.duration();
  if (start > duration) {
    throw OutOfRange("clip start " + std::to_string(start) +
                     "s beyond audio end " + std::to_string(duration) + "s");
  }
  const double s = std::max(0.0, start - boundary_pad);
  const double e = std::clamp(end + boundary_pad, s, duration);
  const auto first = static_cast<std::size_t>(std::llround(s * audio.sample_rate));
  auto last = static_cast<std::size_t>(std::llround(e * audio.sample_rate));
  last = std::min(last, audio.samples.size());
  AudioBuffer out;
  out.sample_rate = audio.sample_rate;
  out.samples.assign(audio.samples.begin() + static_cast<std::ptrdiff_t>(first),
                     audio.samples.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

AudioBuffer resample_to_8k(const AudioBuffer& audio) {
  if (audio.sample_rate <= 0) {
    throw UnsupportedRate("sample rate must be positive, got " +
                          std::to_string(audio.sample_rate));
  }
  if (audio.sample_rate == kTargetRate) return audio;

  const std::int64_t g = std::gcd(audio.sample_rate, kTargetRate);
  const std::int64_t up = kTargetRate / g;            // L
  const std::int64_t down = audio.sample_rate / g;    // M
  const std::int64_t n_in = static_cast<std::int64_t>(audio.samples.size());
  const std::int64_t n_out = round_ratio(n_in * up, down);

  // Kernel in input-sample units. Cutoff sits below the Nyquist of the
  // slower side so both aliasing (downsampling) and imaging (upsampling)
  // fall in the stopband.
  const double cutoff =
      kCutoffFraction *
      std::min(audio.sample_rate, kTargetRate) / audio.sample_rate;
  const double half_width = kSincZeroCrossings / (2.0 * cutoff);
  const auto reach = static_cast<std::int64_t>(std::ceil(half_width));
  const double i0_beta = bessel_i0(kKaiserBeta);

  AudioBuffer out;
  out.sample_rate = kTargetRate;
  out.samples.resize(static_cast<std::size_t>(std::max<std::int64_t>(n_out, 0)));
  for (std::int64_t n = 0; n < n_out; ++n) {
    // Output sample n sits at input position n * M / L, held exactly as a
    // rational so every phase is reproducible.
    const std::int64_t t_num = n * down;
    const std::int64_t center = t_num / up;
    double acc = 0.0, norm = 0.0;
    for (std::int64_t k = center - reach; k <= center + reach + 1; ++k) {
      if (k < 0 || k >= n_in) continue;
      const double x = static_cast<double>(k * up - t_num) / static_cast<double>(up);
      if (std::abs(x) > half_width) continue;
      const double sinc_arg = 2.0 * cutoff * x;
      double v = 2.0 * cutoff;
      if (sinc_arg != 0.0) {
        v *= std::sin(M_PI * sinc_arg) / (M_PI * sinc_arg);
      }
      const double frac = x / half_width;
      v *= bessel_i0(kKaiserBeta * std::sqrt(1.0 - frac * frac)) / i0_beta;
      acc += v * audio.samples[static_cast<std::size_t>(k)];
      norm += v;
    }
    // Normalizing by the local kernel sum pins DC gain at exactly one for
    // every output phase, including at the signal edges.
    const double y = norm != 0.0 ? acc / norm : 0.0;
    out.samples[static_cast<std::size_t>(n)] = static_cast<std::int16_t>(
        std::clamp<long>(std::lround(y), -32768L, 32767L));
  }
  return out;
}

AudioBuffer pad_silence(const AudioBuffer& audio, double lead, double trail) {
  const auto lead_n =
      static_cast<std::size_t>(std::llround(lead * audio.sample_rate));
  const auto trail_n =
      static_cast<std::size_t>(std::llround(trail * audio.sample_rate));
  AudioBuffer out;
  out.sample_rate = audio.sample_rate;
  out.samples.resize(lead_n + audio.samples.size() + trail_n, 0);
  std::copy(audio.samples.begin(), audio.samples.end(),
            out.samples.begin() + static_cast<std::ptrdiff_t>(lead_n));
  return out;
}

}  // namespace digits

/*
Copyright 2026 The OMPD Authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "ompd/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "ompd/errors.h"

namespace ompd {
namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t ReadU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t ReadU16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

[[noreturn]] void Malformed(const std::filesystem::path& path,
                            const std::string& what) {
  throw FormatError(path.string() + ": " + what);
}

}  // namespace

AudioSignal ReadWav(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw NotFoundError(path.string() + ": no such file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError(path.string() + ": cannot open");
  const std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    Malformed(path, "not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0, block_align = 0;
  uint32_t rate = 0;
  const uint8_t* data = nullptr;
  size_t data_size = 0;
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* chunk = bytes.data() + pos;
    const uint32_t size = ReadU32(chunk + 4);
    const size_t body = pos + 8;
    if (body + size > bytes.size()) {
      Malformed(path, "chunk '" + std::string(reinterpret_cast<const char*>(chunk), 4) +
                          "' runs past the end of the file");
    }
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) Malformed(path, "fmt chunk too small");
      const uint8_t* f = bytes.data() + body;
      format = ReadU16(f);
      channels = ReadU16(f + 2);
      rate = ReadU32(f + 4);
      block_align = ReadU16(f + 12);
      bits = ReadU16(f + 14);
      if (format == kFormatExtensible) {
        if (size < 40) Malformed(path, "extensible fmt chunk too small");
        format = ReadU16(f + 24);  // first two bytes of the subformat GUID
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = size;
    }
    pos = body + size + (size & 1u);
  }
  if (!have_fmt) Malformed(path, "missing fmt chunk");
  if (!data) Malformed(path, "missing data chunk");
  if (channels == 0) Malformed(path, "zero channels");

  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool pcm24 = format == kFormatPcm && bits == 24;
  const bool f32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !pcm24 && !f32) {
    Malformed(path, "unsupported encoding (format tag " + std::to_string(format) +
                        ", " + std::to_string(bits) +
                        " bits); expected PCM 16/24-bit or 32-bit float");
  }
  const size_t bytes_per_sample = bits / 8;
  if (block_align != channels * bytes_per_sample) {
    Malformed(path, "block alignment does not match channels and sample size");
  }
  const size_t frames = data_size / block_align;
  if (frames == 0) Malformed(path, "no samples");
  if (channels > 1) {
    std::cerr << "warning: " << path.string() << " has " << channels
              << " channels; using channel 0\n";
  }

  std::vector<double> samples(frames);
  for (size_t i = 0; i < frames; ++i) {
    const uint8_t* p = data + i * block_align;
    if (pcm16) {
      samples[i] = static_cast<int16_t>(ReadU16(p)) / 32768.0;
    } else if (pcm24) {
      int32_t v = static_cast<int32_t>(p[0] | (p[1] << 8) | (p[2] << 16));
      if (v & 0x800000) v -= 0x1000000;
      samples[i] = v / 8388608.0;
    } else {
      const uint32_t raw = ReadU32(p);
      float v;
      std::memcpy(&v, &raw, sizeof(v));
      samples[i] = v;
    }
  }
  try {
    return AudioSignal(std::move(samples), static_cast<int>(rate));
  } catch (const InvalidArgumentError& e) {
    Malformed(path, e.what());
  }
}

void WriteWav16(const std::filesystem::path& path, const AudioSignal& signal) {
  const uint32_t n = static_cast<uint32_t>(signal.size());
  const uint32_t rate = static_cast<uint32_t>(signal.sample_rate_hz());
  std::vector<uint8_t> out;
  out.reserve(44 + 2 * static_cast<size_t>(n));
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  PutU32(out, 36 + 2 * n);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);
  PutU32(out, rate);
  PutU32(out, rate * 2);
  PutU16(out, 2);
  PutU16(out, 16);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  PutU32(out, 2 * n);
  for (double v : signal.samples()) {
    const double scaled = std::clamp(std::round(v * 32768.0), -32768.0, 32767.0);
    PutU16(out, static_cast<uint16_t>(static_cast<int16_t>(scaled)));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("failed writing " + path.string());
}

}  // namespace ompd

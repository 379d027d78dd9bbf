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

// RIFF/WAVE reading and 16-bit writing.

#ifndef OMPD_WAV_H_
#define OMPD_WAV_H_

#include <filesystem>

#include "ompd/audio.h"

namespace ompd {

// Reads PCM 16/24-bit integer or 32-bit float WAV (plain or extensible
// format).  Integer samples are scaled by 1/2^(bits-1); no offset or sign
// change is applied.  Multi-channel files yield channel 0 and a warning on
// stderr.  Throws NotFoundError for a missing file and FormatError for a
// malformed or unsupported one.
AudioSignal ReadWav(const std::filesystem::path& path);

// 16-bit PCM mono; samples are scaled by 32768, rounded and clipped.
// Throws IoError when the file cannot be written.
void WriteWav16(const std::filesystem::path& path, const AudioSignal& signal);

}  // namespace ompd

#endif  // OMPD_WAV_H_

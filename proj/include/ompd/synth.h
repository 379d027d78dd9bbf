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

// Synthetic voiced signals with known polarity, F0 and harmonic phases.
//
// GlottalPulse mode drives a cascade of formant resonators with a
// differentiated Rosenberg pulse train: a half-sine rise over 40% of the
// period followed by a quarter-sine closing over 16%, ending in an abrupt
// return to zero at glottal closure.  The derivative has one dominant sharp
// peak per period at closure, negative for positive polarity.
//
// ZeroPhaseHarmonics mode is a sum of equal-amplitude cosines at k * f0 up
// to 3.5 kHz.  Negative polarity has all harmonics at phase 0 (positive
// peaks); positive polarity is its negation.

#ifndef OMPD_SYNTH_H_
#define OMPD_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ompd/audio.h"

namespace ompd {

enum class SynthMode { kGlottalPulse, kZeroPhaseHarmonics };

struct Formant {
  double center_hz = 0.0;
  double bandwidth_hz = 0.0;
};

inline std::vector<Formant> DefaultFormants() {
  return {{600.0, 80.0}, {1200.0, 120.0}};
}

struct SynthSpec {
  double f0_hz = 120.0;
  double duration_s = 1.0;
  int sample_rate_hz = 16000;
  Polarity polarity = Polarity::kPositive;
  std::vector<Formant> formants = DefaultFormants();
  SynthMode mode = SynthMode::kGlottalPulse;
  double jitter_pct = 0.0;  // std. dev. of the period, percent
  uint64_t seed = 0;

  // Throws InvalidArgumentError on a violated invariant.
  void Validate() const;
};

struct SynthOutput {
  AudioSignal signal;      // peak-normalized to 0.5
  AudioSignal excitation;  // before the formant filters, peak 1
  SynthSpec truth;
};

inline constexpr double kRosenbergRise = 0.40;
inline constexpr double kRosenbergFall = 0.16;
inline constexpr double kZeroPhaseMaxHz = 3500.0;

SynthOutput Generate(const SynthSpec& spec);

struct CorpusEntry {
  std::filesystem::path path;  // relative to the corpus directory
  Polarity polarity = Polarity::kPositive;
  std::string group;
  double f0_hz = 0.0;
};

struct CorpusManifest {
  std::filesystem::path manifest_path;
  std::vector<CorpusEntry> entries;
};

// Writes n_files 16-bit WAV files under out_dir/<group>/ with F0 spread
// over [80, 300] Hz, vowel-like formant sets as groups, 1% jitter and
// alternating polarity (even indices positive), plus out_dir/manifest.csv
// with one "path,polarity" line per file.  Deterministic in `seed`.
// Throws InvalidArgumentError for n_files < 2 and IoError when the
// directory cannot be written.
CorpusManifest MakeEvalCorpus(int n_files, uint64_t seed,
                              const std::filesystem::path& out_dir);

}  // namespace ompd

#endif  // OMPD_SYNTH_H_

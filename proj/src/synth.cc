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

#include "ompd/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <system_error>

#include "ompd/errors.h"
#include "ompd/fft.h"
#include "ompd/wav.h"

namespace ompd {
namespace {

// Differentiated Rosenberg pulse at phase u in [0, 1) of the period, for
// positive polarity.
double RosenbergDerivative(double u) {
  constexpr double kPi = std::numbers::pi;
  if (u < kRosenbergRise) {
    return 0.5 * kPi / kRosenbergRise * std::sin(kPi * u / kRosenbergRise);
  }
  if (u < kRosenbergRise + kRosenbergFall) {
    return -kPi / (2.0 * kRosenbergFall) *
           std::sin(kPi * (u - kRosenbergRise) / (2.0 * kRosenbergFall));
  }
  return 0.0;
}

// Two-pole resonator with unity gain at DC.
void Resonate(const Formant& f, int fs, std::vector<double>& x) {
  const double r = std::exp(-std::numbers::pi * f.bandwidth_hz / fs);
  const double c = 2.0 * r * std::cos(2.0 * std::numbers::pi * f.center_hz / fs);
  const double r2 = r * r;
  const double gain = 1.0 - c + r2;
  double y1 = 0.0, y2 = 0.0;
  for (double& v : x) {
    const double y = gain * v + c * y1 - r2 * y2;
    y2 = y1;
    y1 = y;
    v = y;
  }
}

void NormalizePeak(std::vector<double>& x, double peak) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m > 0.0) {
    const double g = peak / m;
    for (double& v : x) v *= g;
  }
}

// The pulse has a step at closure, so it is drawn on a fine grid and brought
// down to the output rate through a low-pass filter.  Sampling it directly
// would alias the step into sub-F0 components whenever the period is not an
// integer number of samples.
constexpr int kOversample = 32;
constexpr int kDecimatorHalfTaps = 32 * kOversample;
constexpr double kDecimatorCutoff = 0.44;  // fraction of the output rate

std::vector<double> DecimatorKernel() {
  constexpr double kPi = std::numbers::pi;
  const int len = 2 * kDecimatorHalfTaps + 1;
  const double fc = kDecimatorCutoff / kOversample;
  std::vector<double> h(len);
  double sum = 0.0;
  for (int i = 0; i < len; ++i) {
    const double m = i - kDecimatorHalfTaps;
    const double sinc = m == 0 ? 2.0 * fc : std::sin(2.0 * kPi * fc * m) / (kPi * m);
    const double w = 0.42 + 0.5 * std::cos(kPi * m / (kDecimatorHalfTaps + 1)) +
                     0.08 * std::cos(2.0 * kPi * m / (kDecimatorHalfTaps + 1));
    h[i] = sinc * w;
    sum += h[i];
  }
  for (double& v : h) v /= sum;
  return h;
}

std::vector<double> PulseTrain(const SynthSpec& spec, size_t n) {
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double nominal = kOversample * spec.sample_rate_hz / spec.f0_hz;
  const size_t n_fine = n * kOversample;
  const size_t pad = kDecimatorHalfTaps;
  std::vector<double> fine(n_fine + 2 * pad, 0.0);
  double start = 0.0;
  while (start < static_cast<double>(n_fine)) {
    double period = nominal;
    if (spec.jitter_pct > 0.0) {
      period *= 1.0 + 0.01 * spec.jitter_pct * gauss(rng);
      period = std::clamp(period, 0.5 * nominal, 1.5 * nominal);
    }
    const size_t first = static_cast<size_t>(std::ceil(start));
    const double stop = start + period;
    for (size_t i = first; static_cast<double>(i) < stop && i < n_fine; ++i) {
      fine[pad + i] = RosenbergDerivative((static_cast<double>(i) - start) / period);
    }
    start = stop;
  }
  const std::vector<double> h = DecimatorKernel();
  const std::vector<double> smooth = FftCorrelateValid(fine, h);
  std::vector<double> e(n);
  for (size_t i = 0; i < n; ++i) e[i] = smooth[i * kOversample];
  return e;
}

std::vector<double> ZeroPhaseHarmonics(const SynthSpec& spec, size_t n) {
  const double limit = std::min(kZeroPhaseMaxHz, 0.5 * spec.sample_rate_hz);
  const int k_max = static_cast<int>(std::floor(limit / spec.f0_hz));
  std::vector<double> s(n, 0.0);
  const double w = 2.0 * std::numbers::pi * spec.f0_hz / spec.sample_rate_hz;
  for (size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 1; k <= k_max; ++k) acc += std::cos(w * k * static_cast<double>(i));
    s[i] = acc;
  }
  return s;
}

}  // namespace

void SynthSpec::Validate() const {
  if (!(f0_hz >= 50.0 && f0_hz <= 400.0)) {
    throw InvalidArgumentError("synthetic f0 must lie in [50, 400] Hz");
  }
  if (sample_rate_hz < kMinSampleRateHz) {
    throw InvalidArgumentError("synthetic sample rate below minimum");
  }
  if (!(f0_hz < sample_rate_hz / 20.0)) {
    throw InvalidArgumentError("f0 must be below sample_rate / 20");
  }
  if (!(duration_s >= 0.5)) {
    throw InvalidArgumentError("synthetic duration must be at least 0.5 s");
  }
  if (!(jitter_pct >= 0.0)) {
    throw InvalidArgumentError("jitter must be non-negative");
  }
  for (const Formant& f : formants) {
    if (!(f.center_hz > 0.0 && f.center_hz < 0.5 * sample_rate_hz &&
          f.bandwidth_hz > 0.0)) {
      throw InvalidArgumentError("formant outside (0, Nyquist) or bandwidth <= 0");
    }
  }
}

SynthOutput Generate(const SynthSpec& spec) {
  spec.Validate();
  const size_t n = static_cast<size_t>(std::lround(spec.duration_s * spec.sample_rate_hz));
  std::vector<double> excitation;
  std::vector<double> signal;
  if (spec.mode == SynthMode::kGlottalPulse) {
    excitation = PulseTrain(spec, n);
    signal = excitation;
    for (const Formant& f : spec.formants) Resonate(f, spec.sample_rate_hz, signal);
  } else {
    // Built with positive peaks, i.e. negative polarity.
    excitation = ZeroPhaseHarmonics(spec, n);
    for (double& v : excitation) v = -v;
    signal = excitation;
  }
  NormalizePeak(excitation, 1.0);
  NormalizePeak(signal, 0.5);
  if (spec.polarity == Polarity::kNegative) {
    for (double& v : excitation) v = -v;
    for (double& v : signal) v = -v;
  }
  return SynthOutput{AudioSignal(std::move(signal), spec.sample_rate_hz),
                     AudioSignal(std::move(excitation), spec.sample_rate_hz),
                     spec};
}

CorpusManifest MakeEvalCorpus(int n_files, uint64_t seed,
                              const std::filesystem::path& out_dir) {
  if (n_files < 2) {
    throw InvalidArgumentError("corpus needs at least 2 files");
  }
  struct VowelSet {
    const char* name;
    std::vector<Formant> formants;
  };
  // F1/F2 of open and mid vowels, with typical bandwidths.
  const std::vector<VowelSet> sets = {
      {"vowel_a", {{730.0, 90.0}, {1090.0, 110.0}}},
      {"vowel_ae", {{660.0, 80.0}, {1720.0, 120.0}}},
      {"vowel_e", {{530.0, 70.0}, {1840.0, 130.0}}},
      {"vowel_neutral", DefaultFormants()},
      {"vowel_o", {{570.0, 80.0}, {840.0, 100.0}}},
  };

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create corpus directory " + out_dir.string() + ": " +
                  ec.message());
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CorpusManifest manifest;
  manifest.manifest_path = out_dir / "manifest.csv";
  for (int i = 0; i < n_files; ++i) {
    // Stratified draw so the whole F0 range is covered.
    const double f0 = 80.0 + 220.0 * (i + unit(rng)) / n_files;
    const double duration = 1.0 + unit(rng);
    const uint64_t file_seed = rng();
    const VowelSet& set = sets[i % sets.size()];

    SynthSpec spec;
    spec.f0_hz = f0;
    spec.duration_s = duration;
    spec.sample_rate_hz = 16000;
    spec.polarity = i % 2 == 0 ? Polarity::kPositive : Polarity::kNegative;
    spec.formants = set.formants;
    spec.jitter_pct = 1.0;
    spec.seed = file_seed;

    char name[32];
    std::snprintf(name, sizeof(name), "utt_%04d.wav", i);
    CorpusEntry entry;
    entry.path = std::filesystem::path(set.name) / name;
    entry.polarity = spec.polarity;
    entry.group = set.name;
    entry.f0_hz = f0;

    std::filesystem::create_directories(out_dir / set.name, ec);
    if (ec) {
      throw IoError("cannot create " + (out_dir / set.name).string() + ": " +
                    ec.message());
    }
    WriteWav16(out_dir / entry.path, Generate(spec).signal);
    manifest.entries.push_back(std::move(entry));
  }

  std::FILE* fp = std::fopen(manifest.manifest_path.string().c_str(), "wb");
  if (!fp) throw IoError("cannot write " + manifest.manifest_path.string());
  // Two columns; readers take the group from the parent directory.
  for (const CorpusEntry& e : manifest.entries) {
    std::fprintf(fp, "%s,%s\n", e.path.generic_string().c_str(),
                 std::string(ToString(e.polarity)).c_str());
  }
  if (std::fclose(fp) != 0) {
    throw IoError("cannot write " + manifest.manifest_path.string());
  }
  return manifest;
}

}  // namespace ompd

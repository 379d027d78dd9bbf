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

#include "ompd/harmonics.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ompd/errors.h"
#include "ompd/fft.h"
#include "ompd/window.h"

namespace ompd {
namespace {

constexpr double kAbsentRatio = 1e-10;
constexpr int kZeroPadFactor = 8;
// Half-width of the peak search around k * f0, in units of f0.
constexpr double kSearchHalfWidth = 0.3;

}  // namespace

int HarmonicPhases::LeadingPresent() const {
  int k = 0;
  while (k < count() && present[k]) ++k;
  return k;
}

double WrapPhase(double radians) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  return radians - kTwoPi * std::ceil((radians - std::numbers::pi) / kTwoPi);
}

HarmonicPhases MeasureHarmonicPhases(const AudioSignal& signal,
                                     double frame_time_s, double f0_hz,
                                     double max_freq_hz) {
  if (!(f0_hz >= 50.0 && f0_hz <= 500.0)) {
    throw InvalidArgumentError("harmonic analysis f0 must lie in [50, 500] Hz");
  }
  const int fs = signal.sample_rate_hz();
  const int len = RoundToOdd(3.0 * fs / f0_hz);
  const long half = len / 2;
  const long center = std::lround(frame_time_s * fs);
  if (center - half < 0 || center + half >= static_cast<long>(signal.size())) {
    throw InvalidArgumentError("harmonic analysis frame at " +
                               std::to_string(frame_time_s) +
                               " s does not fit in the signal");
  }

  const size_t n_fft = NextPowerOfTwo(static_cast<size_t>(kZeroPadFactor) * len);
  std::vector<double> buf(n_fft, 0.0);
  double energy = 0.0;
  for (long m = -half; m <= half; ++m) {
    const double s = signal[center + m];
    energy += s * s;
    const double w =
        0.5 + 0.5 * std::cos(std::numbers::pi * m / static_cast<double>(half + 1));
    // Negative offsets wrap to the end so the window center is time zero.
    const size_t idx = m >= 0 ? static_cast<size_t>(m)
                              : n_fft - static_cast<size_t>(-m);
    buf[idx] = w * s;
  }
  const double frame_rms = std::sqrt(energy / len);

  RealFft fft(n_fft);
  std::vector<std::complex<double>> spec(fft.spectrum_size());
  fft.Forward(buf, spec);
  const double bin_hz = static_cast<double>(fs) / n_fft;
  // Hann window gain: a unit cosine gives a peak of (len + 1) / 4.
  const double amp_scale = 4.0 / (len + 1);

  HarmonicPhases out;
  out.frame_time_s = frame_time_s;
  out.f0_hz = f0_hz;
  const double limit = std::min(max_freq_hz, 0.5 * fs);
  for (int k = 1; k * f0_hz <= limit; ++k) {
    const double target = k * f0_hz;
    const long lo = std::max<long>(
        1, std::lround((target - kSearchHalfWidth * f0_hz) / bin_hz));
    const long hi = std::min<long>(
        static_cast<long>(spec.size()) - 2,
        std::lround((target + kSearchHalfWidth * f0_hz) / bin_hz));
    long peak = std::clamp<long>(std::lround(target / bin_hz), lo, hi);
    for (long b = lo; b <= hi; ++b) {
      if (std::abs(spec[b]) > std::abs(spec[peak])) peak = b;
    }
    const double mag = std::abs(spec[peak]);
    const bool present = mag * amp_scale >= kAbsentRatio * frame_rms &&
                         frame_rms > 0.0;
    double phase = 0.0;
    if (present) {
      const double l = std::log(std::abs(spec[peak - 1]) + 1e-300);
      const double c = std::log(mag);
      const double r = std::log(std::abs(spec[peak + 1]) + 1e-300);
      const double denom = l - 2.0 * c + r;
      double offset = 0.0;
      if (denom < 0.0) offset = std::clamp(0.5 * (l - r) / denom, -0.5, 0.5);
      const long nearest = std::lround(static_cast<double>(peak) + offset);
      phase = WrapPhase(std::arg(spec[nearest]));
    }
    out.phases.push_back(phase);
    out.present.push_back(present);
  }
  const long n_present = std::count(out.present.begin(), out.present.end(), true);
  if (n_present < 2) {
    throw InsufficientHarmonicsError("only " + std::to_string(n_present) +
                                     " harmonic(s) present below " +
                                     std::to_string(limit) + " Hz");
  }
  return out;
}

}  // namespace ompd

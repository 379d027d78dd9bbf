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

// Per-harmonic instantaneous phase measurement for the phase-based
// baselines.

#ifndef OMPD_HARMONICS_H_
#define OMPD_HARMONICS_H_

#include <vector>

#include "ompd/audio.h"

namespace ompd {

struct HarmonicPhases {
  double frame_time_s = 0.0;
  double f0_hz = 0.0;
  // phases[k - 1] is the phase of harmonic k in (-pi, pi]; meaningful only
  // where present[k - 1] is true.
  std::vector<double> phases;
  std::vector<bool> present;

  int count() const { return static_cast<int>(phases.size()); }
  // Number of harmonics present from k = 1 without a gap.
  int LeadingPresent() const;
};

// Wraps an angle into (-pi, pi].
double WrapPhase(double radians);

// Phases of harmonics k * f0 <= min(max_freq, Nyquist) at frame_time_s.
// A Hann window of 3 / f0 seconds is centered on the frame and the DFT is
// referenced to the window center, so a cosine peaking at the center has
// phase 0.  Each harmonic frequency is refined by a parabolic fit to the
// log-magnitude peak and the phase is read at the FFT bin nearest to it.
//
// Throws InvalidArgumentError when f0 is outside [50, 500] Hz or the frame
// does not fit in the signal, and InsufficientHarmonicsError when fewer
// than two harmonics are present.  A harmonic is absent when its magnitude
// is below 1e-10 times the frame RMS.
HarmonicPhases MeasureHarmonicPhases(const AudioSignal& signal,
                                     double frame_time_s, double f0_hz,
                                     double max_freq_hz);

}  // namespace ompd

#endif  // OMPD_HARMONICS_H_

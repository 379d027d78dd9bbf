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

// Rough pitch and voicing front-end: the mean pitch period that sizes the
// moment windows, the voiced regions that are polled for votes, and local
// period tracking on a moment signal.

#ifndef OMPD_PITCH_H_
#define OMPD_PITCH_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "ompd/audio.h"
#include "ompd/moments.h"

namespace ompd {

struct PitchConfig {
  double f0_min_hz = 50.0;
  double f0_max_hz = 500.0;
  double frame_s = 0.030;
  double hop_s = 0.010;
  // Frame RMS relative to whole-file RMS needed for voicing.
  double energy_ratio = 0.05;
  // Minimum peak normalized cross-correlation for voicing.
  double nccf_threshold = 0.45;
};

struct VoicedRegion {
  size_t start_sample = 0;
  size_t end_sample = 0;  // exclusive
};

struct PitchFrame {
  double time_s = 0.0;    // frame center
  double period_s = 0.0;  // 0 when no correlation peak was found
  double nccf = 0.0;      // peak normalized cross-correlation
  bool voiced = false;    // after median smoothing
};

struct PitchInfo {
  double t0_mean_s = 0.0;
  std::vector<VoicedRegion> voiced_regions;  // sorted, disjoint
  double frame_hop_s = 0.0;
  std::vector<PitchFrame> frames;
};

// Voicing: 30 ms frames every 10 ms; voiced iff frame RMS >= 5% of file RMS
// and the peak NCCF in the F0 lag band is >= 0.45, then a 3-frame median.
// T0,mean is the median period of voiced frames.  Throws TooShortError for
// signals under 0.5 s and NoVoicingError when nothing is voiced.
PitchInfo AnalyzePitch(const AudioSignal& signal,
                       const PitchConfig& config = {});

// Minimum normalized autocorrelation peak accepted by LocalT0.
inline constexpr double kLocalT0MinCorrelation = 0.5;

// Local period at sample t: the lag in [0.5, 2] * t0_mean maximizing the
// normalized autocorrelation of `moment` over 4 * t0_mean centered at t,
// refined by parabolic interpolation.  Throws InvalidArgumentError when t
// is closer than 2 * t0_mean to an edge and UnreliableFrameError when the
// peak correlation is below 0.5.
double LocalT0(const MomentSignal& moment, size_t t, double t0_mean_s);

// As LocalT0, but reports an unreliable frame as nullopt.
std::optional<double> TryLocalT0(const MomentSignal& moment, size_t t,
                                 double t0_mean_s);

}  // namespace ompd

#endif  // OMPD_PITCH_H_

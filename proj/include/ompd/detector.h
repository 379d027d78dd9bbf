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

// Oscillating-moment polarity detection.
//
// The odd moment y_{1,1} flips sign with the recording polarity while the
// even moment y_{1,2} does not, so the phase lag between them (in units of
// the local pitch period) moves by half a period when the polarity is
// inverted.  Each voiced frame votes by testing its lag against a fixed
// half-period interval; the file label is the majority vote.
//
// Lag orientation.  PhaseShiftAt reports the delay of its first argument
// relative to its second.  The detector's frame shift is
//
//   shift = wrap(0.5 - PhaseShiftAt(y_odd, y_even)),
//
// i.e. the delay of y_even relative to the inverted odd moment -y_odd.  With
// this orientation, recordings whose excitation has a negative peak at
// glottal closure (positive polarity) fall inside [-0.12, 0.38).  The
// orientation was fixed once against the synthetic glottal-pulse generator.

#ifndef OMPD_DETECTOR_H_
#define OMPD_DETECTOR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ompd/audio.h"
#include "ompd/moments.h"
#include "ompd/pitch.h"

namespace ompd {

inline constexpr double kDefaultShiftLow = -0.12;
inline constexpr double kDefaultShiftHigh = 0.38;

struct FrameDecision {
  double time_s = 0.0;
  double phase_shift = 0.0;  // fraction of local T0, in [-0.5, 0.5)
  double local_t0_s = 0.0;
  Polarity vote = Polarity::kPositive;
};

struct PolarityResult {
  Polarity label = Polarity::kPositive;
  double confidence = 0.0;  // fraction of frames agreeing with label
  int n_frames = 0;
  bool tie = false;  // exact 50/50 split, resolved as positive
};

struct OmpdConfig {
  MomentSpec odd_moment = MomentSpec::WithDefaultWindow(1, 1);
  MomentSpec even_moment = MomentSpec::WithDefaultWindow(1, 2);
  double shift_low = kDefaultShiftLow;
  double shift_high = kDefaultShiftHigh;
  double hop_s = 0.010;
  PitchConfig pitch;

  // Throws InvalidArgumentError on inconsistent settings.
  void Validate() const;
};

struct OmpdAnalysis {
  PolarityResult result;
  std::vector<FrameDecision> frames;  // ordered by time
  PitchInfo pitch;
};

// Maps x onto [-0.5, 0.5); +0.5 maps to -0.5.
double WrapUnit(double x);

// Delay of `y_odd` relative to `y_even` around sample t, as a fraction of
// the local period: the lag in [-T0/2, T0/2) maximizing the normalized
// cross-correlation over a 2-period window centered at t, refined by
// parabolic interpolation.  Positive means y_odd lags.  Throws
// DegenerateFrameError when either signal has RMS < 1e-12 in the window
// and InvalidArgumentError when the window does not fit.
double PhaseShiftAt(const MomentSignal& y_odd, const MomentSignal& y_even,
                    size_t t, double local_t0_s);

// Degenerate frames come back as nullopt.
std::optional<double> TryPhaseShiftAt(const MomentSignal& y_odd,
                                      const MomentSignal& y_even, size_t t,
                                      double local_t0_s);

// Detector orientation applied to a raw PhaseShiftAt(y_odd, y_even) value.
inline double OrientedShift(double raw_shift) { return WrapUnit(0.5 - raw_shift); }

// Positive iff shift lies in the half-open interval [low, high).
Polarity ClassifyFrame(double phase_shift, double low = kDefaultShiftLow,
                       double high = kDefaultShiftHigh);

// Majority decision; an exact tie resolves to positive with tie = true.
// Throws InsufficientFramesError on an empty vote list.
PolarityResult MajorityVote(std::span<const Polarity> votes);

// Full algorithm.  Propagates NoVoicingError from the pitch front-end and
// throws InsufficientFramesError when every voiced frame was skipped.
OmpdAnalysis DetectPolarityOmpd(const AudioSignal& signal,
                                const OmpdConfig& config = {});

}  // namespace ompd

#endif  // OMPD_DETECTOR_H_

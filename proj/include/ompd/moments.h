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

// Oscillating statistical moments.
//
// y_{p1,p2}(t) is the p1-th weighted moment of the powered signal s^p2
// under a Blackman window centered at sample t, evaluated densely (one
// output per input sample) and then high-passed at 40 Hz to remove drift.
// Weights are the window coefficients normalized by their sum.  Order 1 is
// the weighted mean; orders 2..4 are weighted central moments.
//
// Parity: y_{p1,p2}(-s) = (-1)^(p1*p2) y_{p1,p2}(s).  The odd moments flip
// with the recording polarity, the even ones do not.

#ifndef OMPD_MOMENTS_H_
#define OMPD_MOMENTS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ompd/audio.h"
#include "ompd/window.h"

namespace ompd {

inline constexpr int kMaxMomentOrder = 4;
// Window lengths in multiples of the mean pitch period.
inline constexpr double kMeanBasedWindowFactor = 1.75;
inline constexpr double kHigherOrderWindowFactor = 2.5;
// Accepted range for the mean pitch period (F0 in 50..500 Hz).
inline constexpr double kMinT0MeanS = 1.0 / 500.0;
inline constexpr double kMaxT0MeanS = 1.0 / 50.0;

struct MomentSpec {
  int p1 = 1;  // statistical order
  int p2 = 1;  // non-linearity order
  double window_factor = kMeanBasedWindowFactor;

  // Uses 1.75 for (1,1) and 2.5 for every other order pair.
  static MomentSpec WithDefaultWindow(int p1, int p2);

  bool polarity_dependent() const { return (p1 * p2) % 2 == 1; }
  // Throws InvalidArgumentError for orders outside 1..4 or a non-positive
  // window factor.
  void Validate() const;
};

struct MomentSignal {
  std::vector<double> values;  // same time base as the source signal
  MomentSpec spec;
  int sample_rate_hz = 0;

  size_t size() const { return values.size(); }
};

// Window length in samples, rounded to the nearest odd integer.
int MomentWindowLength(const MomentSpec& spec, double t0_mean_s,
                       int sample_rate_hz);

// s^p2 by repeated multiplication (sign-exact under negation).
std::vector<double> PowerSignal(std::span<const double> s, int p2);

// Brute-force reference: for each t, the p1-th weighted moment of the
// reflect-padded input under `window` centered at t.  Throws
// InvalidArgumentError if the window is not shorter than the input.
std::vector<double> SlidingMomentDirect(std::span<const double> powered,
                                        const WindowCoefficients& window,
                                        int p1);

// Same quantity in O(N log N): the weighted raw moments are FFT
// correlations of x^j with the window, and central moments follow from the
// binomial expansion.
std::vector<double> SlidingMomentFast(std::span<const double> powered,
                                      const WindowCoefficients& window,
                                      int p1);

// Full pipeline for one moment signal.  Throws InvalidArgumentError for a
// bad spec or t0_mean_s outside [1/500, 1/50] s, TooShortError when the
// window exceeds a quarter of the signal.
MomentSignal ComputeOscillatingMoment(const AudioSignal& signal,
                                      const MomentSpec& spec,
                                      double t0_mean_s);

}  // namespace ompd

#endif  // OMPD_MOMENTS_H_

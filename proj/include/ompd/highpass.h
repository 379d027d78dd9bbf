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

// Zero-phase Butterworth high-pass used to strip low-frequency drift from
// the oscillating moments and from the pitch front-end input.

#ifndef OMPD_HIGHPASS_H_
#define OMPD_HIGHPASS_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ompd/audio.h"

namespace ompd {

inline constexpr double kDriftCutoffHz = 40.0;

// One direct-form-II-transposed section, a0 normalized to 1.
struct Biquad {
  std::array<double, 3> b;
  std::array<double, 2> a;
};

// 4th-order Butterworth high-pass as two cascaded sections (bilinear
// transform with prewarping).  -3 dB at `cutoff_hz` for a single pass.
std::array<Biquad, 2> DesignButterworthHighpass4(double cutoff_hz,
                                                 int sample_rate_hz);

// Samples needed for the filter's impulse response to settle: three
// periods of the cutoff frequency.
size_t HighpassSettleLength(double cutoff_hz, int sample_rate_hz);

// Forward-backward application with reflect padding of one settle length
// on each side.  Throws TooShortError when x is shorter than three settle
// lengths.
std::vector<double> ZeroPhaseHighpass(std::span<const double> x,
                                      int sample_rate_hz,
                                      double cutoff_hz = kDriftCutoffHz);

AudioSignal Highpass40Hz(const AudioSignal& signal);

}  // namespace ompd

#endif  // OMPD_HIGHPASS_H_

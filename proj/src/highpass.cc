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

#include "ompd/highpass.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ompd/errors.h"

namespace ompd {
namespace {

// Direct form II transposed, starting from the steady state for a constant
// input equal to x[0].
void FilterInPlace(const Biquad& s, std::vector<double>& x) {
  if (x.empty()) return;
  const double u = x[0];
  const double dc_gain = (s.b[0] + s.b[1] + s.b[2]) / (1.0 + s.a[0] + s.a[1]);
  const double y_ss = dc_gain * u;
  double z2 = s.b[2] * u - s.a[1] * y_ss;
  double z1 = s.b[1] * u - s.a[0] * y_ss + z2;
  for (double& v : x) {
    const double in = v;
    const double out = s.b[0] * in + z1;
    z1 = s.b[1] * in - s.a[0] * out + z2;
    z2 = s.b[2] * in - s.a[1] * out;
    v = out;
  }
}

void CascadeInPlace(const std::array<Biquad, 2>& sections,
                    std::vector<double>& x) {
  for (const Biquad& s : sections) FilterInPlace(s, x);
}

}  // namespace

std::array<Biquad, 2> DesignButterworthHighpass4(double cutoff_hz,
                                                 int sample_rate_hz) {
  if (!(cutoff_hz > 0.0) || cutoff_hz >= 0.5 * sample_rate_hz) {
    throw InvalidArgumentError("high-pass cutoff must lie in (0, Nyquist)");
  }
  // Pole-pair quality factors of the 4th-order Butterworth prototype.
  const double q[2] = {1.0 / (2.0 * std::cos(std::numbers::pi / 8.0)),
                       1.0 / (2.0 * std::cos(3.0 * std::numbers::pi / 8.0))};
  const double w0 = 2.0 * std::numbers::pi * cutoff_hz / sample_rate_hz;
  const double cw = std::cos(w0);
  const double sw = std::sin(w0);
  std::array<Biquad, 2> out{};
  for (int i = 0; i < 2; ++i) {
    const double alpha = sw / (2.0 * q[i]);
    const double a0 = 1.0 + alpha;
    out[i].b = {(1.0 + cw) / 2.0 / a0, -(1.0 + cw) / a0, (1.0 + cw) / 2.0 / a0};
    out[i].a = {-2.0 * cw / a0, (1.0 - alpha) / a0};
  }
  return out;
}

size_t HighpassSettleLength(double cutoff_hz, int sample_rate_hz) {
  return static_cast<size_t>(std::ceil(3.0 * sample_rate_hz / cutoff_hz));
}

std::vector<double> ZeroPhaseHighpass(std::span<const double> x,
                                      int sample_rate_hz, double cutoff_hz) {
  const size_t pad = HighpassSettleLength(cutoff_hz, sample_rate_hz);
  if (x.size() < 3 * pad) {
    throw TooShortError("signal of " + std::to_string(x.size()) +
                        " samples is shorter than the high-pass minimum of " +
                        std::to_string(3 * pad));
  }
  const auto sections = DesignButterworthHighpass4(cutoff_hz, sample_rate_hz);
  const size_t n = x.size();

  // Reflect about the end samples (edge sample not repeated).
  std::vector<double> buf(n + 2 * pad);
  for (size_t i = 0; i < pad; ++i) buf[i] = x[pad - i];
  std::copy(x.begin(), x.end(), buf.begin() + pad);
  for (size_t i = 0; i < pad; ++i) buf[pad + n + i] = x[n - 2 - i];

  CascadeInPlace(sections, buf);
  std::reverse(buf.begin(), buf.end());
  CascadeInPlace(sections, buf);
  std::reverse(buf.begin(), buf.end());

  return std::vector<double>(buf.begin() + pad, buf.begin() + pad + n);
}

AudioSignal Highpass40Hz(const AudioSignal& signal) {
  return AudioSignal(
      ZeroPhaseHighpass(signal.samples(), signal.sample_rate_hz()),
      signal.sample_rate_hz());
}

}  // namespace ompd

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

#include "ompd/moments.h"

#include <cmath>
#include <string>

#include "ompd/errors.h"
#include "ompd/fft.h"
#include "ompd/highpass.h"

namespace ompd {
namespace {

std::vector<double> ReflectPad(std::span<const double> x, size_t pad) {
  const size_t n = x.size();
  std::vector<double> out(n + 2 * pad);
  for (size_t i = 0; i < pad; ++i) out[i] = x[pad - i];
  std::copy(x.begin(), x.end(), out.begin() + pad);
  for (size_t i = 0; i < pad; ++i) out[pad + n + i] = x[n - 2 - i];
  return out;
}

void CheckOrder(int order, const char* name) {
  if (order < 1 || order > kMaxMomentOrder) {
    throw InvalidArgumentError(std::string(name) + " must be in 1.." +
                               std::to_string(kMaxMomentOrder) + ", got " +
                               std::to_string(order));
  }
}

void CheckWindowFits(std::span<const double> x, const WindowCoefficients& w) {
  if (static_cast<size_t>(w.length()) >= x.size()) {
    throw InvalidArgumentError("window of " + std::to_string(w.length()) +
                               " samples is not shorter than the input (" +
                               std::to_string(x.size()) + ")");
  }
}

double IntPow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

MomentSpec MomentSpec::WithDefaultWindow(int p1, int p2) {
  MomentSpec spec;
  spec.p1 = p1;
  spec.p2 = p2;
  spec.window_factor = (p1 == 1 && p2 == 1) ? kMeanBasedWindowFactor
                                            : kHigherOrderWindowFactor;
  return spec;
}

void MomentSpec::Validate() const {
  CheckOrder(p1, "statistical order p1");
  CheckOrder(p2, "non-linearity order p2");
  if (!(window_factor > 0.0) || !std::isfinite(window_factor)) {
    throw InvalidArgumentError("window factor must be positive");
  }
}

int MomentWindowLength(const MomentSpec& spec, double t0_mean_s,
                       int sample_rate_hz) {
  return RoundToOdd(spec.window_factor * t0_mean_s * sample_rate_hz);
}

std::vector<double> PowerSignal(std::span<const double> s, int p2) {
  std::vector<double> out(s.size());
  for (size_t i = 0; i < s.size(); ++i) out[i] = IntPow(s[i], p2);
  return out;
}

std::vector<double> SlidingMomentDirect(std::span<const double> powered,
                                        const WindowCoefficients& window,
                                        int p1) {
  CheckOrder(p1, "statistical order p1");
  CheckWindowFits(powered, window);
  const size_t half = window.half_length();
  const size_t len = window.length();
  const std::vector<double> x = ReflectPad(powered, half);
  const double norm = 1.0 / window.Sum();

  std::vector<double> out(powered.size());
  for (size_t t = 0; t < powered.size(); ++t) {
    double mean = 0.0;
    for (size_t j = 0; j < len; ++j) mean += window[j] * x[t + j];
    mean *= norm;
    if (p1 == 1) {
      out[t] = mean;
      continue;
    }
    double acc = 0.0;
    for (size_t j = 0; j < len; ++j) {
      acc += window[j] * IntPow(x[t + j] - mean, p1);
    }
    out[t] = acc * norm;
  }
  return out;
}

std::vector<double> SlidingMomentFast(std::span<const double> powered,
                                      const WindowCoefficients& window,
                                      int p1) {
  CheckOrder(p1, "statistical order p1");
  CheckWindowFits(powered, window);
  const std::vector<double> x = ReflectPad(powered, window.half_length());
  const double norm = 1.0 / window.Sum();

  // raw[j][t] = weighted mean of x^j around t, j = 1..p1.
  std::vector<std::vector<double>> raw(p1 + 1);
  std::vector<double> xj(x.size(), 1.0);
  for (int j = 1; j <= p1; ++j) {
    for (size_t i = 0; i < x.size(); ++i) xj[i] *= x[i];
    raw[j] = FftCorrelateValid(xj, window.values());
    for (double& v : raw[j]) v *= norm;
  }
  if (p1 == 1) return std::move(raw[1]);

  // E[(X - m)^p] = sum_j C(p, j) E[X^j] (-m)^(p - j).
  std::vector<double> binom(p1 + 1, 1.0);
  for (int j = 1; j <= p1; ++j) binom[j] = binom[j - 1] * (p1 - j + 1) / j;
  std::vector<double> out(powered.size());
  for (size_t t = 0; t < out.size(); ++t) {
    const double neg_mean = -raw[1][t];
    double acc = IntPow(neg_mean, p1);
    for (int j = 1; j <= p1; ++j) {
      acc += binom[j] * raw[j][t] * IntPow(neg_mean, p1 - j);
    }
    out[t] = acc;
  }
  return out;
}

MomentSignal ComputeOscillatingMoment(const AudioSignal& signal,
                                      const MomentSpec& spec,
                                      double t0_mean_s) {
  spec.Validate();
  // Small slack so 1/500 and 1/50 computed elsewhere are accepted.
  constexpr double kSlack = 1e-12;
  if (!(t0_mean_s >= kMinT0MeanS - kSlack && t0_mean_s <= kMaxT0MeanS + kSlack)) {
    throw InvalidArgumentError("mean pitch period " + std::to_string(t0_mean_s) +
                               " s is outside [1/500, 1/50] s");
  }
  const int fs = signal.sample_rate_hz();
  const int len = MomentWindowLength(spec, t0_mean_s, fs);
  if (static_cast<size_t>(len) > signal.size() / 4) {
    throw TooShortError("moment window of " + std::to_string(len) +
                        " samples exceeds a quarter of the signal (" +
                        std::to_string(signal.size()) + " samples)");
  }
  const WindowCoefficients window = MakeBlackmanWindow(len);
  const std::vector<double> powered = PowerSignal(signal.samples(), spec.p2);
  const std::vector<double> raw = SlidingMomentFast(powered, window, spec.p1);

  MomentSignal out;
  out.values = ZeroPhaseHighpass(raw, fs, kDriftCutoffHz);
  out.spec = spec;
  out.sample_rate_hz = fs;
  return out;
}

}  // namespace ompd

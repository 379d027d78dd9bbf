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

#include "ompd/detector.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ompd/errors.h"

namespace ompd {
namespace {

constexpr double kDegenerateRms = 1e-12;
// Frames closer than this many local periods to a voicing boundary are
// skipped.
constexpr double kBoundaryGuardPeriods = 1.5;

}  // namespace

void OmpdConfig::Validate() const {
  odd_moment.Validate();
  even_moment.Validate();
  if (!odd_moment.polarity_dependent()) {
    throw InvalidArgumentError("odd moment must have an odd p1*p2");
  }
  if (even_moment.polarity_dependent()) {
    throw InvalidArgumentError("even moment must have an even p1*p2");
  }
  if (!(shift_low >= -0.5 && shift_low < shift_high && shift_high <= 0.5)) {
    throw InvalidArgumentError(
        "shift interval must satisfy -0.5 <= low < high <= 0.5");
  }
  if (!(hop_s > 0.0)) throw InvalidArgumentError("hop must be positive");
}

double WrapUnit(double x) { return x - std::floor(x + 0.5); }

std::optional<double> TryPhaseShiftAt(const MomentSignal& y_odd,
                                      const MomentSignal& y_even, size_t t,
                                      double local_t0_s) {
  if (y_odd.size() != y_even.size() ||
      y_odd.sample_rate_hz != y_even.sample_rate_hz) {
    throw InvalidArgumentError("moment signals differ in length or rate");
  }
  const double period = local_t0_s * y_odd.sample_rate_hz;
  if (!(period >= 2.0)) {
    throw InvalidArgumentError("local period shorter than two samples");
  }
  const long half_window = std::lround(period);
  const long lag_min = static_cast<long>(std::ceil(-0.5 * period));
  const long lag_max = static_cast<long>(std::ceil(0.5 * period)) - 1;
  const long ti = static_cast<long>(t);
  const long n = static_cast<long>(y_odd.size());
  // One extra lag on each side feeds the parabolic refinement.
  if (ti - half_window + lag_min - 1 < 0 ||
      ti + half_window + lag_max + 1 > n) {
    throw InvalidArgumentError("phase-shift window at sample " +
                               std::to_string(t) + " does not fit");
  }

  const std::vector<double>& a = y_odd.values;
  const std::vector<double>& b = y_even.values;
  const long begin = ti - half_window;
  const long end = ti + half_window;

  double eb = 0.0, ea0 = 0.0;
  for (long i = begin; i < end; ++i) {
    eb += b[i] * b[i];
    ea0 += a[i] * a[i];
  }
  const double count = static_cast<double>(end - begin);
  if (std::sqrt(eb / count) < kDegenerateRms ||
      std::sqrt(ea0 / count) < kDegenerateRms) {
    return std::nullopt;
  }

  std::vector<double> c(lag_max - lag_min + 3);
  for (long lag = lag_min - 1; lag <= lag_max + 1; ++lag) {
    double cross = 0.0, ea = 0.0;
    for (long i = begin; i < end; ++i) {
      cross += a[i + lag] * b[i];
      ea += a[i + lag] * a[i + lag];
    }
    const double denom = std::sqrt(ea * eb);
    c[lag - lag_min + 1] = denom > 0.0 ? cross / denom : 0.0;
  }

  size_t best = 1;
  for (size_t i = 2; i + 1 < c.size(); ++i) {
    if (c[i] > c[best]) best = i;
  }
  double offset = 0.0;
  const double denom = c[best - 1] - 2.0 * c[best] + c[best + 1];
  if (denom < 0.0) {
    offset = std::clamp(0.5 * (c[best - 1] - c[best + 1]) / denom, -0.5, 0.5);
  }
  const double lag = static_cast<double>(lag_min - 1 + static_cast<long>(best)) +
                     offset;
  return WrapUnit(lag / period);
}

double PhaseShiftAt(const MomentSignal& y_odd, const MomentSignal& y_even,
                    size_t t, double local_t0_s) {
  const std::optional<double> shift =
      TryPhaseShiftAt(y_odd, y_even, t, local_t0_s);
  if (!shift) {
    throw DegenerateFrameError("moment signal is flat around sample " +
                               std::to_string(t));
  }
  return *shift;
}

Polarity ClassifyFrame(double phase_shift, double low, double high) {
  return (phase_shift >= low && phase_shift < high) ? Polarity::kPositive
                                                    : Polarity::kNegative;
}

PolarityResult MajorityVote(std::span<const Polarity> votes) {
  if (votes.empty()) {
    throw InsufficientFramesError("no frame produced a vote");
  }
  const auto positive = std::count(votes.begin(), votes.end(),
                                   Polarity::kPositive);
  const auto negative = static_cast<long>(votes.size()) - positive;
  PolarityResult result;
  result.n_frames = static_cast<int>(votes.size());
  result.tie = positive == negative;
  result.label = positive >= negative ? Polarity::kPositive
                                      : Polarity::kNegative;
  result.confidence = static_cast<double>(std::max<long>(positive, negative)) /
                      static_cast<double>(votes.size());
  return result;
}

OmpdAnalysis DetectPolarityOmpd(const AudioSignal& signal,
                                const OmpdConfig& config) {
  config.Validate();
  OmpdAnalysis analysis;
  analysis.pitch = AnalyzePitch(signal, config.pitch);
  const double t0_mean = analysis.pitch.t0_mean_s;
  const MomentSignal y_odd =
      ComputeOscillatingMoment(signal, config.odd_moment, t0_mean);
  const MomentSignal y_even =
      ComputeOscillatingMoment(signal, config.even_moment, t0_mean);

  const int fs = signal.sample_rate_hz();
  const size_t hop = std::max<size_t>(1, std::lround(config.hop_s * fs));
  const double mean_period = t0_mean * fs;
  const double n = static_cast<double>(signal.size());

  std::vector<Polarity> votes;
  for (const VoicedRegion& region : analysis.pitch.voiced_regions) {
    const size_t first = (region.start_sample + hop - 1) / hop * hop;
    for (size_t t = first; t < region.end_sample; t += hop) {
      const double td = static_cast<double>(t);
      if (td < 2.0 * mean_period || td + 2.0 * mean_period > n) continue;
      const std::optional<double> local_t0 = TryLocalT0(y_odd, t, t0_mean);
      if (!local_t0) continue;
      const double guard = kBoundaryGuardPeriods * *local_t0 * fs;
      if (td - region.start_sample < guard ||
          region.end_sample - td < guard) {
        continue;
      }
      std::optional<double> raw;
      try {
        raw = TryPhaseShiftAt(y_odd, y_even, t, *local_t0);
      } catch (const InvalidArgumentError&) {
        continue;  // correlation window runs off the signal
      }
      if (!raw) continue;
      FrameDecision frame;
      frame.time_s = td / fs;
      frame.local_t0_s = *local_t0;
      frame.phase_shift = OrientedShift(*raw);
      frame.vote =
          ClassifyFrame(frame.phase_shift, config.shift_low, config.shift_high);
      votes.push_back(frame.vote);
      analysis.frames.push_back(frame);
    }
  }
  if (votes.empty()) {
    throw InsufficientFramesError(
        "every voiced frame was skipped (unreliable or degenerate)");
  }
  analysis.result = MajorityVote(votes);
  return analysis;
}

}  // namespace ompd

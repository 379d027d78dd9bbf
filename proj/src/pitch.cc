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

#include "ompd/pitch.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ompd/errors.h"
#include "ompd/highpass.h"

namespace ompd {
namespace {

struct Peak {
  double lag = 0.0;  // fractional, in samples
  double value = 0.0;
};

// Offset in (-0.5, 0.5) of the vertex of the parabola through three points.
double ParabolicOffset(double left, double center, double right) {
  const double denom = left - 2.0 * center + right;
  if (denom >= 0.0) return 0.0;
  const double offset = 0.5 * (left - right) / denom;
  return std::clamp(offset, -0.5, 0.5);
}

// Picks the shortest-lag interior local maximum whose value is within 90% of
// the global maximum; falls back to the global maximum.  `r[i]` is the
// correlation at lag first_lag + i.
Peak PickPeriodPeak(const std::vector<double>& r, size_t first_lag) {
  if (r.empty()) return {};
  const size_t global =
      std::max_element(r.begin(), r.end()) - r.begin();
  const double g = r[global];
  for (size_t i = 1; i + 1 < r.size(); ++i) {
    if (r[i] >= r[i - 1] && r[i] > r[i + 1] && r[i] >= 0.9 * g) {
      return {first_lag + i + ParabolicOffset(r[i - 1], r[i], r[i + 1]),
              r[i]};
    }
  }
  return {static_cast<double>(first_lag + global), g};
}

double Energy(const double* x, size_t n) {
  double e = 0.0;
  for (size_t i = 0; i < n; ++i) e += x[i] * x[i];
  return e;
}

double Median(std::vector<double> v) {
  const size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double upper = v[mid];
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace

PitchInfo AnalyzePitch(const AudioSignal& signal, const PitchConfig& config) {
  if (!(config.f0_min_hz > 0.0) || !(config.f0_max_hz > config.f0_min_hz)) {
    throw InvalidArgumentError("F0 search band must satisfy 0 < min < max");
  }
  if (signal.duration_s() < 0.5) {
    throw TooShortError("pitch analysis needs at least 0.5 s of audio");
  }
  const int fs = signal.sample_rate_hz();
  const std::vector<double> x =
      ZeroPhaseHighpass(signal.samples(), fs, kDriftCutoffHz);
  const size_t n = x.size();
  const double file_rms = std::sqrt(Energy(x.data(), n) / n);

  const size_t frame_len = static_cast<size_t>(std::lround(config.frame_s * fs));
  const size_t hop = static_cast<size_t>(std::lround(config.hop_s * fs));
  const size_t min_lag =
      std::max<size_t>(2, static_cast<size_t>(std::floor(fs / config.f0_max_hz)));
  const size_t max_lag = static_cast<size_t>(std::ceil(fs / config.f0_min_hz));
  if (hop == 0 || frame_len < 2 || frame_len + max_lag >= n) {
    throw TooShortError("signal too short for the pitch frame layout");
  }

  PitchInfo info;
  info.frame_hop_s = static_cast<double>(hop) / fs;
  std::vector<bool> raw_voiced;
  std::vector<double> r(max_lag - min_lag + 1);
  for (size_t start = 0; start + frame_len + max_lag <= n; start += hop) {
    PitchFrame frame;
    frame.time_s = (start + frame_len / 2.0) / fs;
    const double* f = x.data() + start;
    const double e0 = Energy(f, frame_len);
    const double frame_rms = std::sqrt(e0 / frame_len);
    bool voiced = false;
    if (e0 > 0.0 && frame_rms >= config.energy_ratio * file_rms) {
      double el = Energy(f + min_lag, frame_len);
      for (size_t lag = min_lag; lag <= max_lag; ++lag) {
        if (lag > min_lag) {
          el += f[lag + frame_len - 1] * f[lag + frame_len - 1] -
                f[lag - 1] * f[lag - 1];
        }
        double c = 0.0;
        for (size_t i = 0; i < frame_len; ++i) c += f[i] * f[i + lag];
        const double denom = std::sqrt(e0 * std::max(el, 0.0));
        r[lag - min_lag] = denom > 0.0 ? c / denom : 0.0;
      }
      const Peak peak = PickPeriodPeak(r, min_lag);
      frame.nccf = peak.value;
      frame.period_s = peak.lag / fs;
      voiced = peak.value >= config.nccf_threshold;
    }
    raw_voiced.push_back(voiced);
    info.frames.push_back(frame);
  }

  // 3-frame median (majority of three); end frames keep their raw flag.
  const size_t nf = info.frames.size();
  for (size_t i = 0; i < nf; ++i) {
    if (i == 0 || i + 1 == nf) {
      info.frames[i].voiced = raw_voiced[i];
    } else {
      const int votes = raw_voiced[i - 1] + raw_voiced[i] + raw_voiced[i + 1];
      info.frames[i].voiced = votes >= 2;
    }
  }

  std::vector<double> periods;
  for (size_t i = 0; i < nf; ++i) {
    if (info.frames[i].voiced && raw_voiced[i]) {
      periods.push_back(info.frames[i].period_s);
    }
  }
  if (periods.empty()) {
    throw NoVoicingError("no voiced frames found");
  }
  info.t0_mean_s = Median(std::move(periods));

  const double half_hop = 0.5 * hop;
  for (size_t i = 0; i < nf;) {
    if (!info.frames[i].voiced) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < nf && info.frames[j + 1].voiced) ++j;
    const double first = info.frames[i].time_s * fs;
    const double last = info.frames[j].time_s * fs;
    VoicedRegion region;
    region.start_sample =
        static_cast<size_t>(std::max(0.0, std::floor(first - half_hop)));
    region.end_sample = std::min(
        n, static_cast<size_t>(std::ceil(last + half_hop)));
    info.voiced_regions.push_back(region);
    i = j + 1;
  }
  return info;
}

std::optional<double> TryLocalT0(const MomentSignal& moment, size_t t,
                                 double t0_mean_s) {
  const double period = t0_mean_s * moment.sample_rate_hz;
  const double reach = 2.0 * period;
  if (!(period > 0.0) || static_cast<double>(t) < reach ||
      static_cast<double>(t) + reach > static_cast<double>(moment.size())) {
    throw InvalidArgumentError("local T0 frame at sample " + std::to_string(t) +
                               " is within 2 mean periods of the edge");
  }
  const std::vector<double>& y = moment.values;
  const size_t begin = t - static_cast<size_t>(std::floor(reach));
  const size_t end = t + static_cast<size_t>(std::floor(reach));
  const size_t min_lag =
      std::max<size_t>(1, static_cast<size_t>(std::ceil(0.5 * period)));
  const size_t max_lag = static_cast<size_t>(std::floor(2.0 * period));
  if (max_lag <= min_lag || max_lag >= end - begin) {
    throw InvalidArgumentError("mean period too short for local T0 search");
  }

  std::vector<double> r(max_lag - min_lag + 1);
  for (size_t lag = min_lag; lag <= max_lag; ++lag) {
    double c = 0.0, ea = 0.0, eb = 0.0;
    for (size_t i = begin; i + lag < end; ++i) {
      c += y[i] * y[i + lag];
      ea += y[i] * y[i];
      eb += y[i + lag] * y[i + lag];
    }
    const double denom = std::sqrt(ea * eb);
    r[lag - min_lag] = denom > 0.0 ? c / denom : 0.0;
  }
  const Peak peak = PickPeriodPeak(r, min_lag);
  if (!(peak.value >= kLocalT0MinCorrelation)) return std::nullopt;
  return peak.lag / moment.sample_rate_hz;
}

double LocalT0(const MomentSignal& moment, size_t t, double t0_mean_s) {
  const std::optional<double> t0 = TryLocalT0(moment, t, t0_mean_s);
  if (!t0) {
    throw UnreliableFrameError("local autocorrelation peak below " +
                               std::to_string(kLocalT0MinCorrelation) +
                               " at sample " + std::to_string(t));
  }
  return *t0;
}

}  // namespace ompd

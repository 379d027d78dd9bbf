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

#include "ompd/baselines.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "ompd/errors.h"

namespace ompd {
namespace {

// Calls `score_frame` for every voiced frame with a usable period and
// collects the votes it returns.
BaselineAnalysis RunFrames(
    const AudioSignal& signal, const BaselineConfig& config,
    const std::function<std::optional<BaselineFrame>(double, double)>&
        score_frame) {
  BaselineAnalysis analysis;
  analysis.pitch = AnalyzePitch(signal, config.pitch);
  std::vector<Polarity> votes;
  for (const PitchFrame& frame : analysis.pitch.frames) {
    if (!frame.voiced || !(frame.period_s > 0.0)) continue;
    const double f0 = 1.0 / frame.period_s;
    if (f0 < 50.0 || f0 > 500.0) continue;
    std::optional<BaselineFrame> scored;
    try {
      scored = score_frame(frame.time_s, f0);
    } catch (const InsufficientHarmonicsError&) {
      continue;
    } catch (const InvalidArgumentError&) {
      continue;  // analysis window runs off the signal
    }
    if (!scored) continue;
    votes.push_back(scored->vote);
    analysis.frames.push_back(*scored);
  }
  if (votes.empty()) {
    throw InsufficientFramesError("no voiced frame yielded usable harmonics");
  }
  analysis.result = MajorityVote(votes);
  return analysis;
}

}  // namespace

double PhaseCut(double phi1, double phi2) {
  return WrapPhase(2.0 * phi1 - phi2);
}

Polarity PcVote(double phi_cut) {
  return std::abs(phi_cut) >= 0.5 * std::numbers::pi ? Polarity::kPositive
                                                      : Polarity::kNegative;
}

std::vector<double> RelativePhaseShifts(std::span<const double> phases) {
  std::vector<double> theta(phases.size());
  for (size_t i = 0; i < phases.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    theta[i] = WrapPhase(phases[i] - k * phases[0]);
  }
  return theta;
}

std::vector<double> InvertRelativePhaseShifts(std::span<const double> theta) {
  std::vector<double> out(theta.size());
  for (size_t i = 0; i < theta.size(); ++i) {
    // k = i + 1, so pi (1 - k) = -pi i.
    out[i] = WrapPhase(theta[i] - std::numbers::pi * static_cast<double>(i));
  }
  return out;
}

double RpsRoughness(std::span<const double> theta) {
  double r = 0.0;
  for (size_t i = 0; i + 1 < theta.size(); ++i) {
    r += std::abs(WrapPhase(theta[i + 1] - theta[i]));
  }
  return r;
}

Polarity RpsVote(std::span<const double> phases, double* margin) {
  if (phases.size() < 2) {
    throw InsufficientHarmonicsError("RPS needs at least two harmonics");
  }
  const std::vector<double> theta = RelativePhaseShifts(phases);
  const double r = RpsRoughness(theta);
  const double r_inv = RpsRoughness(InvertRelativePhaseShifts(theta));
  if (margin) *margin = r - r_inv;
  return r_inv <= r ? Polarity::kPositive : Polarity::kNegative;
}

BaselineAnalysis PcDetect(const AudioSignal& signal,
                          const BaselineConfig& config) {
  return RunFrames(signal, config,
                   [&](double time_s, double f0) -> std::optional<BaselineFrame> {
    const HarmonicPhases h =
        MeasureHarmonicPhases(signal, time_s, f0, 2.0 * f0 + 1e-9);
    if (h.LeadingPresent() < 2) return std::nullopt;
    BaselineFrame frame;
    frame.time_s = time_s;
    frame.f0_hz = f0;
    frame.score = PhaseCut(h.phases[0], h.phases[1]);
    frame.vote = PcVote(frame.score);
    return frame;
  });
}

BaselineAnalysis RpsDetect(const AudioSignal& signal,
                           const BaselineConfig& config) {
  if (2.0 * config.rps_max_freq_hz > signal.sample_rate_hz() + 1e-9) {
    throw InvalidArgumentError("RPS band exceeds the Nyquist frequency");
  }
  return RunFrames(signal, config,
                   [&](double time_s, double f0) -> std::optional<BaselineFrame> {
    const HarmonicPhases h =
        MeasureHarmonicPhases(signal, time_s, f0, config.rps_max_freq_hz);
    const int k = h.LeadingPresent();
    if (k < config.rps_min_harmonics) return std::nullopt;
    BaselineFrame frame;
    frame.time_s = time_s;
    frame.f0_hz = f0;
    frame.vote = RpsVote(std::span<const double>(h.phases.data(), k),
                         &frame.score);
    return frame;
  });
}

}  // namespace ompd

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

// Phase-Cut (PC) and Relative-Phase-Shift (RPS) polarity detectors.
//
// Both read harmonic phases at every voiced 10 ms frame of the pitch
// front-end and take a majority vote.  Inverting the waveform adds pi to
// every harmonic phase, which is what makes both decisions polarity
// sensitive.
//
// PC: phi_cut = wrap(2 phi_1 - phi_2) is near 0 for a positive excitation
// peak at glottal closure and near pi for a negative one.  A negative
// closure peak is positive polarity, so a frame votes positive iff
// |phi_cut| >= pi/2.
//
// RPS: theta(k) = wrap(phi_k - k phi_1) varies smoothly across harmonics
// for a positive excitation peak.  The frame's roughness R (first
// differences across k, measured on the circle) is compared with the
// roughness R' of the same frame with every phase advanced by pi; the frame
// votes positive iff R' <= R, i.e. the inverted frame is the smoother one.

#ifndef OMPD_BASELINES_H_
#define OMPD_BASELINES_H_

#include <span>
#include <vector>

#include "ompd/audio.h"
#include "ompd/detector.h"
#include "ompd/harmonics.h"
#include "ompd/pitch.h"

namespace ompd {

struct BaselineConfig {
  PitchConfig pitch;
  double rps_max_freq_hz = 3000.0;
  int rps_min_harmonics = 4;
};

struct BaselineFrame {
  double time_s = 0.0;
  double f0_hz = 0.0;
  // phi_cut for PC; R - R' for RPS.
  double score = 0.0;
  Polarity vote = Polarity::kPositive;
};

struct BaselineAnalysis {
  PolarityResult result;
  std::vector<BaselineFrame> frames;
  PitchInfo pitch;
};

// wrap(2 phi_1 - phi_2).
double PhaseCut(double phi1, double phi2);
Polarity PcVote(double phi_cut);

// theta(k) = wrap(phi_k - k phi_1), k = 1..phases.size().
std::vector<double> RelativePhaseShifts(std::span<const double> phases);
// The RPS sequence of the polarity-inverted frame: theta(k) + pi (1 - k).
std::vector<double> InvertRelativePhaseShifts(std::span<const double> theta);
// sum_k |wrap(theta(k+1) - theta(k))|.
double RpsRoughness(std::span<const double> theta);
// Frame vote from harmonic phases (at least two).
Polarity RpsVote(std::span<const double> phases, double* margin = nullptr);

BaselineAnalysis PcDetect(const AudioSignal& signal,
                          const BaselineConfig& config = {});
BaselineAnalysis RpsDetect(const AudioSignal& signal,
                           const BaselineConfig& config = {});

}  // namespace ompd

#endif  // OMPD_BASELINES_H_

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

// Mono audio container and the polarity label shared by every detector.

#ifndef OMPD_AUDIO_H_
#define OMPD_AUDIO_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ompd {

// Below this rate the harmonics used by the phase-based baselines do not
// exist.
inline constexpr int kMinSampleRateHz = 6000;

enum class Polarity { kPositive, kNegative };

std::string_view ToString(Polarity polarity);
// Accepts "positive"/"negative" (case-insensitive), and "+"/"-".
Polarity ParsePolarity(std::string_view text);
inline Polarity Opposite(Polarity p) {
  return p == Polarity::kPositive ? Polarity::kNegative : Polarity::kPositive;
}

// Non-empty sequence of finite samples at a fixed rate.  Immutable once
// constructed; the constructor enforces the invariants.
class AudioSignal {
 public:
  AudioSignal(std::vector<double> samples, int sample_rate_hz);

  std::span<const double> samples() const { return samples_; }
  int sample_rate_hz() const { return sample_rate_hz_; }
  size_t size() const { return samples_.size(); }
  double duration_s() const {
    return static_cast<double>(samples_.size()) / sample_rate_hz_;
  }
  double operator[](size_t i) const { return samples_[i]; }

  AudioSignal Negated() const;
  AudioSignal Scaled(double gain) const;

 private:
  std::vector<double> samples_;
  int sample_rate_hz_;
};

}  // namespace ompd

#endif  // OMPD_AUDIO_H_

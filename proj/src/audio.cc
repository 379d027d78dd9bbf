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

#include "ompd/audio.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>

#include "ompd/errors.h"

namespace ompd {

std::string_view ToString(Polarity polarity) {
  return polarity == Polarity::kPositive ? "positive" : "negative";
}

Polarity ParsePolarity(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "positive" || lower == "+" || lower == "pos") {
    return Polarity::kPositive;
  }
  if (lower == "negative" || lower == "-" || lower == "neg") {
    return Polarity::kNegative;
  }
  throw InvalidArgumentError("unknown polarity '" + std::string(text) + "'");
}

AudioSignal::AudioSignal(std::vector<double> samples, int sample_rate_hz)
    : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz) {
  if (samples_.empty()) {
    throw InvalidArgumentError("audio signal is empty");
  }
  if (sample_rate_hz_ < kMinSampleRateHz) {
    throw InvalidArgumentError("sample rate " + std::to_string(sample_rate_hz_) +
                               " Hz is below the minimum of " +
                               std::to_string(kMinSampleRateHz) + " Hz");
  }
  for (size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw InvalidArgumentError("non-finite sample at index " +
                                 std::to_string(i));
    }
  }
}

AudioSignal AudioSignal::Negated() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](double v) { return -v; });
  return AudioSignal(std::move(out), sample_rate_hz_);
}

AudioSignal AudioSignal::Scaled(double gain) const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [gain](double v) { return gain * v; });
  return AudioSignal(std::move(out), sample_rate_hz_);
}

}  // namespace ompd

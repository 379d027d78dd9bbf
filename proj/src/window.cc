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

#include "ompd/window.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "ompd/errors.h"

namespace ompd {

WindowCoefficients::WindowCoefficients(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 3 || values_.size() % 2 == 0) {
    throw InvalidArgumentError("window length must be odd and >= 3");
  }
}

double WindowCoefficients::Sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

WindowCoefficients MakeBlackmanWindow(int length) {
  if (length < 3 || length % 2 == 0) {
    throw InvalidArgumentError("Blackman window length must be odd and >= 3, got " +
                               std::to_string(length));
  }
  std::vector<double> w(length);
  const double denom = static_cast<double>(length - 1);
  const int half = length / 2;
  // Fill one half and mirror so symmetry is exact.
  for (int n = 0; n <= half; ++n) {
    const double x = 2.0 * std::numbers::pi * n / denom;
    w[n] = 0.42 - 0.5 * std::cos(x) + 0.08 * std::cos(2.0 * x);
    w[length - 1 - n] = w[n];
  }
  w[0] = 0.0;
  w[length - 1] = 0.0;
  w[half] = 1.0;
  return WindowCoefficients(std::move(w));
}

int RoundToOdd(double length) {
  const int below = static_cast<int>(std::floor(length));
  const int odd_below = below % 2 == 1 ? below : below - 1;
  const int odd_above = odd_below + 2;
  const int pick = (length - odd_below < odd_above - length) ? odd_below
                                                             : odd_above;
  return pick < 3 ? 3 : pick;
}

}  // namespace ompd

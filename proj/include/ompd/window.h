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

#ifndef OMPD_WINDOW_H_
#define OMPD_WINDOW_H_

#include <span>
#include <vector>

namespace ompd {

// Symmetric odd-length window with an exact center sample.
class WindowCoefficients {
 public:
  explicit WindowCoefficients(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  int length() const { return static_cast<int>(values_.size()); }
  int half_length() const { return length() / 2; }
  double operator[](int i) const { return values_[i]; }
  double Sum() const;

 private:
  std::vector<double> values_;
};

// Classic Blackman: 0.42 - 0.5 cos(2 pi n/(N-1)) + 0.08 cos(4 pi n/(N-1)).
// `length` must be odd and >= 3.
WindowCoefficients MakeBlackmanWindow(int length);

// Nearest odd integer to `length` (ties go up), never below 3.
int RoundToOdd(double length);

}  // namespace ompd

#endif  // OMPD_WINDOW_H_

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

// Thin wrapper over FFTW for the real transforms used by the sliding-moment
// fast path and the harmonic phase analysis.  Plans are cached per size and
// shared between threads; the FFTW planner itself is not reentrant, so plan
// creation is serialized internally.

#ifndef OMPD_FFT_H_
#define OMPD_FFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ompd {

class RealFft {
 public:
  explicit RealFft(size_t n);

  size_t size() const { return n_; }
  size_t spectrum_size() const { return n_ / 2 + 1; }

  // in.size() == size(); out.size() == spectrum_size().
  void Forward(std::span<const double> in,
               std::span<std::complex<double>> out) const;
  // Unnormalized: Inverse(Forward(x)) == size() * x.
  void Inverse(std::span<const std::complex<double>> in,
               std::span<double> out) const;

 private:
  size_t n_;
  const void* plans_;
};

size_t NextPowerOfTwo(size_t n);

// "Valid" cross-correlation: out[i] = sum_j x[i + j] * kernel[j] for
// i in [0, x.size() - kernel.size()].  Callers pad x themselves.
std::vector<double> FftCorrelateValid(std::span<const double> x,
                                      std::span<const double> kernel);

}  // namespace ompd

#endif  // OMPD_FFT_H_

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

#include "ompd/fft.h"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "ompd/errors.h"

namespace ompd {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

// Plans live for the lifetime of the process.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

const PlanPair* GetPlans(size_t n) {
  static std::map<size_t, std::unique_ptr<PlanPair>> cache;
  std::lock_guard<std::mutex> lock(PlannerMutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second.get();
  double* real = fftw_alloc_real(n);
  fftw_complex* spec = fftw_alloc_complex(n / 2 + 1);
  auto plans = std::make_unique<PlanPair>();
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plans->forward =
      fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec, flags);
  plans->inverse =
      fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real, flags);
  fftw_free(real);
  fftw_free(spec);
  const PlanPair* raw = plans.get();
  cache.emplace(n, std::move(plans));
  return raw;
}

}  // namespace

RealFft::RealFft(size_t n) : n_(n), plans_(nullptr) {
  if (n < 2) throw InvalidArgumentError("FFT size must be at least 2");
  plans_ = GetPlans(n);
}

void RealFft::Forward(std::span<const double> in,
                      std::span<std::complex<double>> out) const {
  if (in.size() != n_ || out.size() != spectrum_size()) {
    throw InvalidArgumentError("RealFft::Forward size mismatch");
  }
  const auto* plans = static_cast<const PlanPair*>(plans_);
  // new-array execute never writes to the input of an r2c transform.
  fftw_execute_dft_r2c(plans->forward, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void RealFft::Inverse(std::span<const std::complex<double>> in,
                      std::span<double> out) const {
  if (in.size() != spectrum_size() || out.size() != n_) {
    throw InvalidArgumentError("RealFft::Inverse size mismatch");
  }
  const auto* plans = static_cast<const PlanPair*>(plans_);
  // c2r destroys its input, so work on a copy.
  std::vector<std::complex<double>> scratch(in.begin(), in.end());
  fftw_execute_dft_c2r(plans->inverse,
                       reinterpret_cast<fftw_complex*>(scratch.data()),
                       out.data());
}

size_t NextPowerOfTwo(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> FftCorrelateValid(std::span<const double> x,
                                      std::span<const double> kernel) {
  if (kernel.empty() || kernel.size() > x.size()) {
    throw InvalidArgumentError("kernel longer than input");
  }
  const size_t n_out = x.size() - kernel.size() + 1;
  const size_t n_fft = NextPowerOfTwo(x.size() + kernel.size() - 1);
  RealFft fft(n_fft);

  std::vector<double> a(n_fft, 0.0);
  std::copy(x.begin(), x.end(), a.begin());
  // Reversed kernel turns convolution into correlation.
  std::vector<double> b(n_fft, 0.0);
  std::copy(kernel.rbegin(), kernel.rend(), b.begin());

  std::vector<std::complex<double>> fa(fft.spectrum_size());
  std::vector<std::complex<double>> fb(fft.spectrum_size());
  fft.Forward(a, fa);
  fft.Forward(b, fb);
  for (size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  fft.Inverse(fa, a);

  const double scale = 1.0 / static_cast<double>(n_fft);
  std::vector<double> out(n_out);
  const size_t offset = kernel.size() - 1;
  for (size_t i = 0; i < n_out; ++i) out[i] = a[offset + i] * scale;
  return out;
}

}  // namespace ompd

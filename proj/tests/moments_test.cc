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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "ompd/errors.h"
#include "ompd/moments.h"
#include "ompd/synth.h"
#include "ompd/window.h"
#include "test_support.h"

namespace ompd {
namespace {

// Weighted central moment at one position, straight from the definition,
// with reflect padding at the edges.
double ReferenceMoment(const std::vector<double>& x, const WindowCoefficients& w,
                       long t, int p1) {
  const long n = static_cast<long>(x.size());
  const long h = w.half_length();
  auto at = [&](long i) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
    return x[i];
  };
  double sw = 0.0, m = 0.0;
  for (long j = -h; j <= h; ++j) {
    sw += w[j + h];
    m += w[j + h] * at(t + j);
  }
  m /= sw;
  if (p1 == 1) return m;
  double acc = 0.0;
  for (long j = -h; j <= h; ++j) acc += w[j + h] * std::pow(at(t + j) - m, p1);
  return acc / sw;
}

TEST(MomentSpecTest, DefaultWindowFactors) {
  EXPECT_DOUBLE_EQ(MomentSpec::WithDefaultWindow(1, 1).window_factor, 1.75);
  EXPECT_DOUBLE_EQ(MomentSpec::WithDefaultWindow(1, 2).window_factor, 2.5);
  EXPECT_DOUBLE_EQ(MomentSpec::WithDefaultWindow(3, 1).window_factor, 2.5);
  EXPECT_TRUE(MomentSpec::WithDefaultWindow(3, 1).polarity_dependent());
  EXPECT_FALSE(MomentSpec::WithDefaultWindow(2, 1).polarity_dependent());
}

TEST(MomentSpecTest, OrdersOutOfRange) {
  EXPECT_THROW(MomentSpec::WithDefaultWindow(0, 1).Validate(), InvalidArgumentError);
  EXPECT_THROW(MomentSpec::WithDefaultWindow(1, 5).Validate(), InvalidArgumentError);
  const AudioSignal s(testing::WhiteNoise(16000, 1), 16000);
  EXPECT_THROW(ComputeOscillatingMoment(s, MomentSpec::WithDefaultWindow(5, 1), 0.01),
               InvalidArgumentError);
}

TEST(MomentWindowLengthTest, RoundsToOdd) {
  EXPECT_EQ(MomentWindowLength(MomentSpec::WithDefaultWindow(1, 1), 0.01, 16000), 281);
  EXPECT_EQ(MomentWindowLength(MomentSpec::WithDefaultWindow(1, 2), 0.01, 16000), 401);
}

TEST(SlidingMomentTest, ConstantInput) {
  const std::vector<double> ones(500, 1.0), c(500, 0.3);
  const WindowCoefficients w = MakeBlackmanWindow(41);
  for (double v : SlidingMomentDirect(ones, w, 1)) ASSERT_NEAR(v, 1.0, 1e-12);
  for (double v : SlidingMomentFast(ones, w, 1)) ASSERT_NEAR(v, 1.0, 1e-12);
  for (double v : SlidingMomentDirect(c, w, 2)) ASSERT_NEAR(v, 0.0, 1e-15);
  for (double v : SlidingMomentFast(c, w, 2)) ASSERT_NEAR(v, 0.0, 1e-12);
}

TEST(SlidingMomentTest, DirectMatchesDefinition) {
  const auto x = testing::WhiteNoise(300, 9);
  const WindowCoefficients w = MakeBlackmanWindow(31);
  for (int p1 = 1; p1 <= 4; ++p1) {
    const auto y = SlidingMomentDirect(x, w, p1);
    for (long t : {0L, 5L, 150L, 299L}) {
      EXPECT_NEAR(y[t], ReferenceMoment(x, w, t, p1), 1e-12) << "p1=" << p1;
    }
  }
}

TEST(SlidingMomentTest, FastMatchesDirectOnRandomInput) {
  const auto x = testing::WhiteNoise(2000, 11);
  const WindowCoefficients w = MakeBlackmanWindow(257);
  const auto direct = SlidingMomentDirect(x, w, 1);
  const auto fast = SlidingMomentFast(x, w, 1);
  EXPECT_LE(testing::RelativeDeviation(fast, direct), 1e-9);
}

TEST(SlidingMomentTest, FastMatchesDirectForHigherOrders) {
  const auto s = testing::WhiteNoise(1500, 12, 0.3);
  const WindowCoefficients w = MakeBlackmanWindow(201);
  for (int p2 = 1; p2 <= 2; ++p2) {
    const auto x = PowerSignal(s, p2);
    for (int p1 = 2; p1 <= 4; ++p1) {
      const auto direct = SlidingMomentDirect(x, w, p1);
      const auto fast = SlidingMomentFast(x, w, p1);
      EXPECT_LE(testing::RelativeDeviation(fast, direct), 1e-8)
          << "p1=" << p1 << " p2=" << p2;
    }
  }
}

TEST(SlidingMomentTest, WindowMustBeShorterThanInput) {
  const std::vector<double> x(41, 1.0);
  EXPECT_THROW(SlidingMomentDirect(x, MakeBlackmanWindow(41), 1), InvalidArgumentError);
  EXPECT_THROW(SlidingMomentFast(x, MakeBlackmanWindow(41), 1), InvalidArgumentError);
}

TEST(OscillatingMomentTest, ZeroSignalGivesZero) {
  const AudioSignal s(std::vector<double>(16000, 0.0), 16000);
  for (auto [p1, p2] : {std::pair{1, 1}, {1, 2}, {3, 1}, {2, 2}}) {
    const MomentSignal y =
        ComputeOscillatingMoment(s, MomentSpec::WithDefaultWindow(p1, p2), 0.008);
    ASSERT_EQ(y.size(), s.size());
    EXPECT_EQ(testing::MaxAbs(y.values), 0.0);
  }
}

TEST(OscillatingMomentTest, EvenMomentIgnoresSign) {
  const AudioSignal s(testing::BandLimited(16000, 16000, 80, 2000, 6, 21), 16000);
  const auto spec = MomentSpec::WithDefaultWindow(1, 2);
  const MomentSignal a = ComputeOscillatingMoment(s, spec, 0.006);
  const MomentSignal b = ComputeOscillatingMoment(s.Negated(), spec, 0.006);
  EXPECT_LE(testing::MaxAbsDiff(a.values, b.values), 1e-12);
}

TEST(OscillatingMomentTest, SinusoidOscillatesAtItsFrequency) {
  const int fs = 16000;
  const AudioSignal s(testing::Sinusoid(120.0, fs, fs), fs);
  const MomentSignal y =
      ComputeOscillatingMoment(s, MomentSpec::WithDefaultWindow(1, 1), 1.0 / 120.0);
  const std::span<const double> mid(y.values.data() + 4000, 8000);
  // One bin of an 8000-sample DFT at 16 kHz is 2 Hz.
  EXPECT_NEAR(testing::DominantFrequency(mid, fs, 40.0, 1000.0, 2.0), 120.0, 2.0);
}

TEST(OscillatingMomentTest, ScaleEquivarianceOfMeanBasedSignal) {
  const AudioSignal s(testing::BandLimited(12000, 16000, 60, 1500, 5, 31), 16000);
  const auto spec = MomentSpec::WithDefaultWindow(1, 1);
  const MomentSignal a = ComputeOscillatingMoment(s, spec, 0.007);
  const MomentSignal b = ComputeOscillatingMoment(s.Scaled(3.5), spec, 0.007);
  std::vector<double> scaled(a.values);
  for (double& v : scaled) v *= 3.5;
  EXPECT_LE(testing::RelativeDeviation(b.values, scaled), 1e-12);
}

TEST(OscillatingMomentTest, ParitySignRule) {
  const AudioSignal s(testing::BandLimited(12000, 16000, 60, 3000, 8, 41), 16000);
  for (int p1 = 1; p1 <= 4; ++p1) {
    for (int p2 = 1; p2 <= 4; ++p2) {
      const auto spec = MomentSpec::WithDefaultWindow(p1, p2);
      const MomentSignal a = ComputeOscillatingMoment(s, spec, 0.005);
      const MomentSignal b = ComputeOscillatingMoment(s.Negated(), spec, 0.005);
      std::vector<double> expect(a.values);
      if (spec.polarity_dependent()) {
        for (double& v : expect) v = -v;
      }
      EXPECT_LE(testing::RelativeDeviation(b.values, expect), 1e-9)
          << "p1=" << p1 << " p2=" << p2;
    }
  }
}

TEST(OscillatingMomentTest, NoResidualDcOverInteriorSecond) {
  const int fs = 16000;
  SynthSpec spec;
  spec.f0_hz = 140.0;
  spec.duration_s = 2.0;
  const AudioSignal s = Generate(spec).signal;
  for (auto [p1, p2] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    const MomentSignal y =
        ComputeOscillatingMoment(s, MomentSpec::WithDefaultWindow(p1, p2), 1.0 / 140);
    const std::span<const double> seg(y.values.data() + fs / 2, fs);
    double mean = 0.0;
    for (double v : seg) mean += v;
    mean /= seg.size();
    EXPECT_LE(std::abs(mean), 1e-3 * testing::Rms(seg)) << p1 << "," << p2;
  }
}

TEST(OscillatingMomentTest, SynthVoiceOscillatesAtF0) {
  const int fs = 16000;
  for (double f0 : {90.0, 210.0}) {
    SynthSpec spec;
    spec.f0_hz = f0;
    spec.duration_s = 1.0;
    const AudioSignal s = Generate(spec).signal;
    const MomentSignal y =
        ComputeOscillatingMoment(s, MomentSpec::WithDefaultWindow(1, 1), 1.0 / f0);
    const std::span<const double> mid(y.values.data() + 4000, 8000);
    EXPECT_NEAR(testing::DominantFrequency(mid, fs, 40.0, 1000.0, 1.0), f0, 0.05 * f0);
  }
}

TEST(OscillatingMomentTest, PreconditionsOnT0AndLength) {
  const AudioSignal s(testing::WhiteNoise(16000, 2), 16000);
  const auto spec = MomentSpec::WithDefaultWindow(1, 1);
  EXPECT_THROW(ComputeOscillatingMoment(s, spec, 0.0019), InvalidArgumentError);
  EXPECT_THROW(ComputeOscillatingMoment(s, spec, 0.021), InvalidArgumentError);
  // 2.5 * 20 ms at 16 kHz = 801 samples; a 3000-sample input cannot hold
  // four windows.
  const AudioSignal short_signal(testing::WhiteNoise(3000, 3), 16000);
  EXPECT_THROW(ComputeOscillatingMoment(short_signal, MomentSpec::WithDefaultWindow(1, 2), 0.02),
               TooShortError);
}

}  // namespace
}  // namespace ompd

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
#include "ompd/detector.h"
#include "ompd/errors.h"
#include "ompd/synth.h"
#include "test_support.h"

namespace ompd {
namespace {

MomentSignal AsMoment(std::vector<double> values, int fs = 16000) {
  MomentSignal m;
  m.values = std::move(values);
  m.sample_rate_hz = fs;
  return m;
}

AudioSignal SynthVoice(double f0, double duration, Polarity polarity,
                       double jitter = 0.0, uint64_t seed = 0) {
  SynthSpec spec;
  spec.f0_hz = f0;
  spec.duration_s = duration;
  spec.polarity = polarity;
  spec.jitter_pct = jitter;
  spec.seed = seed;
  return Generate(spec).signal;
}

TEST(WrapUnitTest, HalfOpenInterval) {
  EXPECT_DOUBLE_EQ(WrapUnit(0.5), -0.5);
  EXPECT_DOUBLE_EQ(WrapUnit(-0.5), -0.5);
  EXPECT_DOUBLE_EQ(WrapUnit(0.75), -0.25);
  EXPECT_NEAR(WrapUnit(-1.2), -0.2, 1e-12);
  EXPECT_NEAR(WrapUnit(3.1), 0.1, 1e-12);
}

TEST(PhaseShiftTest, SignalAgainstItself) {
  const auto y = testing::Sinusoid(100.0, 16000, 4000);
  EXPECT_NEAR(PhaseShiftAt(AsMoment(y), AsMoment(y), 2000, 0.01), 0.0, 0.005);
}

TEST(PhaseShiftTest, QuarterPeriodDelayOfOddMoment) {
  // y_odd(t) = y_even(t - T0/4): the odd moment lags, so the shift is +0.25.
  const auto even = testing::Sinusoid(100.0, 16000, 4000);
  const auto odd = testing::Sinusoid(100.0, 16000, 4000, 1.0, -testing::kPi / 2);
  const double shift = PhaseShiftAt(AsMoment(odd), AsMoment(even), 2000, 0.01);
  EXPECT_NEAR(shift, 0.25, 0.01);
  const long lag = testing::BruteForceLag(odd, even, 2000, 160.0);
  EXPECT_EQ(lag, 40);
}

TEST(PhaseShiftTest, AntiphaseWrapsToMinusHalf) {
  const auto even = testing::Sinusoid(100.0, 16000, 4000);
  auto odd = even;
  for (double& v : odd) v = -v;
  const double shift = PhaseShiftAt(AsMoment(odd), AsMoment(even), 2000, 0.01);
  EXPECT_GE(shift, -0.5);
  EXPECT_LT(shift, 0.5);
  EXPECT_NEAR(std::abs(shift), 0.5, 0.01);
}

TEST(PhaseShiftTest, FractionalDelayIsRefined) {
  const double delay = 13.4;  // samples
  const auto even = testing::Sinusoid(125.0, 16000, 4000);
  std::vector<double> odd(4000);
  for (size_t i = 0; i < odd.size(); ++i) {
    odd[i] = std::cos(2.0 * testing::kPi * 125.0 * (i - delay) / 16000);
  }
  EXPECT_NEAR(PhaseShiftAt(AsMoment(odd), AsMoment(even), 2000, 0.008) * 128.0,
              delay, 0.1);
}

TEST(PhaseShiftTest, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> f0(70.0, 300.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double f = f0(rng);
    const double period = 16000.0 / f;
    const auto a = testing::BandLimited(6000, 16000, 0.8 * f, 1.25 * f, 3, rng());
    const auto b = testing::BandLimited(6000, 16000, 0.8 * f, 1.25 * f, 3, rng());
    const double shift = PhaseShiftAt(AsMoment(a), AsMoment(b), 3000, 1.0 / f);
    const long lag = testing::BruteForceLag(a, b, 3000, period);
    const double diff = WrapUnit((shift * period - lag) / period) * period;
    EXPECT_LE(std::abs(diff), 1.0) << "trial " << trial;
  }
}

TEST(PhaseShiftTest, FlatSignalIsDegenerate) {
  const std::vector<double> flat(4000, 0.0);
  const auto y = testing::Sinusoid(100.0, 16000, 4000);
  EXPECT_FALSE(TryPhaseShiftAt(AsMoment(flat), AsMoment(y), 2000, 0.01).has_value());
  EXPECT_THROW(PhaseShiftAt(AsMoment(y), AsMoment(flat), 2000, 0.01),
               DegenerateFrameError);
}

TEST(PhaseShiftTest, WindowMustFit) {
  const auto y = testing::Sinusoid(100.0, 16000, 4000);
  EXPECT_THROW(PhaseShiftAt(AsMoment(y), AsMoment(y), 150, 0.01), InvalidArgumentError);
  std::vector<double> shorter(y.begin(), y.end() - 1);
  EXPECT_THROW(PhaseShiftAt(AsMoment(y), AsMoment(shorter), 2000, 0.01),
               InvalidArgumentError);
}

TEST(OrientedShiftTest, NegationMovesByHalfPeriod) {
  for (double raw : {-0.5, -0.31, 0.0, 0.12, 0.49}) {
    const double a = OrientedShift(raw);
    const double b = OrientedShift(WrapUnit(raw + 0.5));
    EXPECT_NEAR(std::abs(WrapUnit(a - b)), 0.5, 1e-12);
    EXPECT_NE(ClassifyFrame(a), ClassifyFrame(b));
  }
}

TEST(ClassifyFrameTest, IntervalIsHalfOpen) {
  EXPECT_EQ(ClassifyFrame(0.10), Polarity::kPositive);
  EXPECT_EQ(ClassifyFrame(-0.12), Polarity::kPositive);
  EXPECT_EQ(ClassifyFrame(0.38), Polarity::kNegative);
  EXPECT_EQ(ClassifyFrame(-0.30), Polarity::kNegative);
  EXPECT_EQ(ClassifyFrame(0.45, 0.4, 0.5), Polarity::kPositive);
}

TEST(MajorityVoteTest, SixtyForty) {
  std::vector<Polarity> votes(60, Polarity::kPositive);
  votes.insert(votes.end(), 40, Polarity::kNegative);
  const PolarityResult r = MajorityVote(votes);
  EXPECT_EQ(r.label, Polarity::kPositive);
  EXPECT_DOUBLE_EQ(r.confidence, 0.6);
  EXPECT_EQ(r.n_frames, 100);
  EXPECT_FALSE(r.tie);
}

TEST(MajorityVoteTest, TieGoesPositive) {
  const std::vector<Polarity> votes = {Polarity::kNegative, Polarity::kPositive};
  const PolarityResult r = MajorityVote(votes);
  EXPECT_EQ(r.label, Polarity::kPositive);
  EXPECT_DOUBLE_EQ(r.confidence, 0.5);
  EXPECT_TRUE(r.tie);
}

TEST(MajorityVoteTest, EmptyIsInsufficient) {
  EXPECT_THROW(MajorityVote({}), InsufficientFramesError);
}

TEST(OmpdConfigTest, Validation) {
  OmpdConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.odd_moment = MomentSpec::WithDefaultWindow(1, 2);
  EXPECT_THROW(c.Validate(), InvalidArgumentError);
  c = OmpdConfig{};
  c.even_moment = MomentSpec::WithDefaultWindow(3, 1);
  EXPECT_THROW(c.Validate(), InvalidArgumentError);
  c = OmpdConfig{};
  c.shift_low = 0.4;
  c.shift_high = 0.3;
  EXPECT_THROW(c.Validate(), InvalidArgumentError);
  c = OmpdConfig{};
  c.hop_s = 0.0;
  EXPECT_THROW(c.Validate(), InvalidArgumentError);
}

TEST(DetectOmpdTest, PositiveSynthAt120Hz) {
  const OmpdAnalysis a = DetectPolarityOmpd(SynthVoice(120.0, 2.0, Polarity::kPositive));
  EXPECT_EQ(a.result.label, Polarity::kPositive);
  EXPECT_GT(a.result.confidence, 0.9);
  EXPECT_EQ(a.result.n_frames, static_cast<int>(a.frames.size()));
  EXPECT_GE(a.result.n_frames, 150);
}

TEST(DetectOmpdTest, NegatedSynthFlipsLabelAndEveryVote) {
  const AudioSignal s = SynthVoice(120.0, 2.0, Polarity::kPositive, 1.0, 4);
  const OmpdAnalysis a = DetectPolarityOmpd(s);
  const OmpdAnalysis b = DetectPolarityOmpd(s.Negated());
  ASSERT_GT(a.result.confidence, 0.5);
  EXPECT_EQ(b.result.label, Opposite(a.result.label));
  ASSERT_EQ(a.frames.size(), b.frames.size());
  for (size_t i = 0; i < a.frames.size(); ++i) {
    EXPECT_EQ(a.frames[i].time_s, b.frames[i].time_s);
    EXPECT_NEAR(std::abs(WrapUnit(a.frames[i].phase_shift - b.frames[i].phase_shift)),
                0.5, 0.02);
    EXPECT_NE(a.frames[i].vote, b.frames[i].vote);
  }
}

TEST(DetectOmpdTest, FramesAreOrderedAndInRange) {
  const OmpdAnalysis a = DetectPolarityOmpd(SynthVoice(95.0, 1.5, Polarity::kNegative));
  EXPECT_EQ(a.result.label, Polarity::kNegative);
  for (size_t i = 0; i < a.frames.size(); ++i) {
    EXPECT_GE(a.frames[i].phase_shift, -0.5);
    EXPECT_LT(a.frames[i].phase_shift, 0.5);
    EXPECT_EQ(a.frames[i].vote, ClassifyFrame(a.frames[i].phase_shift));
    if (i > 0) {
      EXPECT_GT(a.frames[i].time_s, a.frames[i - 1].time_s);
    }
  }
}

TEST(DetectOmpdTest, AmplitudeScalingKeepsVotes) {
  const AudioSignal s = SynthVoice(150.0, 1.2, Polarity::kPositive, 1.0, 8);
  const OmpdAnalysis a = DetectPolarityOmpd(s);
  const OmpdAnalysis b = DetectPolarityOmpd(s.Scaled(0.07));
  ASSERT_EQ(a.frames.size(), b.frames.size());
  for (size_t i = 0; i < a.frames.size(); ++i) {
    EXPECT_EQ(a.frames[i].vote, b.frames[i].vote);
  }
  EXPECT_EQ(a.result.label, b.result.label);
}

TEST(DetectOmpdTest, SilenceHasNoVoicing) {
  const AudioSignal s(std::vector<double>(16000, 0.0), 16000);
  EXPECT_THROW(DetectPolarityOmpd(s), NoVoicingError);
}

TEST(DetectOmpdTest, Deterministic) {
  const AudioSignal s = SynthVoice(210.0, 1.0, Polarity::kNegative, 1.0, 2);
  const OmpdAnalysis a = DetectPolarityOmpd(s);
  const OmpdAnalysis b = DetectPolarityOmpd(s);
  ASSERT_EQ(a.frames.size(), b.frames.size());
  for (size_t i = 0; i < a.frames.size(); ++i) {
    EXPECT_EQ(a.frames[i].phase_shift, b.frames[i].phase_shift);
  }
}

}  // namespace
}  // namespace ompd

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

// Acceptance run: prints one PASS/FAIL line per criterion with the measured
// value and exits non-zero if any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ompd/baselines.h"
#include "ompd/corpus.h"
#include "ompd/detector.h"
#include "ompd/errors.h"
#include "ompd/moments.h"
#include "ompd/synth.h"
#include "ompd/wav.h"
#include "ompd/window.h"
#include "test_support.h"

namespace ompd {
namespace {

namespace fs = std::filesystem;

int g_failures = 0;
std::map<int, std::string> g_lines;

void Report(int id, bool pass, const std::string& detail) {
  char head[64];
  std::snprintf(head, sizeof(head), "CRITERION %d: %s  ", id, pass ? "PASS" : "FAIL");
  g_lines[id] = head + detail;
  std::printf("%s\n", g_lines[id].c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string Format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

int Jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Runs fn(i) for i in [0, n) on a small pool; fn writes to its own slot.
template <typename Fn>
void ParallelFor(size_t n, Fn fn) {
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < Jobs(); ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

struct PairedRun {
  bool ompd_eligible = false;
  bool flipped[3] = {false, false, false};
  std::vector<double> displacement_error;  // per frame, OMPD
  bool frames_aligned = true;
};

PairedRun RunPaired(const fs::path& path) {
  PairedRun out;
  const AudioSignal s = ReadWav(path);
  const AudioSignal n = s.Negated();
  const OmpdAnalysis a = DetectPolarityOmpd(s);
  const OmpdAnalysis b = DetectPolarityOmpd(n);
  out.ompd_eligible = a.result.confidence > 0.5;
  out.flipped[0] = a.result.label != b.result.label;
  out.flipped[1] = PcDetect(s).result.label != PcDetect(n).result.label;
  out.flipped[2] = RpsDetect(s).result.label != RpsDetect(n).result.label;
  if (a.frames.size() != b.frames.size()) {
    out.frames_aligned = false;
    return out;
  }
  for (size_t i = 0; i < a.frames.size(); ++i) {
    if (a.frames[i].time_s != b.frames[i].time_s) out.frames_aligned = false;
    const double d = WrapUnit(b.frames[i].phase_shift - a.frames[i].phase_shift);
    out.displacement_error.push_back(std::abs(std::abs(d) - 0.5));
  }
  return out;
}

void CorpusCriteria(const fs::path& dir) {
  const CorpusManifest corpus = MakeEvalCorpus(200, 42, dir);
  EvalOptions opts;
  opts.jobs = Jobs();

  const auto t0 = std::chrono::steady_clock::now();
  const CorpusReport ompd = EvalCorpus(corpus.manifest_path, {}, opts);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s", FormatReportText(ompd).c_str());
  Report(1, ompd.total.ok == 200 && seconds < 30.0,
         Format("OMPD accuracy %.2f%% (%.0f/200), eval time %.1f s", ompd.total.accuracy_pct,
                ompd.total.ok, seconds));

  DetectConfig pc_cfg, rps_cfg;
  pc_cfg.method = Method::kPc;
  rps_cfg.method = Method::kRps;
  const CorpusReport pc = EvalCorpus(corpus.manifest_path, pc_cfg, opts);
  const CorpusReport rps = EvalCorpus(corpus.manifest_path, rps_cfg, opts);
  Report(2, pc.total.accuracy_pct >= 90.0 && rps.total.accuracy_pct >= 90.0,
         Format("PC %.2f%%, RPS %.2f%% (floor 90%%)", pc.total.accuracy_pct,
                rps.total.accuracy_pct));

  std::vector<PairedRun> runs(corpus.entries.size());
  ParallelFor(runs.size(), [&](size_t i) {
    runs[i] = RunPaired(dir / corpus.entries[i].path);
  });
  int eligible = 0, flipped[3] = {0, 0, 0};
  std::vector<double> errors;
  bool aligned = true;
  for (const PairedRun& r : runs) {
    aligned = aligned && r.frames_aligned;
    errors.insert(errors.end(), r.displacement_error.begin(), r.displacement_error.end());
    if (!r.ompd_eligible) continue;
    ++eligible;
    for (int m = 0; m < 3; ++m) flipped[m] += r.flipped[m];
  }
  const bool all_flip = eligible > 0 && flipped[0] == eligible && flipped[1] == eligible &&
                        flipped[2] == eligible;
  Report(3, all_flip,
         Format("eligible %.0f files; flipped OMPD %.0f, PC %.0f", eligible, flipped[0],
                flipped[1]) +
             Format(", RPS %.0f", flipped[2]));

  double mean_err = 0.0;
  for (double e : errors) mean_err += e;
  mean_err = errors.empty() ? 1.0 : mean_err / errors.size();
  Report(7, aligned && !errors.empty() && mean_err <= 0.02,
         Format("mean |displacement - 0.5| = %.5f over %.0f frame pairs (limit 0.02)",
                mean_err, errors.size()));

  EvalOptions one, eight;
  eight.jobs = 8;
  const CorpusReport r1 = EvalCorpus(corpus.manifest_path, {}, one);
  const CorpusReport r8 = EvalCorpus(corpus.manifest_path, {}, eight);
  const bool same = FormatReportText(r1) == FormatReportText(r8) &&
                    FormatReportJsonLines(r1) == FormatReportJsonLines(r8);
  Report(8, same, same ? "jobs 1 and jobs 8 reports byte-identical" : "reports differ");
}

void ParityCriterion() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> t0(1.0 / 300.0, 1.0 / 80.0);
  double dev_12 = 0.0, dev_11 = 0.0, dev_rule = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const AudioSignal s(testing::BandLimited(8000, 16000, 60.0, 4000.0, 12, rng()), 16000);
    const AudioSignal n = s.Negated();
    const double t = t0(rng);
    const auto moment = [&](const AudioSignal& x, int p1, int p2) {
      return ComputeOscillatingMoment(x, MomentSpec::WithDefaultWindow(p1, p2), t).values;
    };
    dev_12 = std::max(dev_12, testing::RelativeDeviation(moment(n, 1, 2), moment(s, 1, 2)));
    std::vector<double> neg11 = moment(s, 1, 1);
    for (double& v : neg11) v = -v;
    dev_11 = std::max(dev_11, testing::RelativeDeviation(moment(n, 1, 1), neg11));
    for (auto [p1, p2] : {std::pair{3, 1}, {2, 1}, {4, 1}, {1, 3}}) {
      std::vector<double> expect = moment(s, p1, p2);
      if ((p1 * p2) % 2 == 1) {
        for (double& v : expect) v = -v;
      }
      dev_rule = std::max(dev_rule, testing::RelativeDeviation(moment(n, p1, p2), expect));
    }
  }
  Report(4, dev_12 <= 1e-12 && dev_11 <= 1e-12 && dev_rule <= 1e-9,
         Format("max rel dev y12 %.2e, y11 %.2e, sign rule %.2e", dev_12, dev_11, dev_rule));
}

void OracleCriterion() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> len(3, 200), n_extra(50, 2000);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int w = 2 * len(rng) + 1;
    const auto x = testing::WhiteNoise(w + n_extra(rng), rng(), 0.5);
    const WindowCoefficients win = MakeBlackmanWindow(w);
    worst = std::max(worst, testing::RelativeDeviation(SlidingMomentFast(x, win, 1),
                                                       SlidingMomentDirect(x, win, 1)));
  }

  std::uniform_real_distribution<double> f0(70.0, 320.0);
  double worst_lag = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double f = f0(rng);
    const double period = 16000.0 / f;
    const auto a = testing::BandLimited(6000, 16000, 0.8 * f, 1.25 * f, 3, rng());
    const auto b = testing::BandLimited(6000, 16000, 0.8 * f, 1.25 * f, 3, rng());
    MomentSignal ma, mb;
    ma.values = a;
    mb.values = b;
    ma.sample_rate_hz = mb.sample_rate_hz = 16000;
    const double shift = PhaseShiftAt(ma, mb, 3000, 1.0 / f);
    const long lag = testing::BruteForceLag(a, b, 3000, period);
    worst_lag = std::max(worst_lag, std::abs(WrapUnit((shift * period - lag) / period)) * period);
  }
  Report(5, worst <= 1e-9 && worst_lag <= 1.0,
         Format("fast vs direct max rel dev %.2e; phase shift vs brute-force lag max %.3f samples",
                worst, worst_lag));
}

void OscillationCriterion() {
  const int fs = 16000;
  double worst = 0.0;
  for (double f0 : {80.0, 120.0, 200.0, 300.0}) {
    SynthSpec spec;
    spec.f0_hz = f0;
    spec.duration_s = 1.0;
    const AudioSignal s = Generate(spec).signal;
    for (auto [p1, p2] : {std::pair{1, 1}, {2, 1}, {3, 1}, {4, 1}}) {
      const MomentSignal y =
          ComputeOscillatingMoment(s, MomentSpec::WithDefaultWindow(p1, p2), 1.0 / f0);
      const std::span<const double> mid(y.values.data() + 4000, 8000);
      const double f = testing::DominantFrequency(mid, fs, 40.0, 1000.0, 1.0);
      const double rel = std::abs(f - f0) / f0;
      worst = std::max(worst, rel);
      std::printf("  F0 %.0f Hz, order (%d,%d): dominant %.0f Hz\n", f0, p1, p2, f);
    }
  }
  Report(6, worst <= 0.05, Format("worst relative frequency error %.4f (limit 0.05)", worst));
}

}  // namespace
}  // namespace ompd

int main() {
  const auto dir = ompd::testing::ScratchDir("acceptance");
  try {
    ompd::CorpusCriteria(dir);
    ompd::ParityCriterion();
    ompd::OracleCriterion();
    ompd::OscillationCriterion();
  } catch (const std::exception& e) {
    std::printf("aborted: %s\n", e.what());
    ++ompd::g_failures;
  }
  std::filesystem::remove_all(dir);
  std::printf("\nSummary\n");
  for (const auto& [id, line] : ompd::g_lines) std::printf("%s\n", line.c_str());
  std::printf("%d criterion failure(s)\n", ompd::g_failures);
  return ompd::g_failures == 0 ? 0 : 1;
}

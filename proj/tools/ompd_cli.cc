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

// Command-line front end: detect, eval, synth and dump.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ompd/corpus.h"
#include "ompd/diagnostics.h"
#include "ompd/errors.h"
#include "ompd/synth.h"
#include "ompd/wav.h"

namespace {

constexpr int kExitError = 2;

struct CommonFlags {
  std::string method = "ompd";
  int p1 = 1;
  int p2 = 1;
  double shift_low = ompd::kDefaultShiftLow;
  double shift_high = ompd::kDefaultShiftHigh;
  double hop_ms = 10.0;
  double f0_min = 50.0;
  double f0_max = 500.0;
  std::string format = "text";
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& f, bool with_method) {
  if (with_method) {
    cmd->add_option("--method", f.method, "Detector")
        ->check(CLI::IsMember({"ompd", "pc", "rps"}))
        ->capture_default_str();
  }
  cmd->add_option("--p1", f.p1, "Statistical order of the odd moment")
      ->capture_default_str();
  cmd->add_option("--p2", f.p2, "Power order of the odd moment")
      ->capture_default_str();
  cmd->add_option("--shift-low", f.shift_low, "Lower bound of the positive shift band")
      ->capture_default_str();
  cmd->add_option("--shift-high", f.shift_high, "Upper bound of the positive shift band")
      ->capture_default_str();
  cmd->add_option("--hop-ms", f.hop_ms, "Analysis hop in milliseconds")
      ->capture_default_str();
  cmd->add_option("--f0-min", f.f0_min, "Lowest F0 searched (Hz)")
      ->capture_default_str();
  cmd->add_option("--f0-max", f.f0_max, "Highest F0 searched (Hz)")
      ->capture_default_str();
}

ompd::DetectConfig BuildConfig(const CommonFlags& f) {
  ompd::DetectConfig c;
  c.method = ompd::ParseMethod(f.method);
  c.ompd.odd_moment = ompd::MomentSpec::WithDefaultWindow(f.p1, f.p2);
  c.ompd.shift_low = f.shift_low;
  c.ompd.shift_high = f.shift_high;
  c.ompd.hop_s = f.hop_ms / 1000.0;
  c.ompd.pitch.f0_min_hz = f.f0_min;
  c.ompd.pitch.f0_max_hz = f.f0_max;
  c.ompd.Validate();
  c.baseline.pitch = c.ompd.pitch;
  return c;
}

int RunDetect(const std::string& path, const CommonFlags& flags) {
  const ompd::DetectConfig config = BuildConfig(flags);
  const ompd::FileDetection det = ompd::DetectFile(path, config);
  const ompd::PolarityResult& r = det.result;
  if (flags.format == "json-lines") {
    nlohmann::ordered_json j = {{"path", det.path.string()},
                                {"method", ompd::ToString(config.method)},
                                {"label", std::string(ompd::ToString(r.label))},
                                {"confidence", r.confidence},
                                {"n_frames", r.n_frames},
                                {"tie", r.tie}};
    std::cout << j.dump() << "\n";
  } else {
    std::printf("%s\t%s\tconfidence=%.4f\tframes=%d%s\n",
                det.path.string().c_str(),
                std::string(ompd::ToString(r.label)).c_str(), r.confidence,
                r.n_frames, r.tie ? "\ttie" : "");
  }
  return r.label == ompd::Polarity::kPositive ? 0 : 1;
}

int RunEval(const std::string& manifest, const CommonFlags& flags, int jobs,
            bool strict) {
  const ompd::DetectConfig config = BuildConfig(flags);
  const ompd::CorpusReport report =
      ompd::EvalCorpus(std::filesystem::path(manifest), config, {jobs, strict});
  std::cout << (flags.format == "json-lines" ? ompd::FormatReportJsonLines(report)
                                             : ompd::FormatReportText(report));
  return 0;
}

struct SynthFlags {
  std::string out;
  double f0 = 120.0;
  double duration = 1.0;
  int fs = 16000;
  std::string polarity = "positive";
  std::string mode = "glottal";
  double jitter = 0.0;
  uint64_t seed = 0;
  int corpus = 0;
};

int RunSynth(const SynthFlags& f) {
  if (f.corpus > 0) {
    const ompd::CorpusManifest m =
        ompd::MakeEvalCorpus(f.corpus, f.seed, f.out);
    std::printf("%s\t%zu files\n", m.manifest_path.string().c_str(),
                m.entries.size());
    return 0;
  }
  ompd::SynthSpec spec;
  spec.f0_hz = f.f0;
  spec.duration_s = f.duration;
  spec.sample_rate_hz = f.fs;
  spec.polarity = ompd::ParsePolarity(f.polarity);
  spec.mode = f.mode == "zero-phase" ? ompd::SynthMode::kZeroPhaseHarmonics
                                     : ompd::SynthMode::kGlottalPulse;
  spec.jitter_pct = f.jitter;
  spec.seed = f.seed;
  const ompd::SynthOutput out = ompd::Generate(spec);
  ompd::WriteWav16(f.out, out.signal);
  return 0;
}

std::vector<std::pair<int, int>> ParseOrders(const std::vector<std::string>& raw) {
  std::vector<std::pair<int, int>> orders;
  for (const std::string& s : raw) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos) {
      throw ompd::InvalidArgumentError("--order expects p1,p2 but got '" + s + "'");
    }
    try {
      orders.emplace_back(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw ompd::InvalidArgumentError("--order expects integers, got '" + s + "'");
    }
  }
  return orders;
}

int RunDump(const std::string& path, const std::string& out_dir,
            const CommonFlags& flags, const std::vector<std::string>& orders) {
  const ompd::DetectConfig config = BuildConfig(flags);
  const ompd::AudioSignal signal = ompd::ReadWav(path);
  const ompd::DiagnosticsFiles files =
      ompd::DumpDiagnostics(signal, out_dir, config.ompd, ParseOrders(orders));
  std::printf("%s\n%s\n", files.moments_csv.string().c_str(),
              files.shifts_csv.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Speech polarity detection from oscillating moments"};
  app.require_subcommand(1);

  CommonFlags detect_flags;
  std::string detect_path;
  CLI::App* detect = app.add_subcommand("detect", "Detect the polarity of one WAV file");
  detect->add_option("wav", detect_path, "Input WAV")->required();
  AddCommonFlags(detect, detect_flags, true);
  detect->add_option("--format", detect_flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  CommonFlags eval_flags;
  std::string manifest;
  int jobs = 1;
  bool strict = false;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a manifest of labelled files");
  eval->add_option("manifest", manifest, "Manifest (path,polarity[,group])")->required();
  AddCommonFlags(eval, eval_flags, true);
  eval->add_option("--format", eval_flags.format, "Report format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  eval->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  eval->add_flag("--strict", strict, "Fail on unreadable files instead of counting KO");

  SynthFlags synth_flags;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic vowel or corpus");
  synth->add_option("-o,--out", synth_flags.out, "Output WAV, or directory with --corpus")
      ->required();
  synth->add_option("--f0", synth_flags.f0, "Fundamental frequency (Hz)")->capture_default_str();
  synth->add_option("--duration", synth_flags.duration, "Seconds")->capture_default_str();
  synth->add_option("--fs", synth_flags.fs, "Sample rate (Hz)")->capture_default_str();
  synth->add_option("--polarity", synth_flags.polarity, "positive or negative")
      ->check(CLI::IsMember({"positive", "negative"}))
      ->capture_default_str();
  synth->add_option("--mode", synth_flags.mode, "glottal or zero-phase")
      ->check(CLI::IsMember({"glottal", "zero-phase"}))
      ->capture_default_str();
  synth->add_option("--jitter", synth_flags.jitter, "Period jitter (percent)")
      ->capture_default_str();
  synth->add_option("--seed", synth_flags.seed, "Random seed")->capture_default_str();
  synth->add_option("--corpus", synth_flags.corpus, "Write an N-file labelled corpus");

  CommonFlags dump_flags;
  std::string dump_path, dump_dir = ".";
  std::vector<std::string> dump_orders;
  CLI::App* dump = app.add_subcommand("dump", "Write moments.csv and shifts.csv");
  dump->add_option("wav", dump_path, "Input WAV")->required();
  dump->add_option("-o,--out-dir", dump_dir, "Output directory")->capture_default_str();
  dump->add_option("--order", dump_orders, "Extra moment order p1,p2 (repeatable)");
  AddCommonFlags(dump, dump_flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : std::max(code, kExitError);
  }

  try {
    if (*detect) return RunDetect(detect_path, detect_flags);
    if (*eval) return RunEval(manifest, eval_flags, jobs, strict);
    if (*synth) return RunSynth(synth_flags);
    if (*dump) return RunDump(dump_path, dump_dir, dump_flags, dump_orders);
  } catch (const ompd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

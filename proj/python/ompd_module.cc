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

// Python bindings for the polarity detectors and their building blocks.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "ompd/audio.h"
#include "ompd/baselines.h"
#include "ompd/corpus.h"
#include "ompd/detector.h"
#include "ompd/errors.h"
#include "ompd/moments.h"
#include "ompd/pitch.h"
#include "ompd/synth.h"
#include "ompd/wav.h"

namespace py = pybind11;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ompd::AudioSignal ToSignal(const Array& samples, int sample_rate_hz) {
  if (samples.ndim() != 1) {
    throw ompd::InvalidArgumentError("samples must be one-dimensional");
  }
  const double* p = samples.data();
  return ompd::AudioSignal(std::vector<double>(p, p + samples.size()),
                           sample_rate_hz);
}

Array ToArray(std::span<const double> v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

ompd::DetectConfig MakeConfig(const std::string& method, int p1, int p2,
                              double shift_low, double shift_high,
                              double hop_ms, double f0_min, double f0_max) {
  ompd::DetectConfig c;
  c.method = ompd::ParseMethod(method);
  c.ompd.odd_moment = ompd::MomentSpec::WithDefaultWindow(p1, p2);
  c.ompd.shift_low = shift_low;
  c.ompd.shift_high = shift_high;
  c.ompd.hop_s = hop_ms / 1000.0;
  c.ompd.pitch.f0_min_hz = f0_min;
  c.ompd.pitch.f0_max_hz = f0_max;
  c.ompd.Validate();
  c.baseline.pitch = c.ompd.pitch;
  return c;
}

py::dict ResultDict(const ompd::PolarityResult& r) {
  py::dict d;
  d["label"] = std::string(ompd::ToString(r.label));
  d["confidence"] = r.confidence;
  d["n_frames"] = r.n_frames;
  d["tie"] = r.tie;
  return d;
}

#define OMPD_CONFIG_ARGS                                                    \
  py::arg("method") = "ompd", py::arg("p1") = 1, py::arg("p2") = 1,         \
  py::arg("shift_low") = ompd::kDefaultShiftLow,                            \
  py::arg("shift_high") = ompd::kDefaultShiftHigh, py::arg("hop_ms") = 10.0, \
  py::arg("f0_min") = 50.0, py::arg("f0_max") = 500.0

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Speech polarity detection from oscillating moments";

  auto base = py::register_exception<ompd::Error>(m, "OmpdError", PyExc_RuntimeError);
  py::register_exception<ompd::InvalidArgumentError>(m, "InvalidArgumentError", base);
  py::register_exception<ompd::TooShortError>(m, "TooShortError", base);
  py::register_exception<ompd::NoVoicingError>(m, "NoVoicingError", base);
  py::register_exception<ompd::InsufficientFramesError>(m, "InsufficientFramesError", base);
  py::register_exception<ompd::InsufficientHarmonicsError>(m, "InsufficientHarmonicsError", base);
  py::register_exception<ompd::FormatError>(m, "FormatError", base);
  py::register_exception<ompd::NotFoundError>(m, "NotFoundError", base);

  m.def(
      "oscillating_moment",
      [](const Array& samples, int fs, int p1, int p2, double t0_mean_s) {
        const ompd::AudioSignal s = ToSignal(samples, fs);
        return ToArray(ompd::ComputeOscillatingMoment(
                           s, ompd::MomentSpec::WithDefaultWindow(p1, p2), t0_mean_s)
                           .values);
      },
      py::arg("samples"), py::arg("sample_rate_hz"), py::arg("p1"), py::arg("p2"),
      py::arg("t0_mean_s"),
      "Dense moment y_{p1,p2}(t) with the default window, 40 Hz high-passed.");

  m.def(
      "t0_mean",
      [](const Array& samples, int fs) {
        return ompd::AnalyzePitch(ToSignal(samples, fs)).t0_mean_s;
      },
      py::arg("samples"), py::arg("sample_rate_hz"),
      "Median pitch period of the voiced frames, in seconds.");

  m.def(
      "detect",
      [](const Array& samples, int fs, const std::string& method, int p1, int p2,
         double lo, double hi, double hop, double fmin, double fmax) {
        const ompd::AudioSignal s = ToSignal(samples, fs);
        const ompd::DetectConfig c = MakeConfig(method, p1, p2, lo, hi, hop, fmin, fmax);
        py::gil_scoped_release release;
        const ompd::PolarityResult r = ompd::DetectSignal(s, c);
        py::gil_scoped_acquire acquire;
        return ResultDict(r);
      },
      py::arg("samples"), py::arg("sample_rate_hz"), OMPD_CONFIG_ARGS,
      "Polarity of an in-memory signal as a dict.");

  m.def(
      "frame_shifts",
      [](const Array& samples, int fs) {
        const ompd::OmpdAnalysis a = ompd::DetectPolarityOmpd(ToSignal(samples, fs));
        std::vector<double> times, shifts;
        for (const ompd::FrameDecision& f : a.frames) {
          times.push_back(f.time_s);
          shifts.push_back(f.phase_shift);
        }
        return py::make_tuple(ToArray(times), ToArray(shifts));
      },
      py::arg("samples"), py::arg("sample_rate_hz"),
      "Per-frame times and oriented phase shifts (fractions of local T0).");

  m.def(
      "detect_file",
      [](const std::string& path, const std::string& method, int p1, int p2,
         double lo, double hi, double hop, double fmin, double fmax) {
        const ompd::DetectConfig c = MakeConfig(method, p1, p2, lo, hi, hop, fmin, fmax);
        py::gil_scoped_release release;
        const ompd::FileDetection d = ompd::DetectFile(path, c);
        py::gil_scoped_acquire acquire;
        py::dict out = ResultDict(d.result);
        out["path"] = d.path.string();
        return out;
      },
      py::arg("path"), OMPD_CONFIG_ARGS);

  m.def(
      "eval_corpus",
      [](const std::string& manifest, const std::string& method, int p1, int p2,
         double lo, double hi, double hop, double fmin, double fmax, int jobs,
         bool strict, const std::string& format) {
        const ompd::DetectConfig c = MakeConfig(method, p1, p2, lo, hi, hop, fmin, fmax);
        std::string text;
        {
          py::gil_scoped_release release;
          const ompd::CorpusReport r =
              ompd::EvalCorpus(std::filesystem::path(manifest), c, {jobs, strict});
          text = format == "json-lines" ? ompd::FormatReportJsonLines(r)
                                        : ompd::FormatReportText(r);
        }
        return text;
      },
      py::arg("manifest"), OMPD_CONFIG_ARGS, py::arg("jobs") = 1,
      py::arg("strict") = false, py::arg("format") = "text",
      "Formatted corpus report.");

  m.def(
      "synthesize",
      [](double f0, double duration, int fs, const std::string& polarity,
         const std::string& mode, double jitter_pct, uint64_t seed,
         const std::optional<std::vector<std::pair<double, double>>>& formants) {
        ompd::SynthSpec spec;
        if (formants) {
          spec.formants.clear();
          for (const auto& [fc, bw] : *formants) spec.formants.push_back({fc, bw});
        }
        spec.f0_hz = f0;
        spec.duration_s = duration;
        spec.sample_rate_hz = fs;
        spec.polarity = ompd::ParsePolarity(polarity);
        if (mode == "zero-phase") {
          spec.mode = ompd::SynthMode::kZeroPhaseHarmonics;
        } else if (mode != "glottal") {
          throw ompd::InvalidArgumentError("mode must be 'glottal' or 'zero-phase'");
        }
        spec.jitter_pct = jitter_pct;
        spec.seed = seed;
        return ToArray(ompd::Generate(spec).signal.samples());
      },
      py::arg("f0_hz") = 120.0, py::arg("duration_s") = 1.0,
      py::arg("sample_rate_hz") = 16000, py::arg("polarity") = "positive",
      py::arg("mode") = "glottal", py::arg("jitter_pct") = 0.0, py::arg("seed") = 0,
      py::arg("formants") = py::none(),
      "Synthetic vowel; formants is a list of (center_hz, bandwidth_hz).");

  m.def(
      "make_eval_corpus",
      [](int n, uint64_t seed, const std::string& out_dir) {
        return ompd::MakeEvalCorpus(n, seed, out_dir).manifest_path.string();
      },
      py::arg("n_files"), py::arg("seed"), py::arg("out_dir"),
      "Writes a labelled WAV corpus; returns the manifest path.");

  m.def(
      "read_wav",
      [](const std::string& path) {
        const ompd::AudioSignal s = ompd::ReadWav(path);
        return py::make_tuple(ToArray(s.samples()), s.sample_rate_hz());
      },
      py::arg("path"));

  m.def(
      "write_wav",
      [](const std::string& path, const Array& samples, int fs) {
        ompd::WriteWav16(path, ToSignal(samples, fs));
      },
      py::arg("path"), py::arg("samples"), py::arg("sample_rate_hz"));
}

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

#include "ompd/diagnostics.h"

#include <cstdio>
#include <memory>
#include <string>

#include "ompd/errors.h"
#include "ompd/moments.h"

namespace ompd {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr OpenForWrite(const std::filesystem::path& path) {
  FilePtr f(std::fopen(path.string().c_str(), "wb"));
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  return f;
}

std::string ColumnName(const MomentSpec& spec) {
  return "y_" + std::to_string(spec.p1) + "_" + std::to_string(spec.p2);
}

}  // namespace

DiagnosticsFiles DumpDiagnostics(
    const AudioSignal& signal, const std::filesystem::path& out_dir,
    const OmpdConfig& config,
    const std::vector<std::pair<int, int>>& extra_orders) {
  DiagnosticsFiles files;
  files.analysis = DetectPolarityOmpd(signal, config);
  const double t0 = files.analysis.pitch.t0_mean_s;

  std::vector<MomentSignal> moments;
  moments.push_back(ComputeOscillatingMoment(signal, config.odd_moment, t0));
  moments.push_back(ComputeOscillatingMoment(signal, config.even_moment, t0));
  for (const auto& [p1, p2] : extra_orders) {
    moments.push_back(ComputeOscillatingMoment(
        signal, MomentSpec::WithDefaultWindow(p1, p2), t0));
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  files.moments_csv = out_dir / "moments.csv";
  {
    FilePtr f = OpenForWrite(files.moments_csv);
    std::fputs("time_s", f.get());
    for (const MomentSignal& m : moments) {
      std::fprintf(f.get(), ",%s", ColumnName(m.spec).c_str());
    }
    std::fputc('\n', f.get());
    const double fs = signal.sample_rate_hz();
    for (size_t n = 0; n < signal.size(); ++n) {
      std::fprintf(f.get(), "%.6f", n / fs);
      for (const MomentSignal& m : moments) {
        std::fprintf(f.get(), ",%.10g", m.values[n]);
      }
      std::fputc('\n', f.get());
    }
    if (std::ferror(f.get())) throw IoError("failed writing " + files.moments_csv.string());
  }

  files.shifts_csv = out_dir / "shifts.csv";
  {
    FilePtr f = OpenForWrite(files.shifts_csv);
    std::fputs("time_s,phase_shift,vote\n", f.get());
    for (const FrameDecision& d : files.analysis.frames) {
      const std::string vote(ToString(d.vote));
      std::fprintf(f.get(), "%.6f,%.10g,%s\n", d.time_s, d.phase_shift,
                   vote.c_str());
    }
    if (std::ferror(f.get())) throw IoError("failed writing " + files.shifts_csv.string());
  }
  return files;
}

}  // namespace ompd

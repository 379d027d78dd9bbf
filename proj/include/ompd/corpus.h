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

// Single-file detection dispatch, manifests and corpus reports.

#ifndef OMPD_CORPUS_H_
#define OMPD_CORPUS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ompd/audio.h"
#include "ompd/baselines.h"
#include "ompd/detector.h"

namespace ompd {

enum class Method { kOmpd, kPc, kRps };

std::string ToString(Method method);
// Accepts "ompd", "pc" or "rps"; throws InvalidArgumentError otherwise.
Method ParseMethod(std::string_view text);

struct DetectConfig {
  Method method = Method::kOmpd;
  OmpdConfig ompd;
  BaselineConfig baseline;  // its pitch settings mirror ompd.pitch
};

PolarityResult DetectSignal(const AudioSignal& signal,
                            const DetectConfig& config = {});

struct FileDetection {
  std::filesystem::path path;
  PolarityResult result;
};

// Reads the WAV at `path` and runs the configured detector.
FileDetection DetectFile(const std::filesystem::path& path,
                         const DetectConfig& config = {});

struct ManifestEntry {
  std::filesystem::path path;  // resolved against the manifest directory
  Polarity polarity = Polarity::kPositive;
  std::string group;
};

// Lines are "path,polarity[,group]".  Blank lines and lines starting with
// '#' are skipped.  Group defaults to the parent directory name.  Throws
// NotFoundError, FormatError, or InvalidArgumentError for an empty manifest.
std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path);

struct ReportRow {
  std::string group;
  int ok = 0;
  int ko = 0;
  double accuracy_pct = 0.0;  // 100 * ok / (ok + ko), two decimals
};

struct CorpusReport {
  Method method = Method::kOmpd;
  std::vector<ReportRow> rows;  // sorted by group name
  ReportRow total;
  DetectConfig config;
};

struct EvalOptions {
  int jobs = 1;
  // Fail on the first unreadable or undecidable file instead of counting KO.
  bool strict = false;
};

CorpusReport EvalCorpus(const std::vector<ManifestEntry>& entries,
                        const DetectConfig& config = {},
                        const EvalOptions& options = {});
CorpusReport EvalCorpus(const std::filesystem::path& manifest,
                        const DetectConfig& config = {},
                        const EvalOptions& options = {});

// Rounds 100 * ok / (ok + ko) to two decimals; 0 when both are zero.
double AccuracyPercent(int ok, int ko);

std::string FormatReportText(const CorpusReport& report);
// One JSON object per line: a config record, one record per group and a
// total record.
std::string FormatReportJsonLines(const CorpusReport& report);

}  // namespace ompd

#endif  // OMPD_CORPUS_H_

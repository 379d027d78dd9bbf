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

#include "ompd/corpus.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ompd/errors.h"
#include "ompd/wav.h"

namespace ompd {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitFields(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    fields.emplace_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

struct EntryOutcome {
  bool ok = false;
  std::string warning;  // non-empty when the file could not be decided
  std::exception_ptr error;
};

EntryOutcome Evaluate(const ManifestEntry& entry, const DetectConfig& config) {
  EntryOutcome outcome;
  try {
    const FileDetection det = DetectFile(entry.path, config);
    outcome.ok = det.result.label == entry.polarity;
  } catch (const Error& e) {
    outcome.warning = e.what();
    outcome.error = std::current_exception();
  }
  return outcome;
}

std::string FormatFixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string ToString(Method method) {
  switch (method) {
    case Method::kOmpd:
      return "ompd";
    case Method::kPc:
      return "pc";
    case Method::kRps:
      return "rps";
  }
  return "ompd";
}

Method ParseMethod(std::string_view text) {
  if (text == "ompd") return Method::kOmpd;
  if (text == "pc") return Method::kPc;
  if (text == "rps") return Method::kRps;
  throw InvalidArgumentError("unknown method '" + std::string(text) +
                             "' (expected ompd, pc or rps)");
}

PolarityResult DetectSignal(const AudioSignal& signal,
                            const DetectConfig& config) {
  switch (config.method) {
    case Method::kOmpd:
      return DetectPolarityOmpd(signal, config.ompd).result;
    case Method::kPc:
      return PcDetect(signal, config.baseline).result;
    case Method::kRps:
      return RpsDetect(signal, config.baseline).result;
  }
  throw InvalidArgumentError("unknown method");
}

FileDetection DetectFile(const std::filesystem::path& path,
                         const DetectConfig& config) {
  const AudioSignal signal = ReadWav(path);
  return {path, DetectSignal(signal, config)};
}

std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError(path.string() + ": cannot open manifest");
  const std::filesystem::path base = path.parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::vector<std::string> f = SplitFields(text);
    if (line_no == 1 && f.size() >= 2 && f[0] == "path" && f[1] == "polarity") {
      continue;  // header row
    }
    if (f.size() < 2 || f.size() > 3 || f[0].empty()) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected path,polarity[,group]");
    }
    ManifestEntry entry;
    std::filesystem::path p(f[0]);
    entry.path = p.is_absolute() ? p : base / p;
    try {
      entry.polarity = ParsePolarity(f[1]);
    } catch (const InvalidArgumentError& e) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " +
                        e.what());
    }
    entry.group = f.size() == 3 && !f[2].empty()
                      ? f[2]
                      : entry.path.parent_path().filename().string();
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) {
    throw InvalidArgumentError(path.string() + ": manifest has no entries");
  }
  return entries;
}

double AccuracyPercent(int ok, int ko) {
  const int n = ok + ko;
  if (n == 0) return 0.0;
  return std::round(10000.0 * ok / n) / 100.0;
}

CorpusReport EvalCorpus(const std::vector<ManifestEntry>& entries,
                        const DetectConfig& config,
                        const EvalOptions& options) {
  if (entries.empty()) throw InvalidArgumentError("empty corpus");
  if (options.jobs < 1) throw InvalidArgumentError("jobs must be >= 1");

  std::vector<EntryOutcome> outcomes(entries.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> abort{false};
  auto worker = [&] {
    for (size_t i = next++; i < entries.size(); i = next++) {
      if (abort) break;
      outcomes[i] = Evaluate(entries[i], config);
      if (options.strict && outcomes[i].error) abort = true;
    }
  };
  const size_t n_threads =
      std::min(static_cast<size_t>(options.jobs), entries.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // Merge in manifest order so warnings and errors never depend on timing.
  std::map<std::string, ReportRow> groups;
  for (size_t i = 0; i < entries.size(); ++i) {
    const EntryOutcome& o = outcomes[i];
    if (o.error) {
      if (options.strict) std::rethrow_exception(o.error);
      std::cerr << "warning: " << entries[i].path.string()
                << " counted as KO: " << o.warning << "\n";
    }
    ReportRow& row = groups[entries[i].group];
    row.group = entries[i].group;
    (o.ok ? row.ok : row.ko) += 1;
  }

  CorpusReport report;
  report.method = config.method;
  report.config = config;
  report.total.group = "TOTAL";
  for (auto& [name, row] : groups) {
    row.accuracy_pct = AccuracyPercent(row.ok, row.ko);
    report.total.ok += row.ok;
    report.total.ko += row.ko;
    report.rows.push_back(row);
  }
  report.total.accuracy_pct = AccuracyPercent(report.total.ok, report.total.ko);
  return report;
}

CorpusReport EvalCorpus(const std::filesystem::path& manifest,
                        const DetectConfig& config,
                        const EvalOptions& options) {
  return EvalCorpus(ReadManifest(manifest), config, options);
}

std::string FormatReportText(const CorpusReport& report) {
  size_t name_width = std::string("Group").size();
  for (const ReportRow& r : report.rows) {
    name_width = std::max(name_width, r.group.size());
  }
  name_width = std::max(name_width, report.total.group.size());

  std::ostringstream out;
  char buf[256];
  auto emit = [&](const std::string& name, const std::string& ok,
                  const std::string& ko, const std::string& acc) {
    std::snprintf(buf, sizeof(buf), "%-*s  %8s  %8s  %9s\n",
                  static_cast<int>(name_width), name.c_str(), ok.c_str(),
                  ko.c_str(), acc.c_str());
    out << buf;
  };
  out << "Method: " << ToString(report.method) << "\n";
  emit("Group", "OK", "KO", "Acc. (%)");
  for (const ReportRow& r : report.rows) {
    emit(r.group, std::to_string(r.ok), std::to_string(r.ko),
         FormatFixed2(r.accuracy_pct));
  }
  emit(report.total.group, std::to_string(report.total.ok),
       std::to_string(report.total.ko), FormatFixed2(report.total.accuracy_pct));
  return out.str();
}

std::string FormatReportJsonLines(const CorpusReport& report) {
  using nlohmann::ordered_json;
  const DetectConfig& c = report.config;
  ordered_json config = {
      {"record", "config"},
      {"method", ToString(report.method)},
      {"p1", c.ompd.odd_moment.p1},
      {"p2", c.ompd.odd_moment.p2},
      {"shift_low", c.ompd.shift_low},
      {"shift_high", c.ompd.shift_high},
      {"hop_ms", c.ompd.hop_s * 1000.0},
      {"f0_min_hz", c.ompd.pitch.f0_min_hz},
      {"f0_max_hz", c.ompd.pitch.f0_max_hz},
      {"rps_max_freq_hz", c.baseline.rps_max_freq_hz},
  };
  std::string out = config.dump() + "\n";
  auto row_json = [](const char* kind, const ReportRow& r) {
    return ordered_json{{"record", kind},
                        {"group", r.group},
                        {"ok", r.ok},
                        {"ko", r.ko},
                        {"accuracy_pct", r.accuracy_pct}};
  };
  for (const ReportRow& r : report.rows) out += row_json("row", r).dump() + "\n";
  out += row_json("total", report.total).dump() + "\n";
  return out;
}

}  // namespace ompd

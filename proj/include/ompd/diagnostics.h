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

// CSV dumps of the oscillating moments and per-frame phase shifts.

#ifndef OMPD_DIAGNOSTICS_H_
#define OMPD_DIAGNOSTICS_H_

#include <filesystem>
#include <utility>
#include <vector>

#include "ompd/audio.h"
#include "ompd/detector.h"

namespace ompd {

struct DiagnosticsFiles {
  std::filesystem::path moments_csv;
  std::filesystem::path shifts_csv;
  OmpdAnalysis analysis;
};

// Writes <out_dir>/moments.csv with one row per sample
// (time_s,y_1_1,y_1_2[,y_p1_p2...]) and <out_dir>/shifts.csv with one row per
// analysed frame (time_s,phase_shift,vote).  `extra_orders` lists additional
// (p1, p2) pairs, each computed with its default window.  The columns for the
// two detector moments follow the configured orders.
DiagnosticsFiles DumpDiagnostics(
    const AudioSignal& signal, const std::filesystem::path& out_dir,
    const OmpdConfig& config = {},
    const std::vector<std::pair<int, int>>& extra_orders = {});

}  // namespace ompd

#endif  // OMPD_DIAGNOSTICS_H_

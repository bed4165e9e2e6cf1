// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "hse/analysis.hpp"
#include "hse/experiments.hpp"

namespace hse {

/// RFC-4180 CSV with a header row. Fields containing separators or quotes
/// are quoted and escaped; numbers are formatted with %.10g so identical
/// inputs give byte-identical files.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::string to_string() const;
  void write(const std::string& path) const;
};

std::string format_number(double v);

// Column schemas are documented in the README and kept stable.
CsvTable ild_curves_csv(const std::vector<IldCurve>& curves);
CsvTable directivity_csv(const std::vector<int>& angles,
                         const std::vector<std::pair<std::string, std::vector<double>>>&
                             labeled_patterns,
                         double band_lo_hz, double band_hi_hz, const std::string& mode,
                         const std::string& ear);
CsvTable band_snr_csv(const std::vector<BandSnrReport>& reports);
CsvTable localization_csv(const std::vector<std::pair<std::string, LocalizationMetrics>>&
                              labeled_metrics);
CsvTable srt_csv(const std::vector<SrtConditionResult>& results);

/// JSON summary strings (pretty-printed, stable key order). timestamp=false
/// omits the generation time for byte-identical reruns.
std::string localization_summary_json(
    const std::vector<std::pair<std::string, LocalizationMetrics>>& labeled_metrics,
    bool timestamp);
std::string srt_summary_json(const std::vector<SrtConditionResult>& results,
                             bool timestamp);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hse

// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/reports.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace hse {

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

nlohmann::ordered_json metrics_json(const LocalizationMetrics& m) {
  nlohmann::ordered_json j;
  j["mean_rms_error_deg"] = m.mean_rms_error_deg;
  auto& angles = j["per_angle"] = nlohmann::ordered_json::array();
  for (const auto& a : m.per_angle) {
    nlohmann::ordered_json e;
    e["target_deg"] = a.target_deg;
    e["bias_deg"] = a.bias_deg;
    if (std::isnan(a.std_deg)) {
      e["std_deg"] = nullptr;  // single-trial sentinel
    } else {
      e["std_deg"] = a.std_deg;
    }
    e["rms_error_deg"] = a.rms_error_deg;
    e["n_trials"] = a.n_trials;
    angles.push_back(std::move(e));
  }
  return j;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw ParamError("CSV row width mismatch");
  rows.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(header[i]);
  }
  out += "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(row[i]);
    }
    out += "\r\n";
  }
  return out;
}

void CsvTable::write(const std::string& path) const {
  write_text_file(path, to_string());
}

CsvTable ild_curves_csv(const std::vector<IldCurve>& curves) {
  CsvTable t;
  t.header = {"processing", "angle_deg", "ild_db"};
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.angles_deg.size(); ++i) {
      t.add_row({c.processing, std::to_string(c.angles_deg[i]), format_number(c.ild_db[i])});
    }
  }
  return t;
}

CsvTable directivity_csv(const std::vector<int>& angles,
                         const std::vector<std::pair<std::string, std::vector<double>>>&
                             labeled_patterns,
                         double band_lo_hz, double band_hi_hz, const std::string& mode,
                         const std::string& ear) {
  CsvTable t;
  t.header = {"mode", "ear", "processing", "band_lo_hz", "band_hi_hz", "angle_deg", "gain_db"};
  for (const auto& [label, gains] : labeled_patterns) {
    if (gains.size() != angles.size()) throw ParamError("directivity pattern size mismatch");
    for (std::size_t i = 0; i < angles.size(); ++i) {
      t.add_row({mode, ear, label, format_number(band_lo_hz), format_number(band_hi_hz),
                 std::to_string(angles[i]), format_number(gains[i])});
    }
  }
  return t;
}

CsvTable band_snr_csv(const std::vector<BandSnrReport>& reports) {
  CsvTable t;
  t.header = {"condition", "processing", "ear", "band_center_hz", "snr_db"};
  for (const auto& r : reports) {
    for (Side ear : {Side::Left, Side::Right}) {
      for (std::size_t b = 0; b < r.band_centers_hz.size(); ++b) {
        t.add_row({r.condition, r.processing, side_name(ear),
                   format_number(r.band_centers_hz[b]), format_number(r.ear(ear)[b])});
      }
    }
  }
  return t;
}

CsvTable localization_csv(
    const std::vector<std::pair<std::string, LocalizationMetrics>>& labeled_metrics) {
  CsvTable t;
  t.header = {"processing", "angle_deg", "bias_deg", "std_deg", "rms_error_deg", "n_trials"};
  for (const auto& [label, m] : labeled_metrics) {
    for (const auto& a : m.per_angle) {
      t.add_row({label, std::to_string(a.target_deg), format_number(a.bias_deg),
                 format_number(a.std_deg), format_number(a.rms_error_deg),
                 std::to_string(a.n_trials)});
    }
  }
  return t;
}

CsvTable srt_csv(const std::vector<SrtConditionResult>& results) {
  CsvTable t;
  t.header = {"condition", "processing", "run", "srt_db"};
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.runs_natural_db.size(); ++i) {
      t.add_row({r.condition, "natural", std::to_string(i), format_number(r.runs_natural_db[i])});
    }
    for (std::size_t i = 0; i < r.runs_enhanced_db.size(); ++i) {
      t.add_row({r.condition, "enhanced", std::to_string(i), format_number(r.runs_enhanced_db[i])});
    }
  }
  return t;
}

std::string localization_summary_json(
    const std::vector<std::pair<std::string, LocalizationMetrics>>& labeled_metrics,
    bool timestamp) {
  nlohmann::ordered_json j;
  if (timestamp) j["generated_at"] = iso_timestamp();
  for (const auto& [label, m] : labeled_metrics) j[label] = metrics_json(m);
  return j.dump(2) + "\n";
}

std::string srt_summary_json(const std::vector<SrtConditionResult>& results, bool timestamp) {
  nlohmann::ordered_json j;
  if (timestamp) j["generated_at"] = iso_timestamp();
  auto& conditions = j["conditions"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["condition"] = r.condition;
    e["mean_srt_natural_db"] = r.mean_srt_natural_db;
    e["mean_srt_enhanced_db"] = r.mean_srt_enhanced_db;
    e["improvement_db"] = r.improvement_db;
    e["effective_offset_natural_db"] = r.offset_natural_db;
    e["effective_offset_enhanced_db"] = r.offset_enhanced_db;
    e["runs"] = r.runs_natural_db.size();
    conditions.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot create file: " + path);
  out << content;
  if (!out) throw DataError("failed writing file: " + path);
}

}  // namespace hse

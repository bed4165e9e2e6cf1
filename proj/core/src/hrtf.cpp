// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/hrtf.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "hse/dsp.hpp"
#include "hse/signal.hpp"
#include "hse/wav.hpp"

namespace hse {

namespace {

double wrap_degrees(double deg) {
  while (deg >= 180.0) deg -= 360.0;
  while (deg < -180.0) deg += 360.0;
  return deg;
}

/// Angle between the source direction and an ear axis, in [0, 180].
double incidence_deg(double azimuth_deg, Side ear) {
  const double ear_az = ear == Side::Right ? 90.0 : -90.0;
  return std::abs(wrap_degrees(azimuth_deg - ear_az));
}

double ear_delay_s(double inc_deg, const HrtfParams& p) {
  const double ac = p.head_radius_m / p.speed_of_sound;
  if (inc_deg <= 90.0) {
    return ac * (1.0 - std::cos(inc_deg * kPi / 180.0));
  }
  return ac * (1.0 + (inc_deg - 90.0) * kPi / 180.0);
}

double shadow_alpha(double inc_deg, const HrtfParams& p) {
  double a = 0.5 * (p.alpha_ipsi + p.alpha_contra) +
             0.5 * (p.alpha_ipsi - p.alpha_contra) * std::cos(inc_deg * kPi / 180.0);
  if (p.bright_spot && inc_deg < p.bright_spot_width_deg) {
    a -= p.bright_spot_droop * (1.0 - inc_deg / p.bright_spot_width_deg);
  }
  return a;
}

FirFilter ear_ir(double inc_deg, double sample_rate, const HrtfParams& p) {
  const double alpha = shadow_alpha(inc_deg, p);
  const double w0 = 2.0 * kPi * p.shadow_corner_hz;
  // The shelf's low-frequency group delay is (1 - alpha)/w0; adding alpha/w0
  // makes the total filter delay alpha-independent, so the interaural time
  // difference follows the Woodworth arrival times exactly in the low band.
  const double delay = p.lead_time_s + ear_delay_s(inc_deg, p) + alpha / w0;
  SampleBuffer ir = make_impulse(sample_rate, p.ir_length);
  ir = fractional_delay_same(ir, delay);
  const IirFilter shadow = design_pole_zero_shelf(alpha, p.shadow_corner_hz, sample_rate);
  ir = shadow.apply(ir);
  FirFilter out;
  out.sample_rate = sample_rate;
  out.taps = std::move(ir.samples);
  return out;
}

std::string angle_ear_name(int angle, Side ear) {
  return (angle >= 0 ? "+" + std::to_string(angle) : std::to_string(angle)) + "/" +
         side_name(ear);
}

std::vector<double> read_raw_f32(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open raw IR file: " + path);
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() % 4 != 0) throw DataError("raw f32 file has odd size: " + path);
  std::vector<double> out(bytes.size() / 4);
  for (std::size_t i = 0; i < out.size(); ++i) {
    float f;
    std::memcpy(&f, bytes.data() + 4 * i, 4);
    out[i] = static_cast<double>(f);
  }
  return out;
}

}  // namespace

std::vector<int> standard_angles() {
  std::vector<int> a;
  for (int deg = -90; deg <= 90; deg += 15) a.push_back(deg);
  return a;
}

std::vector<int> full_circle_angles() {
  std::vector<int> a;
  for (int deg = -180; deg < 180; deg += 15) a.push_back(deg);
  return a;
}

void HrtfSet::insert(int angle_deg, FirFilter left, FirFilter right) {
  if (left.sample_rate != sample_rate_ || right.sample_rate != sample_rate_) {
    throw ParamError("HRTF IR sample rate does not match the set");
  }
  irs_[angle_deg] = {std::move(left), std::move(right)};
}

const std::pair<FirFilter, FirFilter>& HrtfSet::at(int angle_deg) const {
  auto it = irs_.find(angle_deg);
  if (it == irs_.end()) {
    throw ParamError("HRTF set has no angle " + std::to_string(angle_deg));
  }
  return it->second;
}

const FirFilter& HrtfSet::ear_ir(int angle_deg, Side ear) const {
  const auto& pair = at(angle_deg);
  return ear == Side::Left ? pair.first : pair.second;
}

std::vector<int> HrtfSet::angles() const {
  std::vector<int> out;
  out.reserve(irs_.size());
  for (const auto& [angle, _] : irs_) out.push_back(angle);
  return out;
}

std::size_t HrtfSet::max_ir_length() const {
  std::size_t m = 0;
  for (const auto& [_, pair] : irs_) {
    m = std::max({m, pair.first.size(), pair.second.size()});
  }
  return m;
}

HrtfParams device_matched_head(double mic_spacing_m) {
  HrtfParams p;
  p.head_radius_m = mic_spacing_m / (1.0 + kPi / 2.0);
  return p;
}

std::pair<FirFilter, FirFilter> synth_spherical_hrtf(double azimuth_deg,
                                                     double sample_rate,
                                                     const HrtfParams& params) {
  if (azimuth_deg < -180.0 || azimuth_deg >= 180.0) {
    throw ParamError("azimuth must lie in [-180, 180)");
  }
  if (params.head_radius_m <= 0.0) throw ParamError("head radius must be positive");
  return {ear_ir(incidence_deg(azimuth_deg, Side::Left), sample_rate, params),
          ear_ir(incidence_deg(azimuth_deg, Side::Right), sample_rate, params)};
}

HrtfSet make_synthetic_hrtf_set(double sample_rate, const HrtfParams& params,
                                const std::vector<int>& angles) {
  HrtfSet set(sample_rate, HrtfSet::Source::Synthetic);
  for (int angle : angles) {
    auto [left, right] = synth_spherical_hrtf(angle, sample_rate, params);
    set.insert(angle, std::move(left), std::move(right));
  }
  return set;
}

HrtfSet load_hrtf_set(const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  if (!fs::is_directory(dir)) throw DataError("not a directory: " + directory);

  std::vector<int> angles = standard_angles();
  double manifest_rate = 0.0;
  bool raw_format = false;

  const fs::path manifest = dir / "manifest.json";
  if (fs::exists(manifest)) {
    std::ifstream in(manifest);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw ParamError("malformed manifest.json: " + std::string(e.what()));
    }
    if (j.contains("angles")) angles = j["angles"].get<std::vector<int>>();
    if (j.contains("sample_rate")) manifest_rate = j["sample_rate"].get<double>();
    if (j.contains("format")) {
      const auto f = j["format"].get<std::string>();
      if (f == "raw_f32") {
        raw_format = true;
      } else if (f != "wav") {
        throw ParamError("manifest format must be \"wav\" or \"raw_f32\", got " + f);
      }
    }
  }
  if (raw_format && manifest_rate <= 0.0) {
    throw ParamError("raw_f32 HRTF sets need a sample_rate in manifest.json");
  }

  // every frontal-arc angle is required even when the manifest lists more
  std::vector<int> missing;
  for (int a : standard_angles()) {
    if (std::find(angles.begin(), angles.end(), a) == angles.end()) missing.push_back(a);
  }
  if (!missing.empty()) {
    std::string msg = "manifest omits required angles:";
    for (int a : missing) msg += " " + std::to_string(a);
    throw ParamError(msg);
  }

  double rate = manifest_rate;
  std::map<int, std::pair<FirFilter, FirFilter>> loaded;
  std::vector<std::string> absent;

  for (int angle : angles) {
    FirFilter ears[2];
    bool have[2] = {false, false};
    for (Side ear : {Side::Left, Side::Right}) {
      const std::string stem =
          "az" + std::to_string(angle) + "_" + (ear == Side::Left ? "L" : "R");
      const fs::path wav_path = dir / (stem + ".wav");
      const fs::path raw_path = dir / (stem + ".raw");
      FirFilter ir;
      if (!raw_format && fs::exists(wav_path)) {
        const SampleBuffer buf = read_wav_mono(wav_path.string());
        ir.taps = buf.samples;
        ir.sample_rate = buf.sample_rate;
      } else if (fs::exists(raw_path)) {
        if (manifest_rate <= 0.0) {
          throw ParamError("raw IR files need a sample_rate in manifest.json");
        }
        ir.taps = read_raw_f32(raw_path.string());
        ir.sample_rate = manifest_rate;
      } else {
        absent.push_back(angle_ear_name(angle, ear));
        continue;
      }
      if (rate <= 0.0) rate = ir.sample_rate;
      if (ir.sample_rate != rate) {
        throw ParamError("sample-rate mismatch: " + angle_ear_name(angle, ear) + " has " +
                         std::to_string(ir.sample_rate) + " Hz, set has " +
                         std::to_string(rate) + " Hz");
      }
      ears[ear == Side::Left ? 0 : 1] = std::move(ir);
      have[ear == Side::Left ? 0 : 1] = true;
    }
    if (have[0] && have[1]) loaded[angle] = {std::move(ears[0]), std::move(ears[1])};
  }

  if (!absent.empty()) {
    std::string msg = "HRTF set is missing:";
    for (const auto& s : absent) msg += " " + s;
    throw ParamError(msg);
  }

  HrtfSet set(rate, HrtfSet::Source::Imported);
  for (auto& [angle, pair] : loaded) {
    set.insert(angle, std::move(pair.first), std::move(pair.second));
  }
  return set;
}

FirFilter truncate_ir(const FirFilter& ir, double window_s) {
  if (ir.taps.empty()) throw DataError("truncate_ir: empty impulse response");
  std::size_t peak = 0;
  double peak_mag = 0.0;
  for (std::size_t i = 0; i < ir.taps.size(); ++i) {
    const double m = std::abs(ir.taps[i]);
    if (m > peak_mag) {
      peak_mag = m;
      peak = i;
    }
  }
  if (peak_mag == 0.0) throw DataError("truncate_ir: all-zero impulse response");

  const auto window = static_cast<std::size_t>(std::llround(window_s * ir.sample_rate));
  const std::size_t keep = peak + window + 1;
  if (keep >= ir.taps.size()) return ir;

  FirFilter out;
  out.sample_rate = ir.sample_rate;
  out.taps.assign(ir.taps.begin(), ir.taps.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

HrtfSet truncate_set(const HrtfSet& set, double window_s) {
  HrtfSet out(set.sample_rate(), set.source());
  for (int angle : set.angles()) {
    const auto& pair = set.at(angle);
    out.insert(angle, truncate_ir(pair.first, window_s), truncate_ir(pair.second, window_s));
  }
  out.set_truncated(true);
  return out;
}

}  // namespace hse

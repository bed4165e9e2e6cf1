// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hse/dsp.hpp"

namespace hse {

std::vector<double> third_octave_centers() {
  return {125.0,  160.0,  200.0,  250.0,  315.0,  400.0,  500.0,
          630.0,  800.0,  1000.0, 1250.0, 1600.0, 2000.0, 2500.0,
          3150.0, 4000.0, 5000.0, 6300.0, 8000.0};
}

std::vector<double> third_octave_edges(const std::vector<double>& centers) {
  if (centers.empty()) throw ParamError("third_octave_edges: no centers");
  const double half = std::pow(2.0, 1.0 / 6.0);
  std::vector<double> edges;
  edges.reserve(centers.size() + 1);
  edges.push_back(centers.front() / half);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    edges.push_back(centers[i] * half);
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) {
      throw ParamError("third_octave_edges: centers must be increasing");
    }
  }
  return edges;
}

double broadband_ild(const BinauralBuffer& x) {
  x.validate();
  if (x.left.empty()) throw ParamError("broadband_ild: empty channels");
  return rms_level_db(x.right) - rms_level_db(x.left);
}

double IldCurve::ild_at(int angle_deg) const {
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    if (angles_deg[i] == angle_deg) return ild_db[i];
  }
  throw ParamError("ILD curve has no angle " + std::to_string(angle_deg));
}

bool IldCurve::strictly_monotonic() const {
  if (ild_db.size() < 2) return true;
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < ild_db.size(); ++i) {
    if (!(ild_db[i] > ild_db[i - 1])) inc = false;
    if (!(ild_db[i] < ild_db[i - 1])) dec = false;
  }
  return inc || dec;
}

double IldCurve::range_db() const {
  if (ild_db.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(ild_db.begin(), ild_db.end());
  return *hi - *lo;
}

IldCurve ild_curve(const SampleBuffer& stimulus, const HrtfSet& hrtfs,
                   const Chain& chain, const std::vector<int>& angles,
                   bool measure_pre_bimodal) {
  IldCurve curve;
  curve.processing = chain.label();
  curve.stimulus = "stimulus";
  curve.angles_deg = angles;
  curve.ild_db.reserve(angles.size());
  for (int angle : angles) {
    const BinauralBuffer rendered =
        render_scene(single_source_scene(angle, stimulus), hrtfs);
    const BinauralBuffer processed =
        measure_pre_bimodal ? chain.process_linear(rendered) : chain.process(rendered);
    curve.ild_db.push_back(broadband_ild(processed));
  }
  return curve;
}

BandSnrReport band_snr(const Scene& speech_scene, const Scene& noise_scene,
                       const HrtfSet& hrtfs, const Chain& chain,
                       const std::vector<double>& band_edges_hz) {
  if (speech_scene.sources.empty() || noise_scene.sources.empty()) {
    throw ParamError("band_snr: empty scene");
  }

  const BinauralBuffer speech = chain.process_linear(render_scene(speech_scene, hrtfs));
  const BinauralBuffer noise = chain.process_linear(render_scene(noise_scene, hrtfs));

  BandSnrReport report;
  report.condition = noise_scene.label;
  report.processing = chain.label();
  report.band_centers_hz.reserve(band_edges_hz.size() - 1);
  for (std::size_t i = 0; i + 1 < band_edges_hz.size(); ++i) {
    report.band_centers_hz.push_back(std::sqrt(band_edges_hz[i] * band_edges_hz[i + 1]));
  }

  for (Side ear : {Side::Left, Side::Right}) {
    const std::vector<double> ps = band_powers(speech.channel(ear), band_edges_hz);
    const std::vector<double> pn = band_powers(noise.channel(ear), band_edges_hz);
    auto& dst = ear == Side::Left ? report.snr_left_db : report.snr_right_db;
    dst.resize(ps.size());
    for (std::size_t b = 0; b < ps.size(); ++b) dst[b] = ps[b] - pn[b];
  }
  return report;
}

LocalizationMetrics localization_metrics(
    const std::vector<std::pair<double, double>>& target_response_pairs) {
  if (target_response_pairs.empty()) {
    throw ParamError("localization_metrics: no trials");
  }

  std::map<double, std::vector<double>> by_target;
  for (const auto& [target, response] : target_response_pairs) {
    by_target[target].push_back(response);
  }

  LocalizationMetrics out;
  double rms_sum = 0.0;
  for (const auto& [target, responses] : by_target) {
    AngleMetrics m;
    m.target_deg = static_cast<int>(std::lround(target));
    m.n_trials = static_cast<int>(responses.size());

    const double n = static_cast<double>(responses.size());
    double mean = 0.0;
    for (double r : responses) mean += r;
    mean /= n;

    m.bias_deg = std::abs(mean - target);

    double ss_mean = 0.0, ss_target = 0.0;
    for (double r : responses) {
      ss_mean += (r - mean) * (r - mean);
      ss_target += (r - target) * (r - target);
    }
    m.std_deg = responses.size() >= 2 ? std::sqrt(ss_mean / (n - 1.0))
                                      : std::numeric_limits<double>::quiet_NaN();
    m.rms_error_deg = std::sqrt(ss_target / n);

    rms_sum += m.rms_error_deg;
    out.per_angle.push_back(m);
  }
  out.mean_rms_error_deg = rms_sum / static_cast<double>(out.per_angle.size());
  return out;
}

}  // namespace hse

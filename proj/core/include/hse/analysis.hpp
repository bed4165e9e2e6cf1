// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "hse/chain.hpp"
#include "hse/hrtf.hpp"
#include "hse/scene.hpp"
#include "hse/types.hpp"

namespace hse {

/// 1/3-octave band centers 125 Hz .. 8 kHz (19 bands, nominal values).
std::vector<double> third_octave_centers();

/// Band edges for the given centers (center * 2^{+-1/6}), returned as a flat
/// strictly increasing edge list usable with band_powers.
std::vector<double> third_octave_edges(const std::vector<double>& centers);

/// Broadband interaural level difference, right minus left, in dB.
/// A silent channel propagates the -inf sentinel.
double broadband_ild(const BinauralBuffer& x);

struct IldCurve {
  std::vector<int> angles_deg;
  std::vector<double> ild_db;
  std::string processing;  // "natural" | "enhanced"
  std::string stimulus;

  double ild_at(int angle_deg) const;
  bool strictly_monotonic() const;
  double range_db() const;  // max - min
};

/// ILD versus angle for a single source: render, process through the chain,
/// measure. measure_pre_bimodal measures after the beamformer instead of
/// after the bimodal simulation.
IldCurve ild_curve(const SampleBuffer& stimulus, const HrtfSet& hrtfs,
                   const Chain& chain, const std::vector<int>& angles,
                   bool measure_pre_bimodal = false);

struct BandSnrReport {
  std::vector<double> band_centers_hz;
  std::vector<double> snr_left_db;
  std::vector<double> snr_right_db;
  std::string condition;   // S0NCI | S0NHA | S0N360
  std::string processing;  // natural | enhanced

  const std::vector<double>& ear(Side s) const {
    return s == Side::Left ? snr_left_db : snr_right_db;
  }
};

/// Per-ear per-band SNR for spatially separated speech and noise scenes.
/// Speech-only and noise-only renders go through identical chain instances
/// (same seeds); SNR per band is band power of speech minus band power of
/// noise, measured after the beamformer and before the bimodal simulation.
BandSnrReport band_snr(const Scene& speech_scene, const Scene& noise_scene,
                       const HrtfSet& hrtfs, const Chain& chain,
                       const std::vector<double>& band_edges_hz);

struct AngleMetrics {
  int target_deg = 0;
  double bias_deg = 0.0;  // |mean response - target|
  double std_deg = 0.0;   // sample standard deviation (n-1); NaN for n < 2
  double rms_error_deg = 0.0;
  int n_trials = 0;
};

struct LocalizationMetrics {
  std::vector<AngleMetrics> per_angle;
  double mean_rms_error_deg = 0.0;  // mean across angles
};

/// Per-angle response statistics:
///   bias = |mean(response) - target|
///   std  = sqrt(sum (response - mean)^2 / (n-1))
///   rms  = sqrt(sum (response - target)^2 / n)
/// and these satisfy rms^2 = (n-1)/n * std^2 + bias^2.
/// A single trial at an angle leaves std as NaN; rms is still computed.
LocalizationMetrics localization_metrics(
    const std::vector<std::pair<double, double>>& target_response_pairs);

}  // namespace hse

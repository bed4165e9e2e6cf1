// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "hse/hrtf.hpp"
#include "hse/types.hpp"

namespace hse {

/// Per-ear low-frequency delay-and-subtract beamformer with contralateral
/// attenuation. Defaults: 1500 Hz crossover, 20 cm microphone spacing,
/// 340 m/s sound speed, first-order 50 Hz low-frequency boost.
struct BeamformerParams {
  double crossover_hz = 1500.0;
  double mic_spacing_m = 0.20;
  double speed_of_sound = 340.0;
  double boost_cutoff_hz = 50.0;
  int boost_order = 1;
  bool enabled = true;
  std::size_t fir_taps = 511;        // band-split crossover length (odd)
  double normalize_at_hz = 200.0;    // boost gain anchor, see head_shadow_enhance
};

/// Inter-microphone delay tau = spacing / c (588.2 us for the defaults).
double inter_mic_delay_s(const BeamformerParams& p);

/// Frequencies of the nulls in the on-axis (ipsilateral endfire) comb
/// response: k / (2 tau) for k = 1..k_max. [850, 1700, ...] Hz for defaults.
std::vector<double> comb_null_frequencies(const BeamformerParams& p, int k_max);

/// Plane-wave magnitude of the bare delay-and-subtract stage (no boost) at
/// incidence theta (degrees re front, +90 = ipsilateral side):
/// |1 - e^{-jw tau (1+sin theta)}| = 2 |sin(pi f tau (1 + sin theta))|.
double subtractive_gain(const BeamformerParams& p, double freq_hz, double incidence_deg);

/// Head shadow enhancement. Per ear e with contralateral ear c:
///
///   low_e' = g * LP_boost( low_e - delay(low_c, tau) )
///   out_e  = low_e' + high_e
///
/// where (low, high) is the complementary band split at the crossover, tau
/// the inter-microphone delay and LP_boost the DC-normalized boost low-pass.
/// The scalar g anchors the gain so the on-axis (ipsilateral 90 degrees)
/// free-field response at normalize_at_hz matches an unprocessed microphone.
/// Both ears are processed identically, the high band passes through the
/// band-split path untouched, and the output carries the band-split latency
/// of (fir_taps-1)/2 samples. With enabled == false the input is returned
/// unchanged.
BinauralBuffer head_shadow_enhance(const BinauralBuffer& x, const BeamformerParams& p);

/// Free-field two-point-array pickup of a plane wave from azimuth_deg: each
/// microphone receives the source delayed by its position along the
/// interaural axis (plus a common tau/2 so delays stay causal).
BinauralBuffer freefield_plane_wave(const SampleBuffer& source, double azimuth_deg,
                                    const BeamformerParams& p);

enum class DirectivityMode { FreeField, Hrtf };

struct DirectivityRequest {
  double band_lo_hz = 100.0;
  double band_hi_hz = 1500.0;
  std::vector<int> angles = standard_angles();
  DirectivityMode mode = DirectivityMode::FreeField;
  const HrtfSet* hrtfs = nullptr;  // required in Hrtf mode
  Side ear = Side::Right;
  bool enhanced = true;  // false: measure the unprocessed pickup
  double noise_dur_s = 4.0;
  std::uint64_t seed = 1;
};

/// Band power of white noise arriving from each angle, processed (or not)
/// with head_shadow_enhance, relative to the unprocessed frontal (0 degree)
/// reference. Deterministic given the seed.
std::vector<double> directivity_pattern(const BeamformerParams& p,
                                        const DirectivityRequest& req);

}  // namespace hse

// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hse/filters.hpp"
#include "hse/types.hpp"

namespace hse {

/// The 13-loudspeaker frontal arc: -90..+90 in 15 degree steps.
std::vector<int> standard_angles();

/// Full circle in 15 degree steps: -180..+165 (24 angles).
std::vector<int> full_circle_angles();

/// Parameters of the synthetic spherical-head model.
///
/// Each ear's impulse response is a fractional delay (Woodworth arrival time)
/// cascaded with a first-order pole-zero shadow filter, unity at DC:
///
///   delay(inc)  = a/c * (1 - cos inc)            for inc <= 90 deg
///               = a/c * (1 + inc_rad - pi/2)     for inc  > 90 deg
///   H(s)        = (1 + alpha(inc) s/w0) / (1 + s/w0)
///   alpha(inc)  = (ai + ac)/2 + (ai - ac)/2 * cos(inc)
///
/// where inc is the angle between the source and the ear axis, a the head
/// radius, c the speed of sound, ai/ac the ipsilateral/contralateral
/// high-frequency gains (+6 dB and about -8 dB by default) and w0 the shadow
/// corner. Each ear also gets an extra alpha(inc)/w0 of delay, cancelling the
/// shelf's low-frequency group delay of (1 - alpha)/w0 so the low-band
/// interaural time difference follows the Woodworth arrival times exactly;
/// at +/-90 degrees it is a/c * (1 + pi/2).
///
/// With bright_spot enabled, the near ear's high-frequency gain droops for
/// incidence angles below bright_spot_width_deg, emulating the measured
/// non-monotonic ILD-versus-angle behavior of real heads at extreme angles.
struct HrtfParams {
  double head_radius_m = 0.0875;
  double speed_of_sound = 340.0;
  double shadow_corner_hz = 2000.0;
  double alpha_ipsi = 2.0;    // +6 dB at high frequencies
  double alpha_contra = 0.4;  // about -8 dB
  bool bright_spot = false;
  double bright_spot_droop = 0.6;
  double bright_spot_width_deg = 20.0;
  double lead_time_s = 0.001;  // causal padding before the first arrival
  std::size_t ir_length = 256;
};

class HrtfSet {
 public:
  enum class Source { Synthetic, Imported };

  HrtfSet() = default;
  HrtfSet(double sample_rate, Source source)
      : sample_rate_(sample_rate), source_(source) {}

  void insert(int angle_deg, FirFilter left, FirFilter right);

  bool has(int angle_deg) const { return irs_.count(angle_deg) != 0; }
  /// Throws ParamError naming the angle if absent.
  const std::pair<FirFilter, FirFilter>& at(int angle_deg) const;
  const FirFilter& ear_ir(int angle_deg, Side ear) const;

  std::vector<int> angles() const;
  std::size_t size() const { return irs_.size(); }
  std::size_t max_ir_length() const;

  double sample_rate() const { return sample_rate_; }
  Source source() const { return source_; }
  bool truncated() const { return truncated_; }
  void set_truncated(bool t) { truncated_ = t; }

 private:
  std::map<int, std::pair<FirFilter, FirFilter>> irs_;
  double sample_rate_ = kDefaultSampleRate;
  Source source_ = Source::Synthetic;
  bool truncated_ = false;
};

/// Head parameters whose Woodworth interaural delay at +-90 degrees equals
/// the electronic inter-microphone delay of a device with the given spacing
/// (radius = spacing / (1 + pi/2)). With a matched head the beamformer's
/// deepest cancellation sits at the edge of the measurement arc, which keeps
/// enhanced ILD curves monotonic out to +-90 degrees; the figure-reproduction
/// presets use this head.
HrtfParams device_matched_head(double mic_spacing_m = 0.20);

/// One ear pair of the spherical-head model. azimuth in [-180, 180).
std::pair<FirFilter, FirFilter> synth_spherical_hrtf(double azimuth_deg,
                                                     double sample_rate,
                                                     const HrtfParams& params = {});

/// Synthetic set over the given angles (full circle by default). Synthetic
/// sets are left/right symmetric tap for tap: left(theta) == right(-theta).
HrtfSet make_synthetic_hrtf_set(double sample_rate, const HrtfParams& params = {},
                                const std::vector<int>& angles = full_circle_angles());

/// Loads a measured set from a directory of per-angle mono files named
/// az{angle}_{L|R}.wav (signed integer degrees), e.g. az-45_L.wav. A
/// manifest.json may override the convention with keys:
///   "angles": [..]          angle list (default: -90..90 step 15)
///   "sample_rate": N        required for raw files
///   "format": "wav"|"raw_f32"   raw files are headerless little-endian f32
/// All 13 frontal-arc angles must be present for both ears and all files must
/// share one sample rate; errors name exactly what is missing.
HrtfSet load_hrtf_set(const std::string& directory);

/// Keeps taps from the start through round(window_s * fs) samples past the
/// highest-magnitude tap; anything later (room reflections) is dropped.
/// Leading samples are preserved. IRs already short enough are returned
/// unchanged. All-zero IRs raise DataError.
FirFilter truncate_ir(const FirFilter& ir, double window_s = 0.002);

/// Truncates every IR in the set.
HrtfSet truncate_set(const HrtfSet& set, double window_s = 0.002);

}  // namespace hse

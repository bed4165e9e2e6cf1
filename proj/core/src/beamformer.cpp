// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/beamformer.hpp"

#include <cmath>

#include "hse/dsp.hpp"
#include "hse/scene.hpp"
#include "hse/signal.hpp"

namespace hse {

double inter_mic_delay_s(const BeamformerParams& p) {
  if (p.mic_spacing_m <= 0.0 || p.speed_of_sound <= 0.0) {
    throw ParamError("mic spacing and sound speed must be positive");
  }
  return p.mic_spacing_m / p.speed_of_sound;
}

std::vector<double> comb_null_frequencies(const BeamformerParams& p, int k_max) {
  if (k_max < 1) throw ParamError("k_max must be >= 1");
  const double tau = inter_mic_delay_s(p);
  std::vector<double> nulls;
  nulls.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    nulls.push_back(static_cast<double>(k) / (2.0 * tau));
  }
  return nulls;
}

double subtractive_gain(const BeamformerParams& p, double freq_hz, double incidence_deg) {
  const double tau = inter_mic_delay_s(p);
  const double s = std::sin(incidence_deg * kPi / 180.0);
  return 2.0 * std::abs(std::sin(kPi * freq_hz * tau * (1.0 + s)));
}

namespace {

// On-axis anchor for the boost gain: unity response at normalize_at_hz for a
// plane wave from the ipsilateral side.
double boost_scalar(const BeamformerParams& p, const IirFilter& boost) {
  const double on_axis = subtractive_gain(p, p.normalize_at_hz, 90.0);
  const double lp = std::abs(boost.response_at(p.normalize_at_hz));
  if (on_axis * lp <= 0.0) throw ParamError("boost normalization frequency hits a null");
  return 1.0 / (on_axis * lp);
}

}  // namespace

BinauralBuffer head_shadow_enhance(const BinauralBuffer& x, const BeamformerParams& p) {
  x.validate();
  if (!p.enabled) return x;

  const double fs = x.sample_rate();
  const double tau = inter_mic_delay_s(p);
  const IirFilter boost = design_butterworth_lowpass(p.boost_order, p.boost_cutoff_hz, fs);
  const double g = boost_scalar(p, boost);

  const BandSplit left = band_split(x.left, p.crossover_hz, p.fir_taps);
  const BandSplit right = band_split(x.right, p.crossover_hz, p.fir_taps);

  BinauralBuffer out;
  for (Side ear : {Side::Left, Side::Right}) {
    const BandSplit& own = ear == Side::Left ? left : right;
    const BandSplit& contra = ear == Side::Left ? right : left;

    const SampleBuffer delayed_contra = fractional_delay_same(contra.low, tau);
    SampleBuffer sub = SampleBuffer::zeros(fs, own.low.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
      sub.samples[i] = own.low.samples[i] - delayed_contra.samples[i];
    }

    SampleBuffer boosted = boost.apply(sub);
    auto& dst = out.channel(ear);
    dst = SampleBuffer::zeros(fs, own.low.size());
    for (std::size_t i = 0; i < dst.size(); ++i) {
      dst.samples[i] = g * boosted.samples[i] + own.high.samples[i];
    }
  }
  return out;
}

BinauralBuffer freefield_plane_wave(const SampleBuffer& source, double azimuth_deg,
                                    const BeamformerParams& p) {
  const double tau = inter_mic_delay_s(p);
  const double s = std::sin(azimuth_deg * kPi / 180.0);
  // right mic leads for sources on the right; offset by tau/2 to stay causal
  const double delay_right = 0.5 * tau * (1.0 - s);
  const double delay_left = 0.5 * tau * (1.0 + s);

  BinauralBuffer out;
  out.left = fractional_delay_same(source, delay_left);
  out.right = fractional_delay_same(source, delay_right);
  return out;
}

std::vector<double> directivity_pattern(const BeamformerParams& p,
                                        const DirectivityRequest& req) {
  if (req.mode == DirectivityMode::Hrtf && req.hrtfs == nullptr) {
    throw ParamError("directivity_pattern: HRTF mode needs an HrtfSet");
  }

  const double fs = req.mode == DirectivityMode::Hrtf ? req.hrtfs->sample_rate()
                                                      : kDefaultSampleRate;
  const SampleBuffer noise = white_noise(req.noise_dur_s, fs, req.seed, -20.0);

  auto pickup = [&](int angle) {
    if (req.mode == DirectivityMode::FreeField) {
      return freefield_plane_wave(noise, angle, p);
    }
    return render_scene(single_source_scene(angle, noise), *req.hrtfs);
  };

  auto band_level = [&](const BinauralBuffer& b) {
    return band_power_db(b.channel(req.ear), req.band_lo_hz, req.band_hi_hz);
  };

  const double reference = band_level(pickup(0));

  std::vector<double> gains;
  gains.reserve(req.angles.size());
  for (int angle : req.angles) {
    BinauralBuffer in = pickup(angle);
    const BinauralBuffer out = req.enhanced ? head_shadow_enhance(in, p) : std::move(in);
    gains.push_back(band_level(out) - reference);
  }
  return gains;
}

}  // namespace hse

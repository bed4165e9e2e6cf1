// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/signal.hpp"

#include <algorithm>
#include <cmath>

#include "hse/dsp.hpp"
#include "hse/filters.hpp"
#include "hse/rng.hpp"

namespace hse {

SampleBuffer make_tone(double freq_hz, double dur_s, double sample_rate,
                       double amplitude, double phase) {
  const auto n = static_cast<std::size_t>(std::llround(dur_s * sample_rate));
  SampleBuffer x = SampleBuffer::zeros(sample_rate, n);
  const double w = 2.0 * kPi * freq_hz / sample_rate;
  for (std::size_t i = 0; i < n; ++i) {
    x.samples[i] = amplitude * std::sin(w * static_cast<double>(i) + phase);
  }
  return x;
}

SampleBuffer make_impulse(double sample_rate, std::size_t length, std::size_t position) {
  if (position >= length) throw ParamError("impulse position beyond buffer length");
  SampleBuffer x = SampleBuffer::zeros(sample_rate, length);
  x.samples[position] = 1.0;
  return x;
}

SampleBuffer white_noise(double dur_s, double sample_rate, std::uint64_t seed,
                         double rms_db) {
  const auto n = static_cast<std::size_t>(std::llround(dur_s * sample_rate));
  SampleBuffer x = SampleBuffer::zeros(sample_rate, n);
  Rng rng(seed);
  for (auto& v : x.samples) v = rng.gaussian();
  const double r = rms(x);
  if (r > 0.0) {
    const double g = db_to_lin(rms_db) / r;
    for (auto& v : x.samples) v *= g;
  }
  return x;
}

SampleBuffer speech_shaped_noise(double dur_s, double sample_rate,
                                 std::uint64_t seed, double rms_db) {
  SampleBuffer x = white_noise(dur_s, sample_rate, seed, 0.0);
  const IirFilter shape_bp = design_butterworth_bandpass(2, 100.0, 500.0, sample_rate);
  const IirFilter shape_lp = design_butterworth_lowpass(1, 2500.0, sample_rate);
  x = apply_filter(shape_lp, apply_filter(shape_bp, x));
  const double r = rms(x);
  if (r > 0.0) {
    const double g = db_to_lin(rms_db) / r;
    for (auto& v : x.samples) v *= g;
  }
  return x;
}

SampleBuffer with_onset_offset_ramp(const SampleBuffer& x, double ramp_s) {
  if (ramp_s < 0.0) throw ParamError("ramp duration must be non-negative");
  SampleBuffer y = x;
  const auto r = std::min<std::size_t>(
      static_cast<std::size_t>(std::llround(ramp_s * x.sample_rate)), x.size() / 2);
  for (std::size_t i = 0; i < r; ++i) {
    const double g = 0.5 * (1.0 - std::cos(kPi * static_cast<double>(i) /
                                           static_cast<double>(r)));
    y.samples[i] *= g;
    y.samples[y.size() - 1 - i] *= g;
  }
  return y;
}

SampleBuffer scaled(const SampleBuffer& x, double gain_db) {
  SampleBuffer y = x;
  const double g = db_to_lin(gain_db);
  for (auto& v : y.samples) v *= g;
  return y;
}

SampleBuffer mixed(const SampleBuffer& a, const SampleBuffer& b) {
  if (a.sample_rate != b.sample_rate) throw ParamError("mix: sample-rate mismatch");
  SampleBuffer y = SampleBuffer::zeros(a.sample_rate, std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) y.samples[i] += a.samples[i];
  for (std::size_t i = 0; i < b.size(); ++i) y.samples[i] += b.samples[i];
  return y;
}

SampleBuffer localization_stimulus(double sample_rate, std::uint64_t seed) {
  return with_onset_offset_ramp(
      speech_shaped_noise(0.5, sample_rate, seed, kPresentationLevelDbfs), 0.05);
}

}  // namespace hse

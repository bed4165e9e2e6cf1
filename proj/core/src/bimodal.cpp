// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/bimodal.hpp"

#include <cmath>

#include "hse/dsp.hpp"
#include "hse/filters.hpp"
#include "hse/rng.hpp"
#include "hse/signal.hpp"

namespace hse {

std::vector<double> vocoder_channel_edges(const VocoderParams& p) {
  if (p.n_channels < 1) throw ParamError("vocoder needs at least one channel");
  if (!(p.f_low_hz > 0.0) || !(p.f_low_hz < p.f_high_hz)) {
    throw ParamError("vocoder band edges must satisfy 0 < f_low < f_high");
  }
  std::vector<double> edges(static_cast<std::size_t>(p.n_channels) + 1);
  const double ratio = p.f_high_hz / p.f_low_hz;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = p.f_low_hz *
               std::pow(ratio, static_cast<double>(i) / static_cast<double>(p.n_channels));
  }
  return edges;
}

namespace {

// Linear-phase band-pass as the difference of two Kaiser low-passes.
FirFilter fir_bandpass(double lo_hz, double hi_hz, double fs, double transition_hz,
                       double atten_db) {
  const double beta = 0.1102 * (atten_db - 8.7);
  auto taps_needed = static_cast<std::size_t>(
      std::ceil((atten_db - 7.95) / (14.36 * transition_hz) * fs));
  if (taps_needed % 2 == 0) ++taps_needed;
  const FirFilter hi = design_kaiser_lowpass(taps_needed, hi_hz, fs, beta);
  const FirFilter lo = design_kaiser_lowpass(taps_needed, lo_hz, fs, beta);
  FirFilter bp;
  bp.sample_rate = fs;
  bp.taps.resize(taps_needed);
  for (std::size_t i = 0; i < taps_needed; ++i) bp.taps[i] = hi.taps[i] - lo.taps[i];
  return bp;
}

double band_power_linear(const SampleBuffer& x, double lo_hz, double hi_hz) {
  const double db = band_power_db(x, lo_hz, hi_hz);
  return std::isinf(db) ? 0.0 : std::pow(10.0, db / 10.0);
}

}  // namespace

SampleBuffer vocode(const SampleBuffer& x, const VocoderParams& p) {
  if (x.empty()) throw ParamError("vocode: empty input");
  validate_finite(x, "vocode input");
  const double fs = x.sample_rate;
  if (p.f_high_hz >= fs / 2.0) {
    throw ParamError("vocoder f_high must be below Nyquist");
  }

  const std::vector<double> edges = vocoder_channel_edges(p);
  const IirFilter env_lp = design_butterworth_lowpass(p.env_order, p.env_cutoff_hz, fs);

  SampleBuffer out = SampleBuffer::zeros(fs, x.size());
  for (int ch = 0; ch < p.n_channels; ++ch) {
    const double lo = edges[static_cast<std::size_t>(ch)];
    const double hi = edges[static_cast<std::size_t>(ch) + 1];
    const FirFilter bp = fir_bandpass(lo, hi, fs, p.analysis_transition_hz,
                                      p.analysis_stopband_db);

    const SampleBuffer analysis = apply_filter(bp, x, FirLength::Input);
    const double target_power = band_power_linear(x, lo, hi);
    if (target_power <= 0.0) continue;

    SampleBuffer env = analysis;
    for (double& v : env.samples) v = v > 0.0 ? v : 0.0;  // half-wave rectify
    env = env_lp.apply(env);

    SampleBuffer carrier =
        white_noise(x.duration_s(), fs, Rng::derive(p.seed, static_cast<std::uint64_t>(ch)),
                    -10.0);
    carrier.samples.resize(x.size(), 0.0);
    carrier = apply_filter(bp, carrier, FirLength::Input);

    SampleBuffer channel = SampleBuffer::zeros(fs, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      channel.samples[i] = env.samples[i] * carrier.samples[i];
    }

    const double channel_power = band_power_linear(channel, lo, hi);
    if (channel_power > 0.0) {
      const double g = std::sqrt(target_power / channel_power);
      for (std::size_t i = 0; i < x.size(); ++i) {
        out.samples[i] += g * channel.samples[i];
      }
    }
  }
  return out;
}

SampleBuffer hearing_loss_filter(const SampleBuffer& x, const HearingLossParams& p) {
  validate_finite(x, "hearing_loss_filter input");
  const IirFilter lp = design_butterworth_lowpass(p.order, p.cutoff_hz, x.sample_rate);
  return lp.apply(x);
}

BimodalResult simulate_bimodal(const BinauralBuffer& x, Side ci_side,
                               const VocoderParams& voc, const HearingLossParams& hl) {
  x.validate();
  BimodalResult r;
  r.ci_side = ci_side;
  r.out.channel(ci_side) = vocode(x.channel(ci_side), voc);
  r.out.channel(other_side(ci_side)) = hearing_loss_filter(x.channel(other_side(ci_side)), hl);
  return r;
}

}  // namespace hse

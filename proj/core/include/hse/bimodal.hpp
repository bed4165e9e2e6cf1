// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "hse/types.hpp"

namespace hse {

/// Noise-band vocoder configuration. 8 channels for localization work,
/// 5 for the speech experiment; both span 125-8000 Hz log-spaced.
///
/// The analysis/carrier filterbank is a set of linear-phase FIR band-passes
/// (differences of Kaiser-windowed sincs) with the given transition width and
/// stopband depth. Steep FIR skirts keep each channel's power inside its own
/// band; conventional low-order IIR band-passes integrate several percent of
/// a channel's power into the wide log-spaced neighbor bands, which visibly
/// distorts the long-term spectrum of tilted inputs.
struct VocoderParams {
  int n_channels = 8;
  double f_low_hz = 125.0;
  double f_high_hz = 8000.0;
  double env_cutoff_hz = 50.0;
  int env_order = 2;  // envelope smoother order (Butterworth)
  double analysis_transition_hz = 60.0;
  double analysis_stopband_db = 80.0;
  std::uint64_t seed = 1;  // carrier noise seed
};

/// Log-spaced channel edges, n_channels + 1 values from f_low to f_high.
std::vector<double> vocoder_channel_edges(const VocoderParams& p);

/// Noise-band vocoder: per channel, band-pass analysis, half-wave
/// rectification, env_cutoff low-pass, multiplication with a noise carrier
/// band-passed by the same channel filter, and renormalization of the channel
/// output to the input's power inside the analysis band (so the long-term
/// spectrum of the input is preserved). Channels are summed. Deterministic
/// given the seed, and homogeneous: vocode(c*x) == c*vocode(x) for c > 0.
SampleBuffer vocode(const SampleBuffer& x, const VocoderParams& p);

/// Ski-slope hearing loss stand-in: 6th-order 500 Hz Butterworth low-pass
/// (-36 dB/octave above cutoff).
struct HearingLossParams {
  int order = 6;
  double cutoff_hz = 500.0;
};

SampleBuffer hearing_loss_filter(const SampleBuffer& x, const HearingLossParams& p);

struct BimodalResult {
  BinauralBuffer out;
  Side ci_side = Side::Left;
};

/// Bimodal listening simulation: the CI-side channel is vocoded, the other
/// channel gets the hearing-loss low-pass. Raw composition of the standalone
/// operations; presentation-level calibration belongs to the processing
/// chain (see chain.hpp), mirroring a per-condition booth calibration.
BimodalResult simulate_bimodal(const BinauralBuffer& x, Side ci_side,
                               const VocoderParams& voc, const HearingLossParams& hl);

}  // namespace hse

// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "hse/types.hpp"

namespace hse {

SampleBuffer make_tone(double freq_hz, double dur_s, double sample_rate,
                       double amplitude = 1.0, double phase = 0.0);

SampleBuffer make_impulse(double sample_rate, std::size_t length,
                          std::size_t position = 0);

/// Gaussian white noise scaled to the requested RMS level.
SampleBuffer white_noise(double dur_s, double sample_rate, std::uint64_t seed,
                         double rms_db = -20.0);

/// Stationary noise with a speech-like long-term spectrum (female-talker
/// LTASS approximation): flat through the low formant region, -6 dB/octave
/// above ~500 Hz with an extra first-order roll-off above 2.5 kHz, and a
/// 12 dB/octave rise below 100 Hz. Scaled to the requested RMS level.
SampleBuffer speech_shaped_noise(double dur_s, double sample_rate,
                                 std::uint64_t seed, double rms_db = -25.0);

/// Raised-cosine onset/offset ramps of the given duration.
SampleBuffer with_onset_offset_ramp(const SampleBuffer& x, double ramp_s);

SampleBuffer scaled(const SampleBuffer& x, double gain_db);

/// Sum of two buffers (the shorter is zero-padded).
SampleBuffer mixed(const SampleBuffer& a, const SampleBuffer& b);

/// The default localization stimulus: 500 ms of speech-shaped noise with
/// 50 ms raised-cosine on/off ramps (a stand-in for a short spoken word).
SampleBuffer localization_stimulus(double sample_rate, std::uint64_t seed);

}  // namespace hse

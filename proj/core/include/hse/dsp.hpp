// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "hse/filters.hpp"
#include "hse/types.hpp"

namespace hse {

/// IIR filtering; output length equals input length.
SampleBuffer apply_filter(const IirFilter& f, const SampleBuffer& x);

enum class FirLength {
  Full,   // len(x) + taps - 1
  Input,  // trimmed to len(x), keeping the leading samples
};

/// FIR filtering (full linear convolution, optionally trimmed).
SampleBuffer apply_filter(const FirFilter& f, const SampleBuffer& x,
                          FirLength mode = FirLength::Full);

/// Delays x by delay_s seconds: an integer sample shift plus, for fractional
/// parts, a Kaiser-windowed sinc interpolator (half-width 32 taps). The
/// interpolator is transparent well beyond the 0-1500 Hz band this library
/// beamforms in. Output length is len(x) + ceil(delay in samples). A delay of
/// zero or an integral number of samples is a bit-exact shift.
SampleBuffer fractional_delay(const SampleBuffer& x, double delay_s);

/// Like fractional_delay but trims/zero-pads the result to len(x).
SampleBuffer fractional_delay_same(const SampleBuffer& x, double delay_s);

struct BandSplit {
  SampleBuffer low;   // linear-phase FIR low-pass, latency = group_delay samples
  SampleBuffer high;  // delay(x, group_delay) - low; complementary by construction
  std::size_t group_delay = 0;
};

/// Complementary two-band split at crossover_hz. low + high reconstructs the
/// input delayed by group_delay samples exactly (the high band is defined as
/// the difference). fir_taps must be odd; the default gives a ~117 dB stop
/// band with a transition narrow enough for a 1500 Hz crossover at 44.1 kHz.
BandSplit band_split(const SampleBuffer& x, double crossover_hz,
                     std::size_t fir_taps = 511);

enum class ConvolveMethod { Auto, Direct, Fft };

/// Full linear convolution, length len(x) + len(ir) - 1. Direct and FFT
/// paths agree to better than 1e-9 relative error; Auto picks by size.
SampleBuffer convolve(const SampleBuffer& x, const FirFilter& ir,
                      ConvolveMethod method = ConvolveMethod::Auto);

double rms(const SampleBuffer& x);

/// RMS level re digital full scale. Empty or all-zero buffers return -inf.
double rms_level_db(const SampleBuffer& x);

/// Long-term power per band in dB, Welch-averaged magnitude-squared spectrum
/// (Hann window, 4096-point segments, 50% overlap; shorter inputs fall back
/// to a single power-of-two segment). band_edges_hz must be strictly
/// increasing within (0, fs/2]; n+1 edges give n bands. Silent bands return
/// the -inf sentinel. Summing the linear band powers of a partition of the
/// spectrum recovers the total signal power to within ~1% for stationary
/// inputs much longer than one segment.
std::vector<double> band_powers(const SampleBuffer& x,
                                const std::vector<double>& band_edges_hz);

/// Single-band convenience wrapper around band_powers.
double band_power_db(const SampleBuffer& x, double lo_hz, double hi_hz);

/// RMS level of the component at freq_hz (Goertzel projection): a full-scale
/// sine at freq_hz reads -3.01 dB, matching rms_level_db.
double tone_level_db(const SampleBuffer& x, double freq_hz);

}  // namespace hse

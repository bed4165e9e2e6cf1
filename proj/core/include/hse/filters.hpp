// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hse/types.hpp"

namespace hse {

/// One second-order section. First-order sections set b2 = a2 = 0.
struct BiquadSection {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

/// Cascade of biquad sections, applied in transposed direct form II.
class IirFilter {
 public:
  IirFilter() = default;
  IirFilter(std::vector<BiquadSection> sections, double sample_rate,
            int design_order, double cutoff_hz);

  const std::vector<BiquadSection>& sections() const { return sections_; }
  double sample_rate() const { return sample_rate_; }
  int design_order() const { return design_order_; }
  double cutoff_hz() const { return cutoff_hz_; }

  /// Filters x with zero initial state. Output length equals input length.
  SampleBuffer apply(const SampleBuffer& x) const;

  std::complex<double> response_at(double freq_hz) const;
  double magnitude_db(double freq_hz) const;

  std::vector<double> pole_magnitudes() const;
  bool is_stable(double margin = 1e-6) const;

 private:
  std::vector<BiquadSection> sections_;
  double sample_rate_ = kDefaultSampleRate;
  int design_order_ = 0;
  double cutoff_hz_ = 0.0;
};

/// Finite impulse response filter. Linear-phase designs have symmetric taps
/// and a group delay of (taps-1)/2 samples.
struct FirFilter {
  std::vector<double> taps;
  double sample_rate = kDefaultSampleRate;

  std::size_t size() const { return taps.size(); }
  double group_delay_samples() const {
    return taps.empty() ? 0.0 : (static_cast<double>(taps.size()) - 1.0) / 2.0;
  }
  bool is_linear_phase(double tol = 1e-12) const;
};

/// Butterworth low-pass as a cascade of second-order sections (one first-order
/// section for odd orders), bilinear transform with cutoff prewarping.
/// Every section is normalized to exactly unity gain at DC.
/// order must be in 1..8, cutoff in (0, sample_rate/2).
IirFilter design_butterworth_lowpass(int order, double cutoff_hz, double sample_rate);

/// Butterworth band-pass of the given total order (even, 2..8) between lo_hz
/// and hi_hz; realized from the order/2 low-pass prototype via the analog
/// band transform. Sections are normalized to unity gain at the geometric
/// center frequency.
IirFilter design_butterworth_bandpass(int order, double lo_hz, double hi_hz,
                                      double sample_rate);

/// First-order pole-zero shelf: unity gain at DC, |H| -> high_freq_gain far
/// above corner_hz. Continuous-time prototype H(s) = (1 + g*s/w0)/(1 + s/w0).
IirFilter design_pole_zero_shelf(double high_freq_gain, double corner_hz,
                                 double sample_rate);

/// Linear-phase Kaiser-windowed sinc low-pass. taps must be odd so the group
/// delay is an integer number of samples. The -6 dB point sits at cutoff_hz.
FirFilter design_kaiser_lowpass(std::size_t taps, double cutoff_hz,
                                double sample_rate, double beta);

double kaiser_window(double t, double half_width, double beta);

}  // namespace hse

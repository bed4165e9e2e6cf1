// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hse/fft.hpp"

namespace hse {

namespace {

constexpr std::ptrdiff_t kInterpHalfWidth = 32;
constexpr double kInterpBeta = 10.0;

std::vector<double> convolve_direct_raw(const std::vector<double>& x,
                                        const std::vector<double>& h) {
  std::vector<double> y(x.size() + h.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (std::size_t j = 0; j < h.size(); ++j) y[i + j] += xi * h[j];
  }
  return y;
}

std::vector<double> convolve_fft_raw(const std::vector<double>& x,
                                     const std::vector<double>& h) {
  const std::size_t out_len = x.size() + h.size() - 1;
  const std::size_t n = next_pow2(out_len);
  // pack both real sequences into one complex transform
  std::vector<std::complex<double>> z(n, {0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) z[i].real(x[i]);
  for (std::size_t i = 0; i < h.size(); ++i) z[i].imag(h[i]);
  fft_inplace(z, false);

  std::vector<std::complex<double>> prod(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t kr = (n - k) & (n - 1);
    const std::complex<double> zk = z[k];
    const std::complex<double> zkr = std::conj(z[kr]);
    const std::complex<double> xk = 0.5 * (zk + zkr);
    const std::complex<double> hk =
        std::complex<double>(0.0, -0.5) * (zk - zkr);
    prod[k] = xk * hk;
  }
  fft_inplace(prod, true);

  std::vector<double> y(out_len);
  for (std::size_t i = 0; i < out_len; ++i) y[i] = prod[i].real();
  return y;
}

bool all_zero(const std::vector<double>& v) {
  for (double x : v) {
    if (x != 0.0) return false;
  }
  return true;
}

std::vector<double> convolve_raw(const std::vector<double>& x,
                                 const std::vector<double>& h,
                                 ConvolveMethod method) {
  if (x.empty() || h.empty()) return {};
  if (all_zero(x) || all_zero(h)) {
    return std::vector<double>(x.size() + h.size() - 1, 0.0);
  }
  switch (method) {
    case ConvolveMethod::Direct:
      return convolve_direct_raw(x, h);
    case ConvolveMethod::Fft:
      return convolve_fft_raw(x, h);
    case ConvolveMethod::Auto:
    default:
      return (x.size() * h.size() <= (1u << 18)) ? convolve_direct_raw(x, h)
                                                 : convolve_fft_raw(x, h);
  }
}

}  // namespace

SampleBuffer apply_filter(const IirFilter& f, const SampleBuffer& x) {
  validate_finite(x, "apply_filter input");
  return f.apply(x);
}

SampleBuffer apply_filter(const FirFilter& f, const SampleBuffer& x, FirLength mode) {
  validate_finite(x, "apply_filter input");
  if (f.taps.empty()) throw ParamError("FIR filter has no taps");
  SampleBuffer y(x.sample_rate, convolve_raw(x.samples, f.taps, ConvolveMethod::Auto));
  if (mode == FirLength::Input) y.samples.resize(x.size());
  return y;
}

SampleBuffer fractional_delay(const SampleBuffer& x, double delay_s) {
  if (delay_s < 0.0) throw ParamError("delay must be non-negative");
  validate_finite(x, "fractional_delay input");
  if (delay_s == 0.0) return x;

  const double d = delay_s * x.sample_rate;
  const auto n_int = static_cast<std::ptrdiff_t>(std::floor(d));
  double mu = d - static_cast<double>(n_int);

  std::ptrdiff_t shift = n_int;
  if (mu < 1e-9) {
    mu = 0.0;
  } else if (mu > 1.0 - 1e-9) {
    mu = 0.0;
    ++shift;
  }

  const std::size_t out_len = x.size() + static_cast<std::size_t>(shift) + (mu > 0.0 ? 1 : 0);
  SampleBuffer y = SampleBuffer::zeros(x.sample_rate, out_len);

  if (mu == 0.0) {
    std::copy(x.samples.begin(), x.samples.end(),
              y.samples.begin() + shift);
    return y;
  }

  // Kaiser-windowed sinc interpolator around the integer shift, DC-normalized
  // so constants are delayed exactly.
  std::vector<double> taps;
  taps.reserve(2 * kInterpHalfWidth + 2);
  double sum = 0.0;
  for (std::ptrdiff_t j = -kInterpHalfWidth; j <= kInterpHalfWidth + 1; ++j) {
    const double t = static_cast<double>(j) - mu;
    const double s = (t == 0.0) ? 1.0 : std::sin(kPi * t) / (kPi * t);
    const double w = kaiser_window(t, static_cast<double>(kInterpHalfWidth), kInterpBeta);
    taps.push_back(s * w);
    sum += s * w;
  }
  for (double& t : taps) t /= sum;

  const auto n = static_cast<std::ptrdiff_t>(x.size());
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(out_len); ++i) {
    double acc = 0.0;
    for (std::ptrdiff_t j = -kInterpHalfWidth; j <= kInterpHalfWidth + 1; ++j) {
      const std::ptrdiff_t src = i - shift - j;
      if (src < 0 || src >= n) continue;
      acc += x.samples[static_cast<std::size_t>(src)] *
             taps[static_cast<std::size_t>(j + kInterpHalfWidth)];
    }
    y.samples[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

SampleBuffer fractional_delay_same(const SampleBuffer& x, double delay_s) {
  SampleBuffer y = fractional_delay(x, delay_s);
  y.samples.resize(x.size(), 0.0);
  return y;
}

BandSplit band_split(const SampleBuffer& x, double crossover_hz, std::size_t fir_taps) {
  if (x.sample_rate <= 0.0) throw ParamError("sample_rate must be positive");
  if (!(crossover_hz > 0.0) || !(crossover_hz < x.sample_rate / 2.0)) {
    throw ParamError("crossover must lie strictly between 0 and Nyquist");
  }
  validate_finite(x, "band_split input");

  const FirFilter lp = design_kaiser_lowpass(fir_taps, crossover_hz, x.sample_rate, 13.0);
  const std::size_t d = fir_taps / 2;  // integer group delay

  const std::vector<double> full = [&] {
    SampleBuffer tmp(x.sample_rate, {});
    tmp.samples = x.samples;
    return apply_filter(lp, tmp, FirLength::Full).samples;
  }();

  BandSplit out;
  out.group_delay = d;
  out.low = SampleBuffer::zeros(x.sample_rate, x.size());
  out.high = SampleBuffer::zeros(x.sample_rate, x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double low = full[n];  // latency d is built into the convolution
    const double delayed = (n >= d) ? x.samples[n - d] : 0.0;
    out.low.samples[n] = low;
    out.high.samples[n] = delayed - low;
  }
  return out;
}

SampleBuffer convolve(const SampleBuffer& x, const FirFilter& ir, ConvolveMethod method) {
  if (x.sample_rate != ir.sample_rate) {
    throw ParamError("convolve: sample-rate mismatch between signal and impulse response");
  }
  if (ir.taps.empty()) throw ParamError("convolve: empty impulse response");
  validate_finite(x, "convolve input");
  return SampleBuffer(x.sample_rate, convolve_raw(x.samples, ir.taps, method));
}

double rms(const SampleBuffer& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x.samples) acc += v * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

double rms_level_db(const SampleBuffer& x) {
  return lin_to_db(rms(x));
}

std::vector<double> band_powers(const SampleBuffer& x,
                                const std::vector<double>& band_edges_hz) {
  const double nyquist = x.sample_rate / 2.0;
  if (band_edges_hz.size() < 2) throw ParamError("band_powers: need at least two edges");
  for (std::size_t i = 0; i < band_edges_hz.size(); ++i) {
    if (!(band_edges_hz[i] > 0.0) || band_edges_hz[i] > nyquist) {
      throw ParamError("band_powers: edges must lie in (0, fs/2]");
    }
    if (i > 0 && !(band_edges_hz[i] > band_edges_hz[i - 1])) {
      throw ParamError("band_powers: edges must be strictly increasing");
    }
  }
  validate_finite(x, "band_powers input");

  const std::size_t n_bands = band_edges_hz.size() - 1;
  std::vector<double> acc(n_bands, 0.0);
  if (x.empty()) {
    std::vector<double> out(n_bands, kNegInfDb);
    return out;
  }

  std::size_t seg = 4096;
  while (seg > x.size() && seg > 16) seg /= 2;

  std::vector<double> window(seg);
  double w2 = 0.0;
  for (std::size_t n = 0; n < seg; ++n) {
    window[n] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(n) /
                                      static_cast<double>(seg)));
    w2 += window[n] * window[n];
  }

  const std::size_t hop = seg / 2;
  std::size_t n_segments = 0;
  std::vector<std::complex<double>> buf(seg);
  std::vector<double> bin_power(seg / 2 + 1, 0.0);

  for (std::size_t start = 0; start == 0 || start + seg <= x.size(); start += hop) {
    for (std::size_t n = 0; n < seg; ++n) {
      const std::size_t idx = start + n;
      const double v = idx < x.size() ? x.samples[idx] : 0.0;
      buf[n] = {v * window[n], 0.0};
    }
    fft_inplace(buf, false);
    for (std::size_t k = 0; k <= seg / 2; ++k) {
      bin_power[k] += std::norm(buf[k]);
    }
    ++n_segments;
    if (start + seg >= x.size()) break;
  }

  // calibration: sum over all bins of bin_power*scale equals the mean power
  // of a stationary signal
  const double scale = 1.0 / (static_cast<double>(n_segments) *
                              static_cast<double>(seg) * w2);
  for (std::size_t k = 0; k <= seg / 2; ++k) {
    const double f = static_cast<double>(k) * x.sample_rate / static_cast<double>(seg);
    const double one_sided = (k == 0 || k == seg / 2) ? 1.0 : 2.0;
    const double p = bin_power[k] * scale * one_sided;
    for (std::size_t b = 0; b < n_bands; ++b) {
      if (f >= band_edges_hz[b] && f < band_edges_hz[b + 1]) {
        acc[b] += p;
        break;
      }
    }
  }

  std::vector<double> out(n_bands);
  for (std::size_t b = 0; b < n_bands; ++b) out[b] = power_to_db(acc[b]);
  return out;
}

double band_power_db(const SampleBuffer& x, double lo_hz, double hi_hz) {
  return band_powers(x, {lo_hz, hi_hz})[0];
}

double tone_level_db(const SampleBuffer& x, double freq_hz) {
  if (x.empty()) return kNegInfDb;
  // Goertzel-style projection onto the complex exponential at freq_hz
  const double w = 2.0 * kPi * freq_hz / x.sample_rate;
  double re = 0.0, im = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    re += x.samples[n] * std::cos(w * static_cast<double>(n));
    im -= x.samples[n] * std::sin(w * static_cast<double>(n));
  }
  const double amp = 2.0 * std::hypot(re, im) / static_cast<double>(x.size());
  return lin_to_db(amp / std::sqrt(2.0));
}

}  // namespace hse

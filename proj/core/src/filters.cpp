// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/filters.hpp"

#include <algorithm>
#include <cmath>

namespace hse {

namespace {

void check_cutoff(double cutoff_hz, double sample_rate) {
  if (sample_rate <= 0.0) throw ParamError("sample_rate must be positive");
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < sample_rate / 2.0)) {
    throw ParamError("cutoff must lie strictly between 0 and Nyquist");
  }
}

// Bilinear transform of H(s) = wc^2 / (s^2 + 2*zeta*wc*s + wc^2),
// then exact DC renormalization.
BiquadSection lowpass_pair_section(double zeta, double wc, double k) {
  const double a0 = k * k + 2.0 * zeta * wc * k + wc * wc;
  BiquadSection s;
  s.b0 = wc * wc / a0;
  s.b1 = 2.0 * s.b0;
  s.b2 = s.b0;
  s.a1 = (2.0 * wc * wc - 2.0 * k * k) / a0;
  s.a2 = (k * k - 2.0 * zeta * wc * k + wc * wc) / a0;
  const double dc = (s.b0 + s.b1 + s.b2) / (1.0 + s.a1 + s.a2);
  s.b0 /= dc;
  s.b1 /= dc;
  s.b2 /= dc;
  return s;
}

BiquadSection lowpass_single_section(double wc, double k) {
  const double a0 = k + wc;
  BiquadSection s;
  s.b0 = wc / a0;
  s.b1 = s.b0;
  s.a1 = (wc - k) / a0;
  const double dc = (s.b0 + s.b1) / (1.0 + s.a1);
  s.b0 /= dc;
  s.b1 /= dc;
  return s;
}

// Bilinear transform of H(s) = s / (s^2 + c1*s + c0). Gain fixed afterwards.
BiquadSection bandpass_section(double c1, double c0, double k) {
  const double a0 = k * k + c1 * k + c0;
  BiquadSection s;
  s.b0 = k / a0;
  s.b1 = 0.0;
  s.b2 = -k / a0;
  s.a1 = (2.0 * c0 - 2.0 * k * k) / a0;
  s.a2 = (k * k - c1 * k + c0) / a0;
  return s;
}

std::complex<double> section_response(const BiquadSection& s, double w) {
  const std::complex<double> z1 = std::polar(1.0, -w);
  const std::complex<double> z2 = z1 * z1;
  return (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
}

double bessel_i0(double x) {
  // power series; converges quickly for the beta range used here
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= (x / (2.0 * k)) * (x / (2.0 * k));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace

IirFilter::IirFilter(std::vector<BiquadSection> sections, double sample_rate,
                     int design_order, double cutoff_hz)
    : sections_(std::move(sections)),
      sample_rate_(sample_rate),
      design_order_(design_order),
      cutoff_hz_(cutoff_hz) {}

SampleBuffer IirFilter::apply(const SampleBuffer& x) const {
  SampleBuffer y = x;
  for (const auto& s : sections_) {
    double z1 = 0.0, z2 = 0.0;
    for (double& v : y.samples) {
      const double in = v;
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  return y;
}

std::complex<double> IirFilter::response_at(double freq_hz) const {
  const double w = 2.0 * kPi * freq_hz / sample_rate_;
  std::complex<double> h(1.0, 0.0);
  for (const auto& s : sections_) h *= section_response(s, w);
  return h;
}

double IirFilter::magnitude_db(double freq_hz) const {
  return lin_to_db(std::abs(response_at(freq_hz)));
}

std::vector<double> IirFilter::pole_magnitudes() const {
  std::vector<double> mags;
  for (const auto& s : sections_) {
    if (s.a2 == 0.0) {
      mags.push_back(std::abs(s.a1));
      continue;
    }
    const double disc = s.a1 * s.a1 - 4.0 * s.a2;
    if (disc >= 0.0) {
      const double r = std::sqrt(disc);
      mags.push_back(std::abs((-s.a1 + r) / 2.0));
      mags.push_back(std::abs((-s.a1 - r) / 2.0));
    } else {
      // conjugate pair, |z| = sqrt(a2)
      mags.push_back(std::sqrt(s.a2));
      mags.push_back(std::sqrt(s.a2));
    }
  }
  return mags;
}

bool IirFilter::is_stable(double margin) const {
  for (double m : pole_magnitudes()) {
    if (!(m < 1.0 - margin)) return false;
  }
  return true;
}

bool FirFilter::is_linear_phase(double tol) const {
  const std::size_t n = taps.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (std::abs(taps[i] - taps[n - 1 - i]) > tol) return false;
  }
  return true;
}

IirFilter design_butterworth_lowpass(int order, double cutoff_hz, double sample_rate) {
  if (order < 1 || order > 8) throw ParamError("butterworth order must be in 1..8");
  check_cutoff(cutoff_hz, sample_rate);

  const double k = 2.0 * sample_rate;
  const double wc = k * std::tan(kPi * cutoff_hz / sample_rate);  // prewarped

  std::vector<BiquadSection> sections;
  const int pairs = order / 2;
  for (int i = 0; i < pairs; ++i) {
    const double zeta = std::sin(kPi * (2.0 * i + 1.0) / (2.0 * order));
    sections.push_back(lowpass_pair_section(zeta, wc, k));
  }
  if (order % 2 == 1) sections.push_back(lowpass_single_section(wc, k));

  return IirFilter(std::move(sections), sample_rate, order, cutoff_hz);
}

IirFilter design_butterworth_bandpass(int order, double lo_hz, double hi_hz,
                                      double sample_rate) {
  if (order < 2 || order > 8 || order % 2 != 0) {
    throw ParamError("bandpass order must be even, in 2..8");
  }
  check_cutoff(lo_hz, sample_rate);
  check_cutoff(hi_hz, sample_rate);
  if (!(lo_hz < hi_hz)) throw ParamError("bandpass requires lo < hi");

  const int n = order / 2;  // prototype order
  const double k = 2.0 * sample_rate;
  const double wl = k * std::tan(kPi * lo_hz / sample_rate);
  const double wh = k * std::tan(kPi * hi_hz / sample_rate);
  const double w0 = std::sqrt(wl * wh);
  const double bw = wh - wl;

  // prototype poles on the unit circle, left half-plane
  std::vector<std::complex<double>> proto;
  for (int i = 0; i < n; ++i) {
    const double ang = kPi / 2.0 + kPi * (2.0 * i + 1.0) / (2.0 * n);
    proto.emplace_back(std::cos(ang), std::sin(ang));
  }

  // band transform: each prototype pole p maps to the two roots of
  // s^2 - p*bw*s + w0^2 = 0
  std::vector<std::complex<double>> poles;
  for (const auto& p : proto) {
    const std::complex<double> pb = p * bw;
    const std::complex<double> disc = std::sqrt(pb * pb - 4.0 * w0 * w0);
    poles.push_back((pb + disc) / 2.0);
    poles.push_back((pb - disc) / 2.0);
  }

  // keep one representative of each conjugate pair
  std::vector<std::complex<double>> upper;
  std::vector<double> reals;
  for (const auto& p : poles) {
    if (p.imag() > 1e-9) {
      upper.push_back(p);
    } else if (p.imag() >= -1e-9) {
      reals.push_back(p.real());
    }
  }
  std::sort(reals.begin(), reals.end());

  std::vector<BiquadSection> sections;
  for (const auto& p : upper) {
    const double c1 = -2.0 * p.real();
    const double c0 = std::norm(p);
    sections.push_back(bandpass_section(c1, c0, k));
  }
  for (std::size_t i = 0; i + 1 < reals.size(); i += 2) {
    const double c1 = -(reals[i] + reals[i + 1]);
    const double c0 = reals[i] * reals[i + 1];
    sections.push_back(bandpass_section(c1, c0, k));
  }

  // normalize each section at the digital center frequency
  const double f0 = sample_rate / kPi * std::atan(w0 / k);
  const double w_center = 2.0 * kPi * f0 / sample_rate;
  for (auto& s : sections) {
    const double g = std::abs(section_response(s, w_center));
    s.b0 /= g;
    s.b1 /= g;
    s.b2 /= g;
  }

  return IirFilter(std::move(sections), sample_rate, order, f0);
}

IirFilter design_pole_zero_shelf(double high_freq_gain, double corner_hz,
                                 double sample_rate) {
  if (!(high_freq_gain > 0.0)) throw ParamError("shelf gain must be positive");
  check_cutoff(corner_hz, sample_rate);

  const double k = 2.0 * sample_rate;
  const double w0 = k * std::tan(kPi * corner_hz / sample_rate);
  const double a0 = w0 + k;

  BiquadSection s;
  s.b0 = (w0 + high_freq_gain * k) / a0;
  s.b1 = (w0 - high_freq_gain * k) / a0;
  s.a1 = (w0 - k) / a0;

  return IirFilter({s}, sample_rate, 1, corner_hz);
}

double kaiser_window(double t, double half_width, double beta) {
  const double r = t / half_width;
  if (std::abs(r) > 1.0) return 0.0;
  return bessel_i0(beta * std::sqrt(1.0 - r * r)) / bessel_i0(beta);
}

FirFilter design_kaiser_lowpass(std::size_t taps, double cutoff_hz,
                                double sample_rate, double beta) {
  if (taps < 3 || taps % 2 == 0) throw ParamError("fir taps must be odd and >= 3");
  check_cutoff(cutoff_hz, sample_rate);

  const double fc = cutoff_hz / sample_rate;  // normalized
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(taps) / 2;

  FirFilter fir;
  fir.sample_rate = sample_rate;
  fir.taps.resize(taps);
  for (std::ptrdiff_t i = -m; i <= m; ++i) {
    double v;
    if (i == 0) {
      v = 2.0 * fc;
    } else {
      v = std::sin(2.0 * kPi * fc * static_cast<double>(i)) /
          (kPi * static_cast<double>(i));
    }
    fir.taps[static_cast<std::size_t>(i + m)] =
        v * kaiser_window(static_cast<double>(i), static_cast<double>(m), beta);
  }
  return fir;
}

}  // namespace hse

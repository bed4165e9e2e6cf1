// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "hse/filters.hpp"
#include "hse/rng.hpp"
#include "hse/signal.hpp"
#include "test_helpers.hpp"

using namespace hse;

TEST_CASE("butterworth lowpass magnitude anchors") {
  const IirFilter f6 = design_butterworth_lowpass(6, 500.0, 44100.0);
  CHECK(f6.magnitude_db(500.0) == doctest::Approx(-3.0103).epsilon(0.02));
  // -36 dB/octave roll-off of the 6th-order design
  const double slope = f6.magnitude_db(2000.0) - f6.magnitude_db(1000.0);
  CHECK(std::abs(slope - (-36.0)) < 2.0);

  const IirFilter f1 = design_butterworth_lowpass(1, 50.0, 44100.0);
  CHECK(std::abs(f1.magnitude_db(0.0)) < 1e-6);
}

TEST_CASE("butterworth design validation") {
  CHECK_THROWS_AS(design_butterworth_lowpass(0, 500.0, 44100.0), ParamError);
  CHECK_THROWS_AS(design_butterworth_lowpass(9, 500.0, 44100.0), ParamError);
  CHECK_THROWS_AS(design_butterworth_lowpass(4, 0.0, 44100.0), ParamError);
  CHECK_THROWS_AS(design_butterworth_lowpass(4, -10.0, 44100.0), ParamError);
  CHECK_THROWS_AS(design_butterworth_lowpass(4, 22050.0, 44100.0), ParamError);
  CHECK_THROWS_AS(design_butterworth_lowpass(4, 30000.0, 44100.0), ParamError);
}

TEST_CASE("designed filters are stable with margin") {
  for (int order = 1; order <= 8; ++order) {
    for (double fc : {50.0, 500.0, 1500.0, 8000.0}) {
      const IirFilter f = design_butterworth_lowpass(order, fc, 44100.0);
      for (double m : f.pole_magnitudes()) CHECK(m < 1.0 - 1e-6);
      // unity DC gain within 1e-9 by construction
      CHECK(std::abs(std::abs(f.response_at(0.0)) - 1.0) < 1e-9);
    }
  }
  const IirFilter bp = design_butterworth_bandpass(4, 500.0, 1500.0, 44100.0);
  for (double m : bp.pole_magnitudes()) CHECK(m < 1.0 - 1e-6);
}

TEST_CASE("butterworth roll-off slope matches 6 dB/octave per order") {
  // measured between 4x and 8x cutoff; cutoffs kept low enough that bilinear
  // warping stays below the tolerance
  for (int order = 1; order <= 8; ++order) {
    for (double fc : {50.0, 100.0, 200.0}) {
      const IirFilter f = design_butterworth_lowpass(order, fc, 44100.0);
      const double slope = f.magnitude_db(8.0 * fc) - f.magnitude_db(4.0 * fc);
      CHECK(std::abs(slope - (-6.0 * order)) < 1.0);
    }
  }
}

TEST_CASE("iir filtering is linear") {
  const IirFilter f = design_butterworth_lowpass(4, 1000.0, 44100.0);
  Rng rng(77);
  for (int rep = 0; rep < 4; ++rep) {
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    SampleBuffer x = white_noise(0.05, 44100.0, 100 + rep, -12.0);
    SampleBuffer y = white_noise(0.05, 44100.0, 200 + rep, -12.0);
    SampleBuffer combo = SampleBuffer::zeros(44100.0, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      combo.samples[i] = a * x.samples[i] + b * y.samples[i];
    }
    const SampleBuffer lhs = f.apply(combo);
    const SampleBuffer fx = f.apply(x);
    const SampleBuffer fy = f.apply(y);
    double max_err = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      max_err = std::max(max_err,
                         std::abs(lhs.samples[i] - (a * fx.samples[i] + b * fy.samples[i])));
    }
    CHECK(max_err < 1e-9);
  }
}

TEST_CASE("butterworth bandpass anchors") {
  const IirFilter bp = design_butterworth_bandpass(4, 500.0, 1500.0, 44100.0);
  const double f0 = std::sqrt(500.0 * 1500.0);
  CHECK(std::abs(bp.magnitude_db(f0)) < 0.2);
  CHECK(bp.magnitude_db(500.0) == doctest::Approx(-3.01).epsilon(0.15));
  CHECK(bp.magnitude_db(1500.0) == doctest::Approx(-3.01).epsilon(0.15));
  CHECK(bp.magnitude_db(100.0) < -25.0);
  CHECK(bp.magnitude_db(8000.0) < -25.0);
}

TEST_CASE("pole-zero shelf endpoints") {
  const IirFilter shelf = design_pole_zero_shelf(2.0, 2000.0, 44100.0);
  CHECK(std::abs(shelf.magnitude_db(0.0)) < 1e-9);
  CHECK(shelf.magnitude_db(22049.0) == doctest::Approx(6.0206).epsilon(0.01));
  const IirFilter dim = design_pole_zero_shelf(0.4, 2000.0, 44100.0);
  CHECK(dim.magnitude_db(22049.0) == doctest::Approx(-7.9588).epsilon(0.01));
}

TEST_CASE("kaiser lowpass is linear phase with -6 dB crossover") {
  const FirFilter lp = design_kaiser_lowpass(511, 1500.0, 44100.0, 12.0);
  CHECK(lp.is_linear_phase());
  CHECK(lp.group_delay_samples() == doctest::Approx(255.0));
  const double at_fc = test::fir_magnitude(lp.taps, 1500.0, 44100.0);
  CHECK(std::abs(at_fc - 0.5) < 0.025);  // -6 dB point within 5%
  CHECK(lin_to_db(test::fir_magnitude(lp.taps, 2200.0, 44100.0)) < -100.0);
  CHECK(std::abs(test::fir_magnitude(lp.taps, 200.0, 44100.0) - 1.0) < 1e-4);
  CHECK_THROWS_AS(design_kaiser_lowpass(512, 1500.0, 44100.0, 12.0), ParamError);
}

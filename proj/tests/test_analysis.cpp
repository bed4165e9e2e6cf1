// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "hse/analysis.hpp"
#include "hse/dsp.hpp"
#include "hse/rng.hpp"
#include "hse/signal.hpp"
#include "test_helpers.hpp"

using namespace hse;

TEST_CASE("broadband ILD") {
  SUBCASE("identical channels read zero") {
    BinauralBuffer x;
    x.left = white_noise(0.1, 44100.0, 1, -20.0);
    x.right = x.left;
    CHECK(broadband_ild(x) == 0.0);
  }

  SUBCASE("doubling the right channel adds 6.02 dB") {
    BinauralBuffer x;
    x.left = white_noise(0.1, 44100.0, 2, -20.0);
    x.right = x.left;
    for (double& v : x.right.samples) v *= 2.0;
    CHECK(broadband_ild(x) == doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
  }

  SUBCASE("antisymmetric under channel swap") {
    BinauralBuffer x;
    x.left = white_noise(0.1, 44100.0, 3, -20.0);
    x.right = white_noise(0.1, 44100.0, 4, -18.0);
    BinauralBuffer swapped;
    swapped.left = x.right;
    swapped.right = x.left;
    CHECK(broadband_ild(swapped) == -broadband_ild(x));
  }

  SUBCASE("enhancement widens the lateral ILD") {
    const HrtfSet set = make_synthetic_hrtf_set(44100.0);
    const SampleBuffer noise = white_noise(0.4, 44100.0, 5, -20.0);
    const BinauralBuffer rendered = render_scene(single_source_scene(90, noise), set);
    const double natural = broadband_ild(rendered);
    const double enhanced = broadband_ild(head_shadow_enhance(rendered, BeamformerParams{}));
    CHECK(natural > 0.0);
    CHECK(enhanced > natural);
  }
}

TEST_CASE("ild curves through the bimodal chain") {
  // the figure-reproduction head: radius matched to the 20 cm device delay
  HrtfParams hp = device_matched_head(0.20);
  hp.bright_spot = true;
  const HrtfSet set = make_synthetic_hrtf_set(44100.0, hp);
  const SampleBuffer stim = localization_stimulus(44100.0, 21);

  BimodalSpec bimodal;
  bimodal.voc.seed = 7;
  const ConditionPair pair = make_condition_pair(set, stim, BeamformerParams{}, bimodal);

  const IldCurve enhanced = ild_curve(stim, set, pair.enhanced, standard_angles());
  const IldCurve natural = ild_curve(stim, set, pair.natural, standard_angles());

  SUBCASE("odd symmetry holds for mirror-symmetric processing") {
    // measured before the bimodal simulation: the vocoded-left/low-passed-
    // right stage is deliberately asymmetric, so odd symmetry is a property
    // of the linear part of the chain
    const IldCurve pre_e = ild_curve(stim, set, pair.enhanced, standard_angles(), true);
    const IldCurve pre_n = ild_curve(stim, set, pair.natural, standard_angles(), true);
    for (int angle : {15, 45, 90}) {
      CHECK(std::abs(pre_e.ild_at(angle) + pre_e.ild_at(-angle)) < 0.5);
      CHECK(std::abs(pre_n.ild_at(angle) + pre_n.ild_at(-angle)) < 0.5);
    }
    CHECK(std::abs(enhanced.ild_at(0)) < 0.5);
    CHECK(std::abs(natural.ild_at(0)) < 0.5);
  }

  SUBCASE("enhanced curve is strictly monotonic") {
    CHECK(enhanced.strictly_monotonic());
  }

  SUBCASE("natural curve with bright spot bends beyond 75 degrees") {
    CHECK(!natural.strictly_monotonic());
    // the bend sits at the edge of the grid
    const bool edge_bend = natural.ild_at(-90) > natural.ild_at(-75) ||
                           natural.ild_at(90) < natural.ild_at(75);
    CHECK(edge_bend);
  }

  SUBCASE("enhanced range exceeds natural range") {
    CHECK(enhanced.range_db() > natural.range_db());
  }
}

TEST_CASE("band snr") {
  const HrtfSet set = make_synthetic_hrtf_set(44100.0);
  const std::vector<double> edges = third_octave_edges(third_octave_centers());
  Chain natural;

  SUBCASE("speech scene equal to noise scene gives 0 dB everywhere") {
    const SampleBuffer s = speech_shaped_noise(1.0, 44100.0, 31, -25.0);
    const Scene scene = single_source_scene(0, s);
    const BandSnrReport r = band_snr(scene, scene, set, natural, edges);
    for (Side ear : {Side::Left, Side::Right}) {
      for (double v : r.ear(ear)) CHECK(std::abs(v) < 1e-9);
    }
  }

  SUBCASE("raising the noise by 10 dB lowers every SNR by exactly 10 dB") {
    const SampleBuffer s = speech_shaped_noise(1.0, 44100.0, 32, -25.0);
    const SampleBuffer n = speech_shaped_noise(1.0, 44100.0, 33, -25.0);
    Scene noise = single_source_scene(-90, n, "S0NCI");
    const BandSnrReport base = band_snr(single_source_scene(0, s), noise, set, natural, edges);
    noise.sources[0].level_offset_db = 10.0;
    const BandSnrReport hot = band_snr(single_source_scene(0, s), noise, set, natural, edges);
    for (Side ear : {Side::Left, Side::Right}) {
      for (std::size_t b = 0; b < base.ear(ear).size(); ++b) {
        CHECK(std::abs((base.ear(ear)[b] - hot.ear(ear)[b]) - 10.0) < 1e-9);
      }
    }
  }

  SUBCASE("common gain changes nothing") {
    const SampleBuffer s = speech_shaped_noise(1.0, 44100.0, 34, -25.0);
    const SampleBuffer n = speech_shaped_noise(1.0, 44100.0, 35, -25.0);
    auto snrs = [&](double gain_db) {
      Scene sp = single_source_scene(0, scaled(s, gain_db));
      Scene no = single_source_scene(-90, scaled(n, gain_db), "S0NCI");
      return band_snr(sp, no, set, natural, edges);
    };
    const BandSnrReport a = snrs(0.0);
    const BandSnrReport b = snrs(-7.3);
    for (Side ear : {Side::Left, Side::Right}) {
      for (std::size_t i = 0; i < a.ear(ear).size(); ++i) {
        CHECK(std::abs(a.ear(ear)[i] - b.ear(ear)[i]) < 1e-9);
      }
    }
  }

  SUBCASE("empty scene is rejected") {
    Scene empty;
    CHECK_THROWS_AS(band_snr(empty, empty, set, natural, edges), ParamError);
  }
}

TEST_CASE("localization metrics") {
  SUBCASE("perfect responses give zeros") {
    const LocalizationMetrics m =
        localization_metrics({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
    REQUIRE(m.per_angle.size() == 1);
    CHECK(m.per_angle[0].bias_deg == 0.0);
    CHECK(m.per_angle[0].std_deg == 0.0);
    CHECK(m.per_angle[0].rms_error_deg == 0.0);
  }

  SUBCASE("hand-worked example: target 15, responses 10/20/30") {
    const LocalizationMetrics m =
        localization_metrics({{15.0, 10.0}, {15.0, 20.0}, {15.0, 30.0}});
    REQUIRE(m.per_angle.size() == 1);
    const auto& a = m.per_angle[0];
    CHECK(a.bias_deg == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(a.std_deg == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(a.rms_error_deg == doctest::Approx(std::sqrt(275.0 / 3.0)).epsilon(1e-12));
    // identity: rms = sqrt((n-1)/n std^2 + bias^2)
    CHECK(a.rms_error_deg ==
          doctest::Approx(std::sqrt((2.0 / 3.0) * 100.0 + 25.0)).epsilon(1e-12));
  }

  SUBCASE("the rms/std/bias identity holds over random trial sets") {
    Rng rng(101);
    for (int rep = 0; rep < 1000; ++rep) {
      const double target = std::floor(rng.uniform(-6.0, 7.0)) * 15.0;
      const int n = 2 + static_cast<int>(rng.uniform(0.0, 9.0));
      std::vector<std::pair<double, double>> trials;
      for (int i = 0; i < n; ++i) {
        trials.emplace_back(target, std::floor(rng.uniform(-6.0, 7.0)) * 15.0);
      }
      const LocalizationMetrics m = localization_metrics(trials);
      const auto& a = m.per_angle[0];
      const double nn = static_cast<double>(n);
      const double eq4 = std::sqrt((nn - 1.0) / nn * a.std_deg * a.std_deg +
                                   a.bias_deg * a.bias_deg);
      CHECK(std::abs(a.rms_error_deg - eq4) < 1e-9);
    }
  }

  SUBCASE("single trial leaves std undefined but rms computed") {
    const LocalizationMetrics m = localization_metrics({{30.0, 45.0}});
    CHECK(std::isnan(m.per_angle[0].std_deg));
    CHECK(m.per_angle[0].rms_error_deg == doctest::Approx(15.0));
  }

  SUBCASE("no trials is an error") {
    CHECK_THROWS_AS(localization_metrics({}), ParamError);
  }
}

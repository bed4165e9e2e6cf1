// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hse/analysis.hpp"
#include "hse/dsp.hpp"
#include "hse/hrtf.hpp"
#include "hse/scene.hpp"
#include "hse/signal.hpp"
#include "hse/wav.hpp"
#include "test_helpers.hpp"

using namespace hse;

namespace {

// integer-lag cross-correlation argmax between two IRs
int xcorr_peak_lag(const std::vector<double>& a, const std::vector<double>& b, int max_lag) {
  int best = 0;
  double best_v = -1.0;
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto j = static_cast<std::ptrdiff_t>(i) + lag;
      if (j < 0 || j >= static_cast<std::ptrdiff_t>(b.size())) continue;
      acc += a[i] * b[static_cast<std::size_t>(j)];
    }
    if (acc > best_v) {
      best_v = acc;
      best = lag;
    }
  }
  return best;
}

double white_ild_db(const HrtfSet& set, int angle) {
  const SampleBuffer noise = white_noise(0.5, set.sample_rate(), 7, -20.0);
  const BinauralBuffer out = render_scene(single_source_scene(angle, noise), set);
  return broadband_ild(out);
}

std::filesystem::path make_temp_dir(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_ir_wav(const std::filesystem::path& dir, int angle, char ear, double fs) {
  SampleBuffer ir = SampleBuffer::zeros(fs, 32);
  ir.samples[4] = 1.0;
  ir.samples[5] = ear == 'L' ? 0.25 : -0.25;
  write_wav((dir / ("az" + std::to_string(angle) + "_" + ear + ".wav")).string(), ir);
}

}  // namespace

TEST_CASE("synthetic hrtf symmetry") {
  SUBCASE("frontal source gives identical ears") {
    auto [left, right] = synth_spherical_hrtf(0.0, 44100.0);
    REQUIRE(left.taps.size() == right.taps.size());
    for (std::size_t i = 0; i < left.taps.size(); ++i) {
      CHECK(left.taps[i] == right.taps[i]);
    }
  }

  SUBCASE("left(theta) equals right(-theta) tap for tap") {
    const HrtfSet set = make_synthetic_hrtf_set(44100.0);
    for (int angle : {15, 45, 90, 150}) {
      const auto& pos = set.at(angle);
      const auto& neg = set.at(-angle);
      REQUIRE(pos.first.taps.size() == neg.second.taps.size());
      for (std::size_t i = 0; i < pos.first.taps.size(); ++i) {
        CHECK(pos.first.taps[i] == neg.second.taps[i]);
      }
    }
  }
}

TEST_CASE("synthetic hrtf interaural delay follows Woodworth") {
  // (a/c)(1 + pi/2) = 661.6 us at 90 degrees for a = 0.0875 m, c = 340 m/s,
  // measured on the low band where the model pins the arrival times (the
  // shadow shelves reshape the wideband peaks)
  HrtfParams p;
  p.head_radius_m = 0.0875;
  p.speed_of_sound = 340.0;
  auto [left, right] = synth_spherical_hrtf(90.0, 44100.0, p);
  const IirFilter lp = design_butterworth_lowpass(4, 1500.0, 44100.0);
  const SampleBuffer left_lp = lp.apply(SampleBuffer(44100.0, left.taps));
  const SampleBuffer right_lp = lp.apply(SampleBuffer(44100.0, right.taps));
  const double expected_s = (0.0875 / 340.0) * (1.0 + kPi / 2.0);
  const int lag = xcorr_peak_lag(left_lp.samples, right_lp.samples, 64);
  CHECK(std::abs(std::abs(static_cast<double>(lag)) - expected_s * 44100.0) <= 1.0);
}

TEST_CASE("synthetic hrtf broadband ILD") {
  const HrtfSet set = make_synthetic_hrtf_set(44100.0);

  SUBCASE("a source at +90 is louder on the right") {
    CHECK(white_ild_db(set, 90) > 0.0);
  }

  SUBCASE("natural ILD grows strictly with angle on [0, 60]") {
    double prev = white_ild_db(set, 0);
    for (int angle : {15, 30, 45, 60}) {
      const double ild = white_ild_db(set, angle);
      CHECK(ild > prev);
      prev = ild;
    }
  }

  SUBCASE("bright-spot emulation dips the extreme-angle ILD") {
    HrtfParams p;
    p.bright_spot = true;
    const HrtfSet bs = make_synthetic_hrtf_set(44100.0, p);
    CHECK(white_ild_db(bs, 90) < white_ild_db(bs, 75));
    // and the default set stays monotonic out to the edge
    CHECK(white_ild_db(set, 90) > white_ild_db(set, 75));
  }
}

TEST_CASE("truncate_ir") {
  SUBCASE("keeps the peak plus the 2 ms window") {
    FirFilter ir;
    ir.sample_rate = 44100.0;
    ir.taps.assign(500, 0.0);
    ir.taps[10] = 1.0;
    const FirFilter t = truncate_ir(ir, 0.002);
    CHECK(t.taps.size() == 10 + 88 + 1);
  }

  SUBCASE("short IRs are returned unchanged") {
    FirFilter ir;
    ir.sample_rate = 44100.0;
    ir.taps = {0.0, 1.0, 0.5};
    const FirFilter t = truncate_ir(ir, 0.002);
    CHECK(t.taps == ir.taps);
  }

  SUBCASE("removes a reflection 5 ms after the peak") {
    FirFilter ir;
    ir.sample_rate = 44100.0;
    ir.taps.assign(600, 0.0);
    ir.taps[50] = 1.0;
    ir.taps[51] = 0.4;
    const std::size_t echo_at = 50 + static_cast<std::size_t>(0.005 * 44100.0);
    ir.taps[echo_at] = 0.6;
    const FirFilter t = truncate_ir(ir, 0.002);
    CHECK(t.taps.size() <= echo_at);
    double direct = 0.0, total = 0.0;
    for (std::size_t i = 0; i < t.taps.size(); ++i) {
      total += t.taps[i] * t.taps[i];
      if (i <= 60) direct += t.taps[i] * t.taps[i];
    }
    CHECK(direct / total >= 0.999);
  }

  SUBCASE("all-zero IR is a data error") {
    FirFilter ir;
    ir.sample_rate = 44100.0;
    ir.taps.assign(100, 0.0);
    CHECK_THROWS_AS(truncate_ir(ir), DataError);
  }
}

TEST_CASE("load_hrtf_set") {
  SUBCASE("happy path: 13 angles, both ears") {
    const auto dir = make_temp_dir("hse_hrtf_ok");
    for (int angle : standard_angles()) {
      write_ir_wav(dir, angle, 'L', 44100.0);
      write_ir_wav(dir, angle, 'R', 44100.0);
    }
    const HrtfSet set = load_hrtf_set(dir.string());
    CHECK(set.size() == 13);
    CHECK(set.sample_rate() == 44100.0);
    CHECK(set.source() == HrtfSet::Source::Imported);
    std::filesystem::remove_all(dir);
  }

  SUBCASE("missing ear is reported by name") {
    const auto dir = make_temp_dir("hse_hrtf_missing");
    for (int angle : standard_angles()) {
      if (angle != 45) write_ir_wav(dir, angle, 'L', 44100.0);
      write_ir_wav(dir, angle, 'R', 44100.0);
    }
    try {
      load_hrtf_set(dir.string());
      FAIL("expected ParamError");
    } catch (const ParamError& e) {
      CHECK(std::string(e.what()).find("+45/left") != std::string::npos);
    }
    std::filesystem::remove_all(dir);
  }

  SUBCASE("mixed sample rates are rejected") {
    const auto dir = make_temp_dir("hse_hrtf_rates");
    for (int angle : standard_angles()) {
      write_ir_wav(dir, angle, 'L', angle == 30 ? 48000.0 : 44100.0);
      write_ir_wav(dir, angle, 'R', 44100.0);
    }
    try {
      load_hrtf_set(dir.string());
      FAIL("expected ParamError");
    } catch (const ParamError& e) {
      CHECK(std::string(e.what()).find("sample-rate mismatch") != std::string::npos);
    }
    std::filesystem::remove_all(dir);
  }

  SUBCASE("raw float32 files with a manifest") {
    const auto dir = make_temp_dir("hse_hrtf_raw");
    {
      std::ofstream m(dir / "manifest.json");
      m << R"({"sample_rate": 44100, "format": "raw_f32"})";
    }
    for (int angle : standard_angles()) {
      for (char ear : {'L', 'R'}) {
        std::ofstream f(dir / ("az" + std::to_string(angle) + "_" + ear + ".raw"),
                        std::ios::binary);
        const float taps[4] = {0.0f, 1.0f, 0.5f, 0.0f};
        f.write(reinterpret_cast<const char*>(taps), sizeof(taps));
      }
    }
    const HrtfSet set = load_hrtf_set(dir.string());
    CHECK(set.size() == 13);
    CHECK(set.at(0).first.taps[1] == 1.0);
    std::filesystem::remove_all(dir);
  }
}

TEST_CASE("render_scene") {
  const HrtfSet set = make_synthetic_hrtf_set(44100.0);
  const SampleBuffer noise = white_noise(0.2, 44100.0, 19, -20.0);

  SUBCASE("frontal render is symmetric") {
    const BinauralBuffer out = render_scene(single_source_scene(0, noise), set);
    REQUIRE(out.left.size() == out.right.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(std::abs(out.left.samples[i] - out.right.samples[i]) < 1e-12);
    }
  }

  SUBCASE("rendering is additive over sources") {
    const SampleBuffer a = white_noise(0.2, 44100.0, 20, -20.0);
    const SampleBuffer b = white_noise(0.2, 44100.0, 21, -20.0);
    Scene both;
    both.sources.push_back({-30, a, 0.0});
    both.sources.push_back({60, b, 0.0});
    const BinauralBuffer sum = render_scene(both, set);
    const BinauralBuffer ra = render_scene(single_source_scene(-30, a), set);
    const BinauralBuffer rb = render_scene(single_source_scene(60, b), set);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      CHECK(std::abs(sum.left.samples[i] - (ra.left.samples[i] + rb.left.samples[i])) < 1e-12);
    }
  }

  SUBCASE("output power does not depend on source order") {
    Scene fwd, rev;
    for (int i = 0; i < 4; ++i) {
      SceneSource s{-45 + 30 * i, white_noise(0.1, 44100.0, 30 + i, -20.0), -3.0};
      fwd.sources.push_back(s);
      rev.sources.insert(rev.sources.begin(), s);
    }
    const double p1 = rms(render_scene(fwd, set).left);
    const double p2 = rms(render_scene(rev, set).left);
    CHECK(std::abs(p1 - p2) / p1 < 1e-12);
  }

  SUBCASE("surround noise power matches a frontal source within 1 dB") {
    const auto scenes = make_condition_scenes(SpatialCondition::S0N360, Side::Left,
                                              noise, 1.0, 44100.0, 99);
    const BinauralBuffer surround = render_scene(scenes.noise, set);
    const BinauralBuffer frontal = render_scene(
        single_source_scene(0, speech_shaped_noise(1.0, 44100.0, 123, -25.0)), set);
    for (Side ear : {Side::Left, Side::Right}) {
      CHECK(std::abs(rms_level_db(surround.channel(ear)) -
                     rms_level_db(frontal.channel(ear))) < 1.0);
    }
  }

  SUBCASE("missing angle names the angle") {
    HrtfSet small(44100.0, HrtfSet::Source::Synthetic);
    auto [l, r] = synth_spherical_hrtf(0.0, 44100.0);
    small.insert(0, l, r);
    try {
      render_scene(single_source_scene(45, noise), small);
      FAIL("expected ParamError");
    } catch (const ParamError& e) {
      CHECK(std::string(e.what()).find("45") != std::string::npos);
    }
  }
}

// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/scene.hpp"

#include <algorithm>
#include <cmath>

#include "hse/dsp.hpp"
#include "hse/rng.hpp"
#include "hse/signal.hpp"

namespace hse {

BinauralBuffer render_scene(const Scene& scene, const HrtfSet& hrtfs) {
  if (scene.sources.empty()) throw ParamError("render_scene: empty scene");

  std::size_t max_signal = 0;
  for (const auto& src : scene.sources) {
    if (src.signal.sample_rate != hrtfs.sample_rate()) {
      throw ParamError("render_scene: source sample rate does not match HRTF set");
    }
    hrtfs.at(src.azimuth_deg);  // validates presence, names the angle
    max_signal = std::max(max_signal, src.signal.size());
  }

  const std::size_t out_len = max_signal + hrtfs.max_ir_length() - 1;
  BinauralBuffer out;
  out.left = SampleBuffer::zeros(hrtfs.sample_rate(), out_len);
  out.right = SampleBuffer::zeros(hrtfs.sample_rate(), out_len);

  for (const auto& src : scene.sources) {
    const SampleBuffer sig = scaled(src.signal, src.level_offset_db);
    for (Side ear : {Side::Left, Side::Right}) {
      const SampleBuffer conv =
          convolve(sig, hrtfs.ear_ir(src.azimuth_deg, ear), ConvolveMethod::Auto);
      auto& dst = out.channel(ear).samples;
      for (std::size_t i = 0; i < conv.size(); ++i) dst[i] += conv.samples[i];
    }
  }
  return out;
}

Scene single_source_scene(int azimuth_deg, SampleBuffer signal, std::string label) {
  Scene s;
  s.label = std::move(label);
  s.sources.push_back({azimuth_deg, std::move(signal), 0.0});
  return s;
}

const char* condition_name(SpatialCondition c) {
  switch (c) {
    case SpatialCondition::S0NCI: return "S0NCI";
    case SpatialCondition::S0NHA: return "S0NHA";
    case SpatialCondition::S0N360: return "S0N360";
  }
  return "?";
}

SpatialCondition condition_from_name(const std::string& name) {
  if (name == "S0NCI") return SpatialCondition::S0NCI;
  if (name == "S0NHA") return SpatialCondition::S0NHA;
  if (name == "S0N360") return SpatialCondition::S0N360;
  throw ParamError("unknown condition: " + name + " (expected S0NCI, S0NHA or S0N360)");
}

SpeechNoiseScenes make_condition_scenes(SpatialCondition condition, Side ci_side,
                                        const SampleBuffer& speech,
                                        double noise_dur_s, double sample_rate,
                                        std::uint64_t noise_seed) {
  SpeechNoiseScenes out;
  out.speech = single_source_scene(0, speech, "speech");
  out.noise.label = condition_name(condition);

  const int ci_angle = ci_side == Side::Left ? -90 : 90;
  switch (condition) {
    case SpatialCondition::S0NCI:
      out.noise.sources.push_back(
          {ci_angle, speech_shaped_noise(noise_dur_s, sample_rate, noise_seed), 0.0});
      break;
    case SpatialCondition::S0NHA:
      out.noise.sources.push_back(
          {-ci_angle, speech_shaped_noise(noise_dur_s, sample_rate, noise_seed), 0.0});
      break;
    case SpatialCondition::S0N360: {
      const std::vector<int> angles = full_circle_angles();
      const double offset = -10.0 * std::log10(static_cast<double>(angles.size()));
      for (std::size_t i = 0; i < angles.size(); ++i) {
        out.noise.sources.push_back(
            {angles[i],
             speech_shaped_noise(noise_dur_s, sample_rate, Rng::derive(noise_seed, i)),
             offset});
      }
      break;
    }
  }
  return out;
}

}  // namespace hse

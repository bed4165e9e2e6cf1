// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hse/hrtf.hpp"
#include "hse/types.hpp"

namespace hse {

struct SceneSource {
  int azimuth_deg = 0;
  SampleBuffer signal;
  double level_offset_db = 0.0;
};

struct Scene {
  std::string label;
  std::vector<SceneSource> sources;
};

/// Renders all sources binaurally: per ear, the sum over sources of
/// convolve(signal * 10^(offset/20), ear_ir(angle)). Output length is
/// max(source length) + max(IR length) - 1. Missing angles raise ParamError
/// naming the angle.
BinauralBuffer render_scene(const Scene& scene, const HrtfSet& hrtfs);

Scene single_source_scene(int azimuth_deg, SampleBuffer signal,
                          std::string label = "single");

enum class SpatialCondition { S0NCI, S0NHA, S0N360 };

const char* condition_name(SpatialCondition c);
SpatialCondition condition_from_name(const std::string& name);

struct SpeechNoiseScenes {
  Scene speech;
  Scene noise;
};

/// Speech-in-noise spatial conditions: speech always from the front; noise at
/// the CI side (S0NCI), the hearing-aid side (S0NHA), or as 24 independent
/// speech-shaped noise sources around the full circle, each offset by
/// -10*log10(24) dB so total noise power matches a single frontal source
/// (S0N360).
SpeechNoiseScenes make_condition_scenes(SpatialCondition condition, Side ci_side,
                                        const SampleBuffer& speech,
                                        double noise_dur_s, double sample_rate,
                                        std::uint64_t noise_seed);

}  // namespace hse

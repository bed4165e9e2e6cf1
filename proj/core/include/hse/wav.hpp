// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "hse/types.hpp"

namespace hse {

struct WavData {
  double sample_rate = kDefaultSampleRate;
  std::vector<std::vector<double>> channels;

  std::size_t frames() const { return channels.empty() ? 0 : channels[0].size(); }
};

enum class WavFormat {
  Float32,  // IEEE float, the pipeline default (no quantization noise)
  Int16,    // PCM16; samples are scaled by 32767 on write and 1/32768 on read
};

/// Reads a RIFF/WAVE file (PCM16 or 32-bit float). Unknown chunks are skipped.
WavData read_wav(const std::string& path);

void write_wav(const std::string& path, const WavData& data,
               WavFormat format = WavFormat::Float32);

void write_wav(const std::string& path, const SampleBuffer& x,
               WavFormat format = WavFormat::Float32);

void write_wav(const std::string& path, const BinauralBuffer& x,
               WavFormat format = WavFormat::Float32);

SampleBuffer read_wav_mono(const std::string& path);
BinauralBuffer read_wav_stereo(const std::string& path);

}  // namespace hse

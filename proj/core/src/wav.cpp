// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace hse {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

template <typename T>
T read_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  T v = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) v = static_cast<T>((v << 8) | buf[i]);
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>(v & 0xff);
    v = static_cast<T>(v >> 8);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

float bits_to_float(std::uint32_t u) {
  float f;
  std::memcpy(&f, &u, sizeof(f));
  return f;
}

std::uint32_t float_to_bits(float f) {
  std::uint32_t u;
  std::memcpy(&u, &f, sizeof(u));
  return u;
}

}  // namespace

WavData read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open WAV file: " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) throw DataError("not a RIFF file: " + path);
  (void)read_le<std::uint32_t>(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) throw DataError("not a WAVE file: " + path);

  std::uint16_t format = 0, n_channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  WavData data;

  while (in.read(tag, 4)) {
    const auto chunk_size = read_le<std::uint32_t>(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_le<std::uint16_t>(in);
      n_channels = read_le<std::uint16_t>(in);
      rate = read_le<std::uint32_t>(in);
      (void)read_le<std::uint32_t>(in);  // byte rate
      (void)read_le<std::uint16_t>(in);  // block align
      bits = read_le<std::uint16_t>(in);
      if (chunk_size > 16) in.seekg(chunk_size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw DataError("WAV data chunk before fmt chunk: " + path);
      if (n_channels == 0 || rate == 0) throw DataError("malformed WAV fmt chunk: " + path);
      const bool is_float = format == kFormatFloat && bits == 32;
      const bool is_pcm16 = format == kFormatPcm && bits == 16;
      if (!is_float && !is_pcm16) {
        throw DataError("unsupported WAV format (need PCM16 or float32): " + path);
      }
      const std::size_t bytes_per_sample = bits / 8;
      const std::size_t frames = chunk_size / (bytes_per_sample * n_channels);
      data.sample_rate = static_cast<double>(rate);
      data.channels.assign(n_channels, std::vector<double>(frames));
      for (std::size_t f = 0; f < frames; ++f) {
        for (std::size_t c = 0; c < n_channels; ++c) {
          if (is_float) {
            data.channels[c][f] = static_cast<double>(bits_to_float(read_le<std::uint32_t>(in)));
          } else {
            const auto raw = static_cast<std::int16_t>(read_le<std::uint16_t>(in));
            data.channels[c][f] = static_cast<double>(raw) / 32768.0;
          }
        }
      }
      if (!in) throw DataError("truncated WAV data chunk: " + path);
      return data;
    } else {
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw DataError("WAV file has no data chunk: " + path);
}

void write_wav(const std::string& path, const WavData& data, WavFormat format) {
  if (data.channels.empty()) throw ParamError("write_wav: no channels");
  const std::size_t frames = data.frames();
  for (const auto& ch : data.channels) {
    if (ch.size() != frames) throw ParamError("write_wav: channel length mismatch");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot create WAV file: " + path);

  const auto n_channels = static_cast<std::uint16_t>(data.channels.size());
  const std::uint16_t bits = format == WavFormat::Float32 ? 32 : 16;
  const std::uint32_t byte_rate =
      static_cast<std::uint32_t>(data.sample_rate) * n_channels * bits / 8;
  const auto block_align = static_cast<std::uint16_t>(n_channels * bits / 8);
  const auto data_size = static_cast<std::uint32_t>(frames * block_align);

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, 36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, format == WavFormat::Float32 ? kFormatFloat : kFormatPcm);
  write_le<std::uint16_t>(out, n_channels);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(data.sample_rate));
  write_le<std::uint32_t>(out, byte_rate);
  write_le<std::uint16_t>(out, block_align);
  write_le<std::uint16_t>(out, bits);
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_size);

  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t c = 0; c < n_channels; ++c) {
      const double v = data.channels[c][f];
      if (format == WavFormat::Float32) {
        write_le<std::uint32_t>(out, float_to_bits(static_cast<float>(v)));
      } else {
        const double clamped = std::max(-1.0, std::min(1.0, v));
        write_le<std::uint16_t>(out, static_cast<std::uint16_t>(
                                         static_cast<std::int16_t>(std::lround(clamped * 32767.0))));
      }
    }
  }
  if (!out) throw DataError("failed writing WAV file: " + path);
}

void write_wav(const std::string& path, const SampleBuffer& x, WavFormat format) {
  WavData d;
  d.sample_rate = x.sample_rate;
  d.channels = {x.samples};
  write_wav(path, d, format);
}

void write_wav(const std::string& path, const BinauralBuffer& x, WavFormat format) {
  x.validate();
  WavData d;
  d.sample_rate = x.sample_rate();
  d.channels = {x.left.samples, x.right.samples};
  write_wav(path, d, format);
}

SampleBuffer read_wav_mono(const std::string& path) {
  const WavData d = read_wav(path);
  if (d.channels.size() != 1) {
    throw DataError("expected mono WAV, got " + std::to_string(d.channels.size()) +
                    " channels: " + path);
  }
  return SampleBuffer(d.sample_rate, d.channels[0]);
}

BinauralBuffer read_wav_stereo(const std::string& path) {
  const WavData d = read_wav(path);
  if (d.channels.size() != 2) {
    throw DataError("expected stereo WAV, got " + std::to_string(d.channels.size()) +
                    " channels: " + path);
  }
  BinauralBuffer b;
  b.left = SampleBuffer(d.sample_rate, d.channels[0]);
  b.right = SampleBuffer(d.sample_rate, d.channels[1]);
  return b;
}

}  // namespace hse

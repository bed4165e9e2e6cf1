// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hse {

inline constexpr double kDefaultSampleRate = 44100.0;

// Presentation-level bookkeeping: the free-field reference level (65 dBA in a
// calibrated booth set-up) maps to -25 dBFS in the digital domain. Everything
// else in this library is measured in dBFS.
inline constexpr double kPresentationLevelDbfs = -25.0;

inline constexpr double kNegInfDb = -std::numeric_limits<double>::infinity();

/// Invalid parameters or configuration. The CLI maps this to exit code 2.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bad data at run time (non-finite samples, unreadable files, ...).
/// The CLI maps this to exit code 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }
inline Side other_side(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Mono audio at a fixed sample rate. Samples are doubles in nominal
/// [-1, 1]; clipping is not enforced.
struct SampleBuffer {
  double sample_rate = kDefaultSampleRate;
  std::vector<double> samples;

  SampleBuffer() = default;
  SampleBuffer(double rate, std::vector<double> s)
      : sample_rate(rate), samples(std::move(s)) {
    if (sample_rate <= 0.0) throw ParamError("sample_rate must be positive");
  }

  static SampleBuffer zeros(double rate, std::size_t n) {
    return SampleBuffer(rate, std::vector<double>(n, 0.0));
  }

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const { return static_cast<double>(samples.size()) / sample_rate; }

  double& operator[](std::size_t i) { return samples[i]; }
  double operator[](std::size_t i) const { return samples[i]; }
};

/// Left/right pair of equal length and rate.
struct BinauralBuffer {
  SampleBuffer left;
  SampleBuffer right;

  std::size_t size() const { return left.size(); }
  double sample_rate() const { return left.sample_rate; }

  /// Throws ParamError if channels differ in rate or length.
  void validate() const {
    if (left.sample_rate != right.sample_rate)
      throw ParamError("binaural channels have mismatched sample rates");
    if (left.size() != right.size())
      throw ParamError("binaural channels have mismatched lengths");
  }

  const SampleBuffer& channel(Side s) const { return s == Side::Left ? left : right; }
  SampleBuffer& channel(Side s) { return s == Side::Left ? left : right; }
};

inline double db_to_lin(double db) { return std::pow(10.0, db / 20.0); }

inline double lin_to_db(double amplitude) {
  return amplitude > 0.0 ? 20.0 * std::log10(amplitude) : kNegInfDb;
}

inline double power_to_db(double power) {
  return power > 0.0 ? 10.0 * std::log10(power) : kNegInfDb;
}

/// Throws DataError if any sample is NaN or infinite.
void validate_finite(const SampleBuffer& x, const std::string& what);

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace hse

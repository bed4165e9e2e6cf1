// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "hse/beamformer.hpp"
#include "hse/bimodal.hpp"
#include "hse/hrtf.hpp"
#include "hse/types.hpp"

namespace hse {

struct BimodalSpec {
  Side ci_side = Side::Left;
  VocoderParams voc;
  HearingLossParams hl;
};

/// A processing condition: optional head shadow enhancement followed by an
/// optional bimodal simulation, with frozen per-ear calibration gains.
///
/// calibrate() renders a reference stimulus from the front through the full
/// chain and sets the gains so each ear lands on the presentation level --
/// the digital analogue of calibrating each condition to 65 dBA per ear at
/// 0 degrees. The gains then stay fixed for every angle and trial.
struct Chain {
  bool enhance = false;
  BeamformerParams bf;
  std::optional<BimodalSpec> bimodal;
  double gain_left = 1.0;
  double gain_right = 1.0;

  std::string label() const { return enhance ? "enhanced" : "natural"; }

  /// Full chain: enhance -> bimodal -> calibration gains.
  BinauralBuffer process(const BinauralBuffer& x) const;

  /// Linear part only (through the beamformer), where per-band SNRs are
  /// measured: the vocoder is nonlinear and stochastic, so speech/noise
  /// separation is only meaningful before it.
  BinauralBuffer process_linear(const BinauralBuffer& x) const;

  void calibrate(const HrtfSet& hrtfs, const SampleBuffer& reference,
                 double target_dbfs = kPresentationLevelDbfs);
};

/// Convenience: the two conditions of the experiments, calibrated with the
/// given reference stimulus.
struct ConditionPair {
  Chain natural;
  Chain enhanced;
};

ConditionPair make_condition_pair(const HrtfSet& hrtfs, const SampleBuffer& reference,
                                  const BeamformerParams& bf,
                                  const std::optional<BimodalSpec>& bimodal);

}  // namespace hse

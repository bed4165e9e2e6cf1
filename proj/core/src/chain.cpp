// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/chain.hpp"

#include "hse/dsp.hpp"
#include "hse/scene.hpp"

namespace hse {

BinauralBuffer Chain::process(const BinauralBuffer& x) const {
  BinauralBuffer y = enhance ? head_shadow_enhance(x, bf) : x;
  if (bimodal) {
    y = simulate_bimodal(y, bimodal->ci_side, bimodal->voc, bimodal->hl).out;
  }
  for (double& v : y.left.samples) v *= gain_left;
  for (double& v : y.right.samples) v *= gain_right;
  return y;
}

BinauralBuffer Chain::process_linear(const BinauralBuffer& x) const {
  return enhance ? head_shadow_enhance(x, bf) : x;
}

void Chain::calibrate(const HrtfSet& hrtfs, const SampleBuffer& reference,
                      double target_dbfs) {
  gain_left = 1.0;
  gain_right = 1.0;
  const BinauralBuffer rendered = render_scene(single_source_scene(0, reference), hrtfs);
  const BinauralBuffer processed = process(rendered);
  const double target = db_to_lin(target_dbfs);
  const double rms_l = rms(processed.left);
  const double rms_r = rms(processed.right);
  if (rms_l <= 0.0 || rms_r <= 0.0) {
    throw DataError("chain calibration: silent reference render");
  }
  gain_left = target / rms_l;
  gain_right = target / rms_r;
}

ConditionPair make_condition_pair(const HrtfSet& hrtfs, const SampleBuffer& reference,
                                  const BeamformerParams& bf,
                                  const std::optional<BimodalSpec>& bimodal) {
  ConditionPair pair;
  pair.natural.enhance = false;
  pair.natural.bf = bf;
  pair.natural.bimodal = bimodal;
  pair.enhanced.enhance = true;
  pair.enhanced.bf = bf;
  pair.enhanced.bimodal = bimodal;
  pair.natural.calibrate(hrtfs, reference);
  pair.enhanced.calibrate(hrtfs, reference);
  return pair;
}

}  // namespace hse

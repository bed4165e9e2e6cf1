// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/types.hpp"

#include <cmath>

namespace hse {

void validate_finite(const SampleBuffer& x, const std::string& what) {
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    if (!std::isfinite(x.samples[i])) {
      throw DataError(what + ": non-finite sample at index " + std::to_string(i));
    }
  }
}

}  // namespace hse

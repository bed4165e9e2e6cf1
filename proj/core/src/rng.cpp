// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/rng.hpp"

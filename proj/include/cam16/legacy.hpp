// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#pragma once

#include "cam16/types.hpp"

// Faithful transcription of the original CAM16 step definitions: the +0.1
// postadaptation offset, the -0.305 achromatic correction, s = 100*sqrt(M/Q),
// p_1 carrying a 1/t factor, and the sin/cos case split in the inverse.
// Algebraically equivalent to the main model away from degenerate inputs;
// kept as a differential-testing oracle and benchmark baseline. Degenerate
// values (division by zero, tiny residuals at black) surface as-is.
namespace cam16::legacy {

/// Original postadaptation response; equals cam16::postadapt(x, f_l) + 0.1.
double postadapt(double x, double f_l);

Correlates forward(const XyzColor& xyz, const ViewingConditions& vc);

XyzColor inverse(const CorrelateSelection& sel, const ViewingConditions& vc);

}  // namespace cam16::legacy

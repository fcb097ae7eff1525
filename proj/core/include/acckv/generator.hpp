// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "acckv/trace.hpp"

namespace acckv {

// Builds a synthetic trace for the given spec, deterministic in the seed.
//
// Attention regimes (per layer):
//   Uniform         A[i][j] = 1/(i+1) for j <= i; the equal-importance
//                   matrix whose raw column sums follow H_l - H_j.
//   Balanced        random rows; text queries split their mass so the
//                   post-redistribution priority weight w_video lands in
//                   [0.45, 0.55].
//   VideoConvergent low layers balanced; layers at index >=
//                   convergence_start_layer() target w_video in
//                   [0.85, 0.95].
//   AudioSalient    mirror image: high layers target w_video in
//                   [0.05, 0.15].
//
// Keys and values are i.i.d. standard normal; with key_mix = m > 0, audio
// keys become m * video_key + sqrt(1 - m^2) * noise so that cross-modal
// similarities are informative.
Trace generate_trace(const GeneratorSpec& spec);

}  // namespace acckv

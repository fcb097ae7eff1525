// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "acckv/redistribution.hpp"
#include "acckv/types.hpp"

namespace acckv {

// Per-layer modality priority. w_video + w_audio == 1 always, including the
// degenerate fallbacks.
struct FocusWeights {
    double w_video = 0.5;
    double w_audio = 0.5;
    double mean_video_score = 0.0;
    double mean_audio_score = 0.0;
};

struct MeanModalScores {
    double video = 0.0;
    double audio = 0.0;
};

// Mean text-query attention mass per token of each modality: the sum of
// score entries over text rows and modality columns, divided by the span
// length. An empty span contributes 0.
MeanModalScores mean_modal_scores(const RedistributedScores& scores, const ModalityLayout& layout);

// Normalizes the two mean scores into priority weights. Both-zero inputs
// fall back to (0.5, 0.5).
FocusWeights focus_weights(double mean_video_score, double mean_audio_score);

// Scales video columns by w_video and audio columns by w_audio. Text
// columns pass through untouched.
RedistributedScores apply_focus(RedistributedScores scores, const ModalityLayout& layout,
                                const FocusWeights& w);

// The layer's high-priority modality. Ties resolve to video.
Modality high_priority_modality(const FocusWeights& w);

}  // namespace acckv

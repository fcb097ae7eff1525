// SPDX-License-Identifier: Apache-2.0

#include "acckv/focusing.hpp"

namespace acckv {

namespace {

double span_mean(const Matrix& entries, const ModalityLayout& layout, std::size_t col_begin,
                 std::size_t col_end) {
    if (col_begin >= col_end) {
        return 0.0;
    }
    double total = 0.0;
    for (std::size_t i = layout.text_start; i < layout.seq_len; ++i) {
        for (std::size_t j = col_begin; j < col_end; ++j) {
            total += entries(i, j);
        }
    }
    return total / static_cast<double>(col_end - col_begin);
}

}  // namespace

MeanModalScores mean_modal_scores(const RedistributedScores& scores,
                                  const ModalityLayout& layout) {
    return {span_mean(scores.entries, layout, layout.video_start, layout.video_end),
            span_mean(scores.entries, layout, layout.audio_start, layout.audio_end)};
}

FocusWeights focus_weights(double mean_video_score, double mean_audio_score) {
    FocusWeights w;
    w.mean_video_score = mean_video_score;
    w.mean_audio_score = mean_audio_score;
    const double denom = mean_video_score + mean_audio_score;
    if (denom > 0.0) {
        w.w_video = mean_video_score / denom;
        w.w_audio = mean_audio_score / denom;
    } else {
        // No attention mass on either modality: nothing to prefer.
        w.w_video = 0.5;
        w.w_audio = 0.5;
    }
    return w;
}

RedistributedScores apply_focus(RedistributedScores scores, const ModalityLayout& layout,
                                const FocusWeights& w) {
    for (std::size_t i = 0; i < scores.size(); ++i) {
        for (std::size_t j = layout.video_start; j < layout.video_end && j <= i; ++j) {
            scores.entries(i, j) *= w.w_video;
        }
        for (std::size_t j = layout.audio_start; j < layout.audio_end && j <= i; ++j) {
            scores.entries(i, j) *= w.w_audio;
        }
    }
    return scores;
}

Modality high_priority_modality(const FocusWeights& w) {
    // Exact ties go to video: attention converges there in high layers.
    return w.w_audio > w.w_video ? Modality::Audio : Modality::Video;
}

}  // namespace acckv

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acckv/focusing.hpp"
#include "acckv/redistribution.hpp"
#include "acckv/types.hpp"

namespace acckv {

// Text-query cumulative score per multimodal token, indexed locally within
// each modality span.
struct CumulativeScores {
    std::vector<double> video;
    std::vector<double> audio;
};

CumulativeScores cumulative_scores(const RedistributedScores& scores, const ModalityLayout& layout);

// Budgeted split of the multimodal spans into retained and to-merge sets.
// All indices are global token indices, sorted ascending.
struct TopKSelection {
    std::vector<std::size_t> video_top;
    std::vector<std::size_t> audio_top;
    std::size_t n_video = 0;
    std::size_t n_audio = 0;
    std::vector<std::size_t> video_merge;
    std::vector<std::size_t> audio_merge;
};

// Indices of the k largest scores, ties broken toward the lower index.
// Returned sorted ascending. This is the selection before the per-modality
// representation guarantee is applied.
std::vector<std::size_t> topk_indices(const std::vector<double>& scores, std::size_t k);

// Picks the budget_k highest combined scores, then guarantees each modality
// at least one retained token: a modality whose count came out 0 is raised
// to 1 and the other modality drops its lowest-scoring pick, keeping
// n_video + n_audio == budget_k. Per-modality top sets are recomputed from
// the adjusted counts; merge sets are the span complements.
//
// Requires both spans non-empty and 2 <= budget_k <= multimodal count
// (throws BudgetError above the count). Degenerate single-modality layouts
// are handled by compress_layer.
TopKSelection select_topk(const CumulativeScores& scores, const ModalityLayout& layout,
                          std::size_t budget_k);

// Collapses the rows at merge_indices into one KV row. `scores` holds the
// per-source weights (same order as merge_indices) used by the score-based
// strategies. Empty merge set yields no token.
std::optional<MergedToken> merge_residual(const LayerKV& kv,
                                          const std::vector<std::size_t>& merge_indices,
                                          const std::vector<double>& scores,
                                          MergeStrategy strategy);

// Pairwise cosine similarity: entry (i, j) compares low-priority key row i
// against high-priority key row j. A zero vector has similarity 0 to
// everything. Throws ShapeError on mismatched key dimensions.
Matrix cross_modal_similarity(const Matrix& low_keys, const Matrix& high_keys);

struct AlignmentReport {
    Matrix similarity;                  // (low rows) x (high rows)
    std::vector<double> mean_similarity;
    std::vector<bool> kept_mask;        // kept_mask[i] == (mean_similarity[i] >= tau)
    double tau = 0.0;
};

// Averages each low-priority row's similarity over the high-priority axis
// and keeps rows with mean >= tau (strictly below is evicted).
AlignmentReport align_and_filter(const Matrix& similarity, double tau);

// Full per-layer pipeline: redistribute, focus, score, select, merge within
// each modality, align the low-priority modality against the high-priority
// one, evict below-threshold rows, and assemble the compacted cache as
// [high retained, high merged, surviving low retained + merged, text].
CompressionResult acckv_compress(const AttentionMatrix& a, const LayerKV& kv,
                                 const ModalityLayout& layout, const CompressionConfig& cfg);

}  // namespace acckv

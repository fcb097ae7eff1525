// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acckv/matrix.hpp"

namespace acckv {

// Row-sum tolerance accepted from softmax outputs stored as 64-bit floats.
inline constexpr double kRowSumTolerance = 1e-6;

enum class Modality { Video, Audio, Text };

// Contiguous video | audio | text partition of one token sequence.
// All ranges are half-open token index ranges.
struct ModalityLayout {
    std::size_t video_start = 0;
    std::size_t video_end = 0;
    std::size_t audio_start = 0;
    std::size_t audio_end = 0;
    std::size_t text_start = 0;
    std::size_t seq_len = 0;

    std::size_t video_count() const { return video_end - video_start; }
    std::size_t audio_count() const { return audio_end - audio_start; }
    std::size_t text_count() const { return seq_len - text_start; }
    std::size_t multimodal_count() const { return video_count() + audio_count(); }

    bool in_video(std::size_t j) const { return j >= video_start && j < video_end; }
    bool in_audio(std::size_t j) const { return j >= audio_start && j < audio_end; }
    bool in_text(std::size_t j) const { return j >= text_start && j < seq_len; }

    Modality modality_of(std::size_t j) const {
        if (in_video(j)) return Modality::Video;
        if (in_audio(j)) return Modality::Audio;
        return Modality::Text;
    }

    friend bool operator==(const ModalityLayout&, const ModalityLayout&) = default;
};

// Throws ConfigError when n_text == 0 (the text-query scores are undefined
// on an empty text span). Empty video or audio spans are allowed.
ModalityLayout build_layout(std::size_t n_video, std::size_t n_audio, std::size_t n_text);

// Lower-triangular row-stochastic attention for one layer (head-averaged).
class AttentionMatrix {
public:
    std::size_t size() const { return entries_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const Matrix& entries() const { return entries_; }

    friend bool operator==(const AttentionMatrix&, const AttentionMatrix&) = default;
    friend AttentionMatrix validate_attention(Matrix raw);

private:
    explicit AttentionMatrix(Matrix entries) : entries_(std::move(entries)) {}
    Matrix entries_;
};

// Accepts a square matrix that is lower-triangular, non-negative, and
// row-stochastic within kRowSumTolerance. Throws ShapeError on a non-square
// input, CausalityViolation on upper-triangle mass, NotStochastic otherwise.
AttentionMatrix validate_attention(Matrix raw);

// Per-layer key and value rows. keys and values always share a shape.
struct LayerKV {
    Matrix keys;
    Matrix values;

    std::size_t rows() const { return keys.rows(); }
    std::size_t head_dim() const { return keys.cols(); }

    friend bool operator==(const LayerKV&, const LayerKV&) = default;
};

// Gathers rows at strictly increasing indices. Throws IndexError when an
// index is out of range or the list is not strictly increasing.
LayerKV slice_kv(const LayerKV& kv, const std::vector<std::size_t>& indices);

enum class MergeStrategy { Average, ScoreWeighted, NormalizedScoreWeighted };

enum class Policy {
    FullCache,
    AccKV,
    H2O,
    SnapKV,
    NaiveCrossMerge,
    EvictAllAudio,
    EvictAllVideo,
    EvictAudioHighLayers,
    EvictVideoHighLayers,
};

const char* to_string(Policy policy);
const char* to_string(MergeStrategy strategy);
const char* to_string(Modality modality);

struct CompressionConfig {
    Policy policy = Policy::AccKV;
    std::size_t budget_k = 0;
    double tau = 0.9;
    MergeStrategy merge_strategy = MergeStrategy::Average;
    // SnapKV observation window (query rows scored).
    std::size_t snapkv_window = 32;
    // First layer index affected by the *HighLayers eviction policies.
    std::size_t high_layer_start = 0;

    // Throws ConfigError on out-of-range values (tau outside [0,1],
    // budget_k < 2 for AccKV, budget_k < 1 for the budgeted baselines,
    // snapkv_window < 1).
    void validate() const;

    bool is_budgeted() const {
        return policy == Policy::AccKV || policy == Policy::H2O ||
               policy == Policy::SnapKV || policy == Policy::NaiveCrossMerge;
    }
};

// One merged KV row standing in for a set of source rows.
struct MergedToken {
    std::vector<double> key_row;
    std::vector<double> value_row;
    std::size_t source_count = 0;

    friend bool operator==(const MergedToken&, const MergedToken&) = default;
};

struct ResultStats {
    std::size_t n_retained_video = 0;
    std::size_t n_retained_audio = 0;
    std::size_t n_merged_source_video = 0;
    std::size_t n_merged_source_audio = 0;
    std::size_t n_evicted = 0;
    std::size_t merged_rows_present = 0;
    // Mean of the per-row mean cross-modal similarities; absent when the
    // policy performed no alignment.
    std::optional<double> mean_alignment_similarity;
    // Layer focus weights and the resulting priority; set by AccKV only.
    std::optional<double> focus_video_weight;
    std::optional<double> focus_audio_weight;
    std::optional<Modality> high_priority;
    // Final rows / original rows (text included).
    double retained_ratio = 1.0;
    // Final multimodal rows (merged included) / original multimodal rows.
    // 1.0 when the layout has no multimodal tokens.
    double multimodal_retained_ratio = 1.0;
};

// Outcome of compressing one layer. Every original index lands in exactly
// one of: retained, merged-source, evicted, or the text span.
struct CompressionResult {
    std::vector<std::size_t> retained_video_indices;
    std::vector<std::size_t> retained_audio_indices;
    // Merged rows present in final_kv. A per-modality merged row can be
    // absent either because the merge set was empty or because alignment
    // evicted it; merged_*_sources records which tokens fed the merge.
    std::optional<MergedToken> merged_video;
    std::optional<MergedToken> merged_audio;
    // Single cross-modal merged row (NaiveCrossMerge only).
    std::optional<MergedToken> merged_cross;
    std::vector<std::size_t> merged_video_sources;
    std::vector<std::size_t> merged_audio_sources;
    std::vector<std::size_t> evicted_indices;
    LayerKV final_kv;
    ResultStats stats;
};

}  // namespace acckv

// SPDX-License-Identifier: Apache-2.0

#include "acckv/types.hpp"

#include <cmath>
#include <string>

#include "acckv/errors.hpp"

namespace acckv {

ModalityLayout build_layout(std::size_t n_video, std::size_t n_audio, std::size_t n_text) {
    if (n_text == 0) {
        throw ConfigError("layout requires a non-empty text span");
    }
    ModalityLayout layout;
    layout.video_start = 0;
    layout.video_end = n_video;
    layout.audio_start = n_video;
    layout.audio_end = n_video + n_audio;
    layout.text_start = n_video + n_audio;
    layout.seq_len = n_video + n_audio + n_text;
    return layout;
}

AttentionMatrix validate_attention(Matrix raw) {
    if (raw.rows() != raw.cols()) {
        throw ShapeError("attention matrix must be square, got " + std::to_string(raw.rows()) +
                         "x" + std::to_string(raw.cols()));
    }
    const std::size_t l = raw.rows();
    for (std::size_t i = 0; i < l; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < l; ++j) {
            const double v = raw(i, j);
            if (j > i && v != 0.0) {
                throw CausalityViolation("nonzero entry above the diagonal at (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");
            }
            if (v < 0.0 || !std::isfinite(v)) {
                throw NotStochastic("entry at (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") is not a probability: " + std::to_string(v));
            }
            row_sum += v;
        }
        if (std::abs(row_sum - 1.0) > kRowSumTolerance) {
            throw NotStochastic("row " + std::to_string(i) + " sums to " +
                                std::to_string(row_sum));
        }
    }
    return AttentionMatrix(std::move(raw));
}

LayerKV slice_kv(const LayerKV& kv, const std::vector<std::size_t>& indices) {
    const std::size_t l = kv.rows();
    for (std::size_t pos = 0; pos < indices.size(); ++pos) {
        if (indices[pos] >= l) {
            throw IndexError("gather index " + std::to_string(indices[pos]) +
                             " out of range for " + std::to_string(l) + " rows");
        }
        if (pos > 0 && indices[pos] <= indices[pos - 1]) {
            throw IndexError("gather indices must be strictly increasing");
        }
    }
    LayerKV out;
    out.keys = Matrix(indices.size(), kv.head_dim());
    out.values = Matrix(indices.size(), kv.head_dim());
    for (std::size_t pos = 0; pos < indices.size(); ++pos) {
        for (std::size_t c = 0; c < kv.head_dim(); ++c) {
            out.keys(pos, c) = kv.keys(indices[pos], c);
            out.values(pos, c) = kv.values(indices[pos], c);
        }
    }
    return out;
}

const char* to_string(Policy policy) {
    switch (policy) {
        case Policy::FullCache: return "full";
        case Policy::AccKV: return "acckv";
        case Policy::H2O: return "h2o";
        case Policy::SnapKV: return "snapkv";
        case Policy::NaiveCrossMerge: return "naive-cross-merge";
        case Policy::EvictAllAudio: return "evict-audio";
        case Policy::EvictAllVideo: return "evict-video";
        case Policy::EvictAudioHighLayers: return "evict-audio-high";
        case Policy::EvictVideoHighLayers: return "evict-video-high";
    }
    return "unknown";
}

const char* to_string(MergeStrategy strategy) {
    switch (strategy) {
        case MergeStrategy::Average: return "average";
        case MergeStrategy::ScoreWeighted: return "score-weighted";
        case MergeStrategy::NormalizedScoreWeighted: return "normalized-score-weighted";
    }
    return "unknown";
}

const char* to_string(Modality modality) {
    switch (modality) {
        case Modality::Video: return "video";
        case Modality::Audio: return "audio";
        case Modality::Text: return "text";
    }
    return "unknown";
}

void CompressionConfig::validate() const {
    if (tau < 0.0 || tau > 1.0 || !std::isfinite(tau)) {
        throw ConfigError("tau must lie in [0, 1], got " + std::to_string(tau));
    }
    if (policy == Policy::AccKV && budget_k < 2) {
        throw ConfigError("acckv needs budget_k >= 2 to keep both modalities represented");
    }
    if (is_budgeted() && budget_k < 1) {
        throw ConfigError("budget_k must be >= 1");
    }
    if (policy == Policy::SnapKV && snapkv_window < 1) {
        throw ConfigError("snapkv window must be >= 1");
    }
}

}  // namespace acckv

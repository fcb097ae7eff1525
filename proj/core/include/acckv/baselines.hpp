// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "acckv/types.hpp"

namespace acckv {

// Reference policies reduced to their scoring essence. All keep the text
// span verbatim; none merges except naive_cross_merge.

// Identity policy: the cache passes through unchanged.
CompressionResult full_cache(const LayerKV& kv, const ModalityLayout& layout);

// Heavy-hitter selection on raw cumulative column sums over all query rows.
// Retains the top-k multimodal tokens, evicts the rest.
CompressionResult h2o_compress(const AttentionMatrix& a, const LayerKV& kv,
                               const ModalityLayout& layout, std::size_t k);

// Like h2o but scores only the last `window` query rows.
CompressionResult snapkv_compress(const AttentionMatrix& a, const LayerKV& kv,
                                  const ModalityLayout& layout, std::size_t k,
                                  std::size_t window);

// Top-k as h2o, then averages ALL residual video and audio rows into a
// single cross-modal row: the heterogeneous-merge conflict case.
CompressionResult naive_cross_merge(const AttentionMatrix& a, const LayerKV& kv,
                                    const ModalityLayout& layout, std::size_t k);

// Drops the whole chosen modality span once layer_idx >= high_layer_start;
// identity below that. high_layer_start == 0 evicts at every layer.
CompressionResult evict_modality(const LayerKV& kv, const ModalityLayout& layout, Modality which,
                                 std::size_t layer_idx, std::size_t high_layer_start);

}  // namespace acckv

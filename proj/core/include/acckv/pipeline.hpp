// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acckv/types.hpp"

namespace acckv {

// Runs the configured policy on one layer. layer_idx only matters for the
// *HighLayers eviction policies.
CompressionResult compress_layer(const AttentionMatrix& a, const LayerKV& kv,
                                 const ModalityLayout& layout, const CompressionConfig& cfg,
                                 std::size_t layer_idx = 0);

// Post-hoc structural checks on a result: budget compliance, text-span
// immunity, and the retained/merged/evicted/text partition of the original
// indices. Returns human-readable violation descriptions; empty means clean.
std::vector<std::string> check_result_invariants(const CompressionResult& result,
                                                 const LayerKV& original,
                                                 const ModalityLayout& layout,
                                                 const CompressionConfig& cfg);

}  // namespace acckv

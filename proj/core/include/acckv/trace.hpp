// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "acckv/types.hpp"

namespace acckv {

enum class Regime { Uniform, Balanced, VideoConvergent, AudioSalient };

const char* to_string(Regime regime);
Regime regime_from_string(const std::string& name);  // throws ConfigError

struct GeneratorSpec {
    std::size_t n_video = 0;
    std::size_t n_audio = 0;
    std::size_t n_text = 1;
    std::size_t num_layers = 1;
    std::size_t d_k = 8;
    Regime regime = Regime::Balanced;
    // Layers at index >= ceil(fraction * num_layers) use the convergent
    // attention pattern; must lie in [0, 1].
    double convergence_start_fraction = 0.5;
    // Correlation coefficient mixing audio keys with video keys, in [0, 1].
    double key_mix = 0.0;
    std::uint64_t seed = 0;

    // Throws ConfigError on invalid counts or out-of-range fractions.
    void validate() const;

    // First layer index of the convergent phase.
    std::size_t convergence_start_layer() const;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct TraceLayer {
    AttentionMatrix attention;
    LayerKV kv;

    friend bool operator==(const TraceLayer&, const TraceLayer&) = default;
};

// Attention + KV for every layer of one prefill, with the generator
// metadata that produced it.
struct Trace {
    ModalityLayout layout;
    std::size_t d_k = 0;
    GeneratorSpec spec;
    // Unrecognized header lines, preserved for round-tripping.
    std::vector<std::pair<std::string, std::string>> extra_metadata;
    std::vector<TraceLayer> layers;

    std::size_t num_layers() const { return layers.size(); }
    std::size_t seq_len() const { return layout.seq_len; }

    friend bool operator==(const Trace&, const Trace&) = default;
};

// .avtrace container: text header (key: value lines, "---" terminator)
// followed by raw little-endian float64 blocks per layer, attention
// row-major, then keys, then values. See docs/trace_format.md.
void write_trace(const Trace& trace, const std::filesystem::path& path);

// Throws FormatError on corrupt/truncated files, VersionError on an
// unsupported format version. Every layer's attention matrix is
// re-validated on load.
Trace read_trace(const std::filesystem::path& path);

}  // namespace acckv

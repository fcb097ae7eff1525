// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace acckv {

// Deterministic random source for trace generation. The base engine is
// mt19937_64 (fully specified by the C++ standard) and every distribution
// below is an explicit transform of its output, so the same seed produces
// the same trace on any conforming platform. std::*_distribution is
// deliberately avoided: its output is implementation-defined.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1): top 53 bits of the engine output.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; draws are produced in pairs.
    double normal();

    // Exp(1) sample, strictly positive.
    double exponential();

    // n positive weights summing to 1 (normalized Exp(1) draws), i.e. a
    // flat Dirichlet sample.
    std::vector<double> simplex(std::size_t n);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// SplitMix64 finalizer; used to derive independent per-layer streams from
// one trace seed.
std::uint64_t splitmix64(std::uint64_t x);

// Stream id for (seed, layer, purpose) so attention and KV draws never
// share a sequence.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t layer, std::uint64_t purpose);

}  // namespace acckv

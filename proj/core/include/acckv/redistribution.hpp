// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acckv/types.hpp"

namespace acckv {

// Attention scores after the positional-bias correction. Rows no longer
// sum to 1; the entries are used for ranking and weighting only.
struct RedistributedScores {
    Matrix entries;

    std::size_t size() const { return entries.rows(); }

    friend bool operator==(const RedistributedScores&, const RedistributedScores&) = default;
};

// Reweights entry (i, j) by (i + 1) / (l - j). Zeros stay zero; the
// denominator is at least 1 for every column.
RedistributedScores redistribute(const AttentionMatrix& a);

// Column sums of the raw attention matrix: the cumulative score that
// heavy-hitter selection ranks by before any bias correction.
std::vector<double> raw_column_sums(const AttentionMatrix& a);

// Column sums of an arbitrary score matrix.
std::vector<double> column_sums(const Matrix& m);

// The uniform causal matrix A[i][j] = 1/(i+1) for j <= i, under which every
// token is equally important by construction.
AttentionMatrix uniform_attention(std::size_t l);

struct UniformColumnOracle {
    std::vector<double> raw;            // expected: H_l - H_j
    std::vector<double> redistributed;  // expected: all 1
};

// Builds the uniform matrix for length l and returns both column-sum
// vectors, computed by direct summation.
UniformColumnOracle uniform_column_oracle(std::size_t l);

// n-th harmonic number by direct summation.
double harmonic_number(std::size_t n);

struct ProofFault {
    std::size_t l = 0;
    std::size_t j = 0;
};

struct ProofReport {
    bool passed = true;
    std::size_t max_l = 0;
    double worst_raw_deviation = 0.0;
    double worst_redistributed_deviation = 0.0;
    // Location of the worst deviation overall.
    std::size_t worst_l = 0;
    std::size_t worst_j = 0;
    double tolerance = 1e-9;
};

// Checks, for every l in [1, max_l], that the uniform matrix's raw column
// sums equal H_l - H_j and its redistributed column sums equal 1, both
// within `tolerance`. `fault` perturbs one redistributed sum before the
// comparison; it exists so the failure path is exercisable.
ProofReport verify_redistribution_proof(std::size_t max_l, double tolerance = 1e-9,
                                        std::optional<ProofFault> fault = std::nullopt);

}  // namespace acckv

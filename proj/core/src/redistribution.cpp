// SPDX-License-Identifier: Apache-2.0

#include "acckv/redistribution.hpp"

#include <cmath>

namespace acckv {

RedistributedScores redistribute(const AttentionMatrix& a) {
    const std::size_t l = a.size();
    RedistributedScores out{Matrix(l, l)};
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double weight = static_cast<double>(i + 1) / static_cast<double>(l - j);
            out.entries(i, j) = weight * a(i, j);
        }
    }
    return out;
}

std::vector<double> column_sums(const Matrix& m) {
    std::vector<double> sums(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            sums[j] += m(i, j);
        }
    }
    return sums;
}

std::vector<double> raw_column_sums(const AttentionMatrix& a) {
    return column_sums(a.entries());
}

AttentionMatrix uniform_attention(std::size_t l) {
    Matrix m(l, l);
    for (std::size_t i = 0; i < l; ++i) {
        const double mass = 1.0 / static_cast<double>(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            m(i, j) = mass;
        }
    }
    return validate_attention(std::move(m));
}

UniformColumnOracle uniform_column_oracle(std::size_t l) {
    const AttentionMatrix uniform = uniform_attention(l);
    UniformColumnOracle oracle;
    oracle.raw = raw_column_sums(uniform);
    oracle.redistributed = column_sums(redistribute(uniform).entries);
    return oracle;
}

double harmonic_number(std::size_t n) {
    double h = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        h += 1.0 / static_cast<double>(k);
    }
    return h;
}

ProofReport verify_redistribution_proof(std::size_t max_l, double tolerance,
                                        std::optional<ProofFault> fault) {
    ProofReport report;
    report.max_l = max_l;
    report.tolerance = tolerance;
    for (std::size_t l = 1; l <= max_l; ++l) {
        UniformColumnOracle oracle = uniform_column_oracle(l);
        const double h_l = harmonic_number(l);
        for (std::size_t j = 0; j < l; ++j) {
            if (fault && fault->l == l && fault->j == j) {
                oracle.redistributed[j] += 0.5;
            }
            const double raw_dev = std::abs(oracle.raw[j] - (h_l - harmonic_number(j)));
            const double redist_dev = std::abs(oracle.redistributed[j] - 1.0);
            const double worst_here = std::max(raw_dev, redist_dev);
            if (worst_here > std::max(report.worst_raw_deviation,
                                      report.worst_redistributed_deviation)) {
                report.worst_l = l;
                report.worst_j = j;
            }
            report.worst_raw_deviation = std::max(report.worst_raw_deviation, raw_dev);
            report.worst_redistributed_deviation =
                std::max(report.worst_redistributed_deviation, redist_dev);
        }
    }
    report.passed = report.worst_raw_deviation <= tolerance &&
                    report.worst_redistributed_deviation <= tolerance;
    return report;
}

}  // namespace acckv

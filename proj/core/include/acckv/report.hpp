// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acckv/trace.hpp"
#include "acckv/types.hpp"

namespace acckv {

inline constexpr int kReportSchemaVersion = 1;

struct LayerReport {
    std::size_t layer = 0;
    ResultStats stats;
};

struct AggregateReport {
    double retained_ratio_mean = 1.0;
    double multimodal_retained_ratio_mean = 1.0;
    // Mean over layers that performed alignment; absent when none did.
    std::optional<double> mean_alignment_similarity;
    // Per-layer multimodal retention, in layer order.
    std::vector<double> retention_curve;
    // Count of layers violating any structural invariant; 0 on success.
    std::size_t budget_violations = 0;
    std::vector<std::string> violation_details;
};

struct RunReport {
    int schema_version = kReportSchemaVersion;
    CompressionConfig config;
    // Budget as requested on the command line, when it was a fraction.
    std::optional<double> budget_fraction;
    std::string trace_path;
    GeneratorSpec trace_spec;
    std::vector<LayerReport> layers;
    AggregateReport aggregate;
};

// Compresses every layer of the trace under cfg and aggregates. Layers are
// independent; `threads` > 1 processes them concurrently. The invariant
// checks behind AggregateReport::budget_violations run on every layer.
RunReport run_policy_over_trace(const Trace& trace, const CompressionConfig& cfg,
                                std::size_t threads = 1);

// Keeps only the per-layer compression results; used when the compacted
// caches themselves are wanted.
std::vector<CompressionResult> compress_trace(const Trace& trace, const CompressionConfig& cfg,
                                              std::size_t threads = 1);

std::string report_to_json(const RunReport& report, int indent = 2);

// tau grid used by the sweep default: {0.01, 0.1, 0.2, ..., 1.0}.
std::vector<double> default_tau_grid();

struct SweepRow {
    std::string policy;
    double tau = 0.0;
    std::size_t budget_k = 0;
    std::optional<double> budget_fraction;
    double multimodal_retained_ratio = 1.0;
    double retained_ratio = 1.0;
    std::optional<double> mean_similarity;
};

// Header: policy,tau,budget_k,budget_fraction,multimodal_retained_ratio,
// retained_ratio,mean_similarity
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

SweepRow sweep_row_from_report(const RunReport& report);

// Budget flag semantics: values <= 1 (or containing a '.') are a fraction
// of the multimodal token count, converted with ceiling; larger integers
// are an absolute token count.
std::size_t resolve_budget(double budget_flag, const ModalityLayout& layout,
                           std::optional<double>* fraction_out = nullptr);

}  // namespace acckv

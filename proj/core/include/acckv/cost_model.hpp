// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace acckv {

// Analytic decode-cost model. Costs are abstract operation counts, not
// wall-clock time.
struct CostQuery {
    std::uint64_t prefill_len = 1;  // l
    std::uint64_t generated = 1;    // n
    std::uint64_t head_dim = 1;     // d_k

    // Throws ConfigError unless all fields are >= 1.
    void validate() const;
};

enum class LogBase { Natural, Base2 };

const char* to_string(LogBase base);

// Dense-cache decode cost: 4*n*l*d_k + 2*n*(n-1)*d_k.
double cost_raw(const CostQuery& q);

// The same total by direct summation of the per-step cost 4*(l+i)*d_k,
// i in [0, n). Equals cost_raw bit-exactly for integer inputs.
double cost_raw_oracle(const CostQuery& q);

// Compressed-cache decode cost:
// (0.5 + 0.0025*d_k)*l^2 + l*log(l) + (2.5 + 0.9*d_k + 0.4*n*d_k)*l
// + 2*n*(n-1)*d_k.
double cost_acckv(const CostQuery& q, LogBase base = LogBase::Base2);

struct CostSavings {
    // cost_raw - cost_acckv.
    double exact = 0.0;
    // 3.6*n*d_k - (0.5 + 0.0025*d_k)*l - log(l) - 2.5 - 0.9*d_k.
    // Algebraically this is exact / l.
    double per_token_form = 0.0;
};

CostSavings cost_savings(const CostQuery& q, LogBase base = LogBase::Base2);

}  // namespace acckv

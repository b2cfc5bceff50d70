#ifndef BPART_ASYMPTOTICS_HPP
#define BPART_ASYMPTOTICS_HPP

#include <string>

#include "bpart/saddle.hpp"
#include "bpart/types.hpp"

namespace bpart {

// Closed-form count estimates, always handled in natural-log space (the
// counts themselves have thousands of digits by n ~ 2000).

enum class EstimateTarget { M, N, NSimplified };

struct LogScaleEstimate {
    long long n = 0;
    EstimateTarget target = EstimateTarget::M;
    double log_value = 0;          // natural log of the estimated count
    std::string remainder_order;   // error order of the estimate, for reports
};

// log M_n ~ -log(2 r1 + 1)/2 + 2 n r1 - n + n/(2 r1) + 2 r1 - 1,
// with r1 the saddle radius for c = 1. Requires n >= 2.
LogScaleEstimate log_m_asymptotic(long long n);

// log N_n ~ -log(2 r0 + 1)/2 + 2 n r0 - n + n/(2 r0) - 1/2, r0 the c = 0
// saddle radius. The simplified form replaces the prefactor by
// -log(log n)/2. Requires n >= 3.
LogScaleEstimate log_n_asymptotic(long long n, bool simplified = false);

// Natural log of a positive big integer via mantissa + exponent
// (value = d * 2^e with 0.5 <= |d| < 1), accurate to ~1e-15 relative.
double log_of_bigint(const BigInt& value);

// Scaled relative error of a log-space estimate against the exact value:
// |exp(log_est - log_exact) - 1| * sqrt(n) / log(n)^{7/2}. The raw relative
// error of the count estimates carries this order, so boundedness over a
// sweep is the testable statement.
double count_estimate_scaled_error(double log_estimate, double log_exact, long long n);

struct RatioCheck {
    double exact_ratio = 0;       // N_n / M_n
    double asymptotic_ratio = 0;  // sqrt(log n / (2n))
    double scaled_error = 0;      // exact/asymptotic - 1
};

RatioCheck ratio_nm_check(long long n, const BigInt& n_count, const BigInt& m_count);

// (n (r0 - r1) - r0/2 + 1/4) * log n: the scaled residual of the saddle-gap
// expansion n (r0 - r1) = r0/2 - 1/4 + O(1/log n). Requires n >= 3.
double saddle_gap_scaled_residual(long long n);

}  // namespace bpart

#endif  // BPART_ASYMPTOTICS_HPP

#include "bpart/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace bpart {

LogScaleEstimate log_m_asymptotic(long long n) {
    if (n < 2) throw std::invalid_argument("log_m_asymptotic: n must be >= 2");
    const SaddleRoot root = solve_saddle(static_cast<long double>(n), 1);
    const long double r = root.r;
    const long double value =
        -std::log(root.two_r_plus_1) / 2 + 2 * n * r - n + n / (2 * r) + 2 * r - 1;
    return LogScaleEstimate{n, EstimateTarget::M, static_cast<double>(value),
                            "log^(7/2)(n)/sqrt(n)"};
}

LogScaleEstimate log_n_asymptotic(long long n, bool simplified) {
    if (n < 3) throw std::invalid_argument("log_n_asymptotic: n must be >= 3");
    const SaddleRoot root = solve_saddle(static_cast<long double>(n), 0);
    const long double r = root.r;
    const long double core = 2 * n * r - n + n / (2 * r) - 0.5L;
    const long double prefactor =
        simplified ? -std::log(std::log(static_cast<long double>(n))) / 2
                   : -std::log(root.two_r_plus_1) / 2;
    return LogScaleEstimate{n,
                            simplified ? EstimateTarget::NSimplified : EstimateTarget::N,
                            static_cast<double>(prefactor + core),
                            simplified ? "1/sqrt(log n) prefactor form"
                                       : "log^(7/2)(n)/sqrt(n)"};
}

double log_of_bigint(const BigInt& value) {
    if (value <= 0) throw std::invalid_argument("log_of_bigint: value must be > 0");
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    const long double result =
        std::log(static_cast<long double>(mantissa)) + exp2 * std::log(2.0L);
    return static_cast<double>(result);
}

double count_estimate_scaled_error(double log_estimate, double log_exact, long long n) {
    const double rel_err = std::fabs(std::expm1(log_estimate - log_exact));
    const double log_n = std::log(static_cast<double>(n));
    return rel_err * std::sqrt(static_cast<double>(n)) / std::pow(log_n, 3.5);
}

RatioCheck ratio_nm_check(long long n, const BigInt& n_count, const BigInt& m_count) {
    if (n < 2) throw std::invalid_argument("ratio_nm_check: n must be >= 2");
    if (m_count <= 0 || n_count <= 0)
        throw std::invalid_argument("ratio_nm_check: counts must be positive");
    BigRat ratio(n_count, m_count);
    ratio.canonicalize();
    RatioCheck out;
    out.exact_ratio = ratio.get_d();
    out.asymptotic_ratio = std::sqrt(std::log(static_cast<double>(n)) / (2.0 * n));
    out.scaled_error = out.exact_ratio / out.asymptotic_ratio - 1;
    return out;
}

double saddle_gap_scaled_residual(long long n) {
    if (n < 3) throw std::invalid_argument("saddle_gap_scaled_residual: n must be >= 3");
    const long double nl = static_cast<long double>(n);
    const long double r0 = solve_saddle(nl, 0).r;
    const long double r1 = solve_saddle(nl, 1).r;
    const long double residual = nl * (r0 - r1) - r0 / 2 + 0.25L;
    return static_cast<double>(residual * std::log(nl));
}

}  // namespace bpart

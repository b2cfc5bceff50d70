#include "bpart/contour.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bpart/saddle.hpp"

namespace bpart {

namespace {

constexpr double kPi = std::numbers::pi;

struct ExponentLD {
    long double re;
    long double im;
};

ExponentLD exponent_a_ld(long double r, long double theta, long double n) {
    const long double ct = std::cos(theta);
    const long double st = std::sin(theta);
    const long double radial = std::exp(2 * r * ct) / 2;
    return ExponentLD{radial * std::cos(2 * r * st) + r * ct,
                      radial * std::sin(2 * r * st) + r * st - n * theta};
}

// h * sum of exp(A - peak) over nodes a + j h, j in [0, count).
// Returns separate real/imag accumulations.
struct ArcSum {
    long double re = 0;
    long double im = 0;
};

ArcSum scaled_sum(long double r, long double n, long double peak, long double a,
                  long double h, long long count, long double endpoint_weight_a,
                  long double endpoint_weight_b) {
    ArcSum s;
    for (long long j = 0; j < count; ++j) {
        const long double theta = a + j * h;
        const ExponentLD e = exponent_a_ld(r, theta, n);
        const long double mag = std::exp(e.re - peak);
        long double w = 1;
        if (j == 0) w = endpoint_weight_a;
        if (j == count - 1) w = endpoint_weight_b;
        s.re += w * mag * std::cos(e.im);
        s.im += w * mag * std::sin(e.im);
    }
    s.re *= h;
    s.im *= h;
    return s;
}

}  // namespace

ContourSpec make_contour_spec(long long n) {
    if (n < 1) throw std::invalid_argument("make_contour_spec: n must be >= 1");
    ContourSpec spec;
    spec.n = n;
    spec.radius = static_cast<double>(solve_saddle(static_cast<long double>(n), 1).r);
    spec.node_count = 64;
    spec.theta0 = std::sqrt(2 * std::log(static_cast<double>(n)) / static_cast<double>(n));
    return spec;
}

ExponentA exponent_a(double r, double theta, long long n) {
    if (!(r > 0)) throw std::invalid_argument("exponent_a: r must be > 0");
    const ExponentLD e = exponent_a_ld(r, theta, static_cast<long double>(n));
    return ExponentA{r, theta, static_cast<double>(e.re), static_cast<double>(e.im)};
}

QuadratureResult cauchy_coefficient(const ContourSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("cauchy_coefficient: n must be >= 1");
    if (!(spec.radius > 0))
        throw std::invalid_argument("cauchy_coefficient: radius must be > 0");
    if (spec.node_count < 16 || (spec.node_count & (spec.node_count - 1)) != 0)
        throw std::invalid_argument("cauchy_coefficient: node_count must be a power of two >= 16");

    const long double r = spec.radius;
    const long double n = static_cast<long double>(spec.n);
    const long double peak = std::exp(2 * r) / 2 + r;  // Re A at theta = 0

    const int max_doublings = 14;
    long double prev_log = 0;
    bool have_prev = false;
    long long nodes = spec.node_count;
    for (int pass = 0; pass <= max_doublings; ++pass, nodes *= 2) {
        // Periodic trapezoid: nodes -pi + j h, j in [0, nodes), equal weights.
        const long double h = 2 * static_cast<long double>(kPi) / nodes;
        const ArcSum s = scaled_sum(r, n, peak, -static_cast<long double>(kPi), h,
                                    nodes, 1, 1);
        if (!(s.re > 0))
            throw std::runtime_error("cauchy_coefficient: non-positive integral estimate");
        if (std::fabs(s.im) > 1e-9L * std::fabs(s.re))
            throw std::runtime_error("cauchy_coefficient: integrand symmetry violated");
        const long double log_integral = peak + std::log(s.re);
        const long double log_value =
            log_integral - 0.5L - n * std::log(r) - std::log(2 * static_cast<long double>(kPi));
        if (have_prev && std::fabs(log_value - prev_log) <= 1e-9L)
            return QuadratureResult{static_cast<double>(log_value),
                                    static_cast<int>(nodes)};
        prev_log = log_value;
        have_prev = true;
    }
    throw std::runtime_error("cauchy_coefficient: no convergence after 14 doublings");
}

double central_arc_estimate(long long n) {
    if (n < 3) throw std::invalid_argument("central_arc_estimate: n must be >= 3");
    const SaddleRoot root = solve_saddle(static_cast<long double>(n), 1);
    const long double value =
        (root.exp_2r + 2 * root.r) / 2 +
        (std::log(2 * static_cast<long double>(kPi)) -
         std::log(root.two_r_plus_1 * static_cast<long double>(n))) /
            2;
    return static_cast<double>(value);
}

double central_arc_numeric(long long n) {
    if (n < 3) throw std::invalid_argument("central_arc_numeric: n must be >= 3");
    const ContourSpec spec = make_contour_spec(n);
    const long double r = spec.radius;
    const long double nl = static_cast<long double>(n);
    const long double theta0 = spec.theta0;
    const long double peak = std::exp(2 * r) / 2 + r;

    // Plain trapezoid on [-theta0, theta0] with doubling; the integrand is
    // conjugate-symmetric, so only the real part survives.
    long double prev = 0;
    bool have_prev = false;
    for (long long nodes = 65; nodes <= (1LL << 22) + 1; nodes = 2 * nodes - 1) {
        const long double h = 2 * theta0 / (nodes - 1);
        const ArcSum s =
            scaled_sum(r, nl, peak, -theta0, h, nodes, 0.5L, 0.5L);
        const long double log_value = peak + std::log(s.re);
        if (have_prev && std::fabs(log_value - prev) <= 1e-10L)
            return static_cast<double>(log_value);
        prev = log_value;
        have_prev = true;
    }
    throw std::runtime_error("central_arc_numeric: no convergence");
}

double tail_integral_log_abs(long long n) {
    if (n < 3) throw std::invalid_argument("tail_integral_log_abs: n must be >= 3");
    const ContourSpec spec = make_contour_spec(n);
    const long double r = spec.radius;
    const long double nl = static_cast<long double>(n);
    const long double theta0 = spec.theta0;
    // Tail maximum sits at theta0 (Re A decreases away from 0).
    const long double peak = exponent_a_ld(r, theta0, nl).re;

    // Int over theta0 <= |theta| <= pi equals twice the real part of the
    // positive half by conjugate symmetry. Oscillation frequency is ~n, so
    // resolve with node counts well past n before trusting agreement.
    long double prev = 0;
    bool have_prev = false;
    for (long long nodes = 1025; nodes <= (1LL << 24) + 1; nodes = 2 * nodes - 1) {
        const long double h = (static_cast<long double>(kPi) - theta0) / (nodes - 1);
        const ArcSum s = scaled_sum(r, nl, peak, theta0, h, nodes, 0.5L, 0.5L);
        const long double value = 2 * s.re;
        if (have_prev && nodes > 8 * n &&
            std::fabs(value - prev) <= 1e-9L * std::max(std::fabs(value), 1e-30L))
            return static_cast<double>(peak + std::log(std::fabs(value)));
        prev = value;
        have_prev = true;
    }
    // Cancellation below resolvable level: bound by the last estimate.
    return static_cast<double>(peak + std::log(std::max(std::fabs(prev), 1e-30L)));
}

double central_arc_remainder_log(long long n) {
    if (n < 3) throw std::invalid_argument("central_arc_remainder_log: n must be >= 3");
    const SaddleRoot root = solve_saddle(static_cast<long double>(n), 1);
    const ContourSpec spec = make_contour_spec(n);
    const long double theta0 = spec.theta0;
    const long double remainder_factor =
        static_cast<long double>(n) * root.r * root.r * theta0 * theta0 * theta0;
    return central_arc_estimate(n) + static_cast<double>(std::log(remainder_factor));
}

}  // namespace bpart

#include "bpart/saddle.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace bpart {

namespace {

long double f_eval(long double x, int c) { return x * (std::exp(2 * x) + c); }

long double f_prime(long double x, int c) {
    return std::exp(2 * x) * (2 * x + 1) + c;
}

}  // namespace

SaddleRoot solve_saddle(long double n, int c, SolveTol tol) {
    if (!(n >= 1)) throw std::invalid_argument("solve_saddle: n must be >= 1");
    if (c < 0) throw std::invalid_argument("solve_saddle: c must be >= 0");
    if (!(tol.abs >= 0) || !(tol.rel > 0))
        throw std::invalid_argument("solve_saddle: bad tolerance");

    const long double log_n = std::log(n);
    long double r = std::max(std::log(n / std::max(log_n, 1.0L)) / 2, 0.1L);

    // Certified bracket: f(0) = 0 < n; grow hi until f(hi) > n.
    long double lo = 0.0L;
    long double hi = std::max(r, 1.0L);
    while (f_eval(hi, c) <= n) hi *= 2;
    if (r >= hi) r = hi / 2;

    long double res = f_eval(r, c) - n;
    const long double res_floor = 8 * LDBL_EPSILON * n;

    for (int iter = 0; iter < 200 && std::fabs(res) > res_floor; ++iter) {
        if (res > 0) hi = r; else lo = r;
        long double next = r - res / f_prime(r, c);
        if (!(next > lo && next < hi)) next = lo + (hi - lo) / 2;
        if (next <= lo || next >= hi) break;  // bracket collapsed to roundoff
        const long double next_res = f_eval(next, c) - n;
        if (std::fabs(next_res) < std::fabs(res)) {
            r = next;
            res = next_res;
        } else if (next_res > 0) {
            hi = next;
        } else {
            lo = next;
        }
    }

    if (std::fabs(res) > tol.abs + tol.rel * n)
        throw std::runtime_error("solve_saddle: residual certificate not met");

    SaddleRoot root;
    root.n = n;
    root.c = c;
    root.r = r;
    root.residual = res;
    root.exp_2r = std::exp(2 * r);
    root.two_r_plus_1 = 2 * r + 1;
    return root;
}

TripleRoot triple_roots(long double n, int c, SolveTol tol) {
    TripleRoot t;
    t.n = n;
    t.c = c;
    t.t0 = solve_saddle(n, c, tol);
    t.t1 = solve_saddle(n + 1, c, tol);
    t.t2 = solve_saddle(n + 2, c, tol);
    if (!(t.t0.r < t.t1.r && t.t1.r < t.t2.r))
        throw std::logic_error("triple_roots: roots not strictly increasing");
    return t;
}

ExpansionResiduals expansion_residuals(const SaddleRoot& root) {
    const long double n = root.n;
    if (!(n >= 3)) throw std::invalid_argument("expansion_residuals: n must be >= 3");
    const long double log_n = std::log(n);
    const long double loglog_n = std::log(log_n);
    const long double scale = log_n / loglog_n;
    ExpansionResiduals out;
    out.rho_r = static_cast<double>((root.r / (log_n / 2) - 1) * scale);
    out.rho_exp = static_cast<double>((root.exp_2r / (2 * n / log_n) - 1) * scale);
    return out;
}

ExpansionResiduals expansion_residuals(long double n, int c) {
    return expansion_residuals(solve_saddle(n, c));
}

GapResiduals gap_residuals(const TripleRoot& triple) {
    const long double n = triple.n;
    const long double t0 = triple.t0.r;
    const long double t1 = triple.t1.r;
    const long double t2 = triple.t2.r;
    const long double log_n = std::log(n);
    const long double log2_n = log_n * log_n;

    const long double gap_main = 1 / (2 * n) - 1 / (4 * n * t0);
    GapResiduals out;
    out.gap01 = static_cast<double>(((t1 - t0) - gap_main) * n * log2_n);
    out.gap12 = static_cast<double>(((t2 - t1) - gap_main) * n * log2_n);
    out.second_difference =
        static_cast<double>(((2 * t1 - t0 - t2) - 1 / (n * n)) * n * n * log_n);
    out.inverse_combination =
        static_cast<double>((1 / t0 + 1 / t2 - 2 / t1) * n * n * log2_n);
    return out;
}

double second_divided_difference(const std::function<double(double)>& h,
                                 double a, double b, double c) {
    if (a == b || b == c || a == c)
        throw std::invalid_argument("second_divided_difference: coincident nodes");
    return h(a) / ((a - b) * (a - c)) + h(b) / ((b - a) * (b - c)) +
           h(c) / ((c - a) * (c - b));
}

}  // namespace bpart

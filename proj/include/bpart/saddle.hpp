#ifndef BPART_SADDLE_HPP
#define BPART_SADDLE_HPP

#include <functional>

namespace bpart {

// Solver for r (e^{2r} + c) = n, the saddle radius of the counting EGFs
// (c = 1 for the all-partitions series, c = 0 for the zero-block-free one).
// f is strictly increasing on (0, inf), so the positive root is unique.
//
// Internals run in long double: the gap combinations checked downstream
// (e.g. 1/t0 + 1/t2 - 2/t1 ~ 1/(n^2 log^2 n)) sit below double roundoff
// once n reaches ~1e7.

struct SolveTol {
    long double abs = 0.0L;
    long double rel = 1e-13L;  // on the residual scale n
};

struct SaddleRoot {
    long double n = 0;
    int c = 0;
    long double r = 0;         // the positive root
    long double residual = 0;  // f(r) - n at the returned r
    long double exp_2r = 0;    // cached e^{2r}
    long double two_r_plus_1 = 0;
};

// Safeguarded Newton: certified bracket f(lo) < n < f(hi) first, bisection
// fallback whenever a Newton step leaves the bracket. Deterministic.
// Throws std::runtime_error if the residual certificate cannot be met.
SaddleRoot solve_saddle(long double n, int c, SolveTol tol = {});

struct TripleRoot {
    long double n = 0;
    int c = 0;
    SaddleRoot t0, t1, t2;  // f(t_i) = n + i, t0 < t1 < t2
};

TripleRoot triple_roots(long double n, int c, SolveTol tol = {});

// Residuals of the leading-order expansions r ~ log(n)/2 and
// e^{2r} ~ 2n/log(n), scaled by log(n)/log(log(n)) so boundedness is the
// testable statement. Requires n >= 3 (log log n > 0).
struct ExpansionResiduals {
    double rho_r = 0;
    double rho_exp = 0;
};

ExpansionResiduals expansion_residuals(long double n, int c);
ExpansionResiduals expansion_residuals(const SaddleRoot& root);

// Residuals of the root-gap expansions, each divided by its remainder
// order:
//   gap01  = (t1 - t0 - (1/(2n) - 1/(4n t0))) * n log^2 n
//   gap12  = (t2 - t1 - (1/(2n) - 1/(4n t0))) * n log^2 n
//   second_difference = (2 t1 - t0 - t2 - 1/n^2) * n^2 log n
//   inverse_combination = (1/t0 + 1/t2 - 2/t1) * n^2 log^2 n
struct GapResiduals {
    double gap01 = 0;
    double gap12 = 0;
    double second_difference = 0;
    double inverse_combination = 0;
};

GapResiduals gap_residuals(const TripleRoot& triple);

// Second-order divided difference
//   h(a)/((a-b)(a-c)) + h(b)/((b-a)(b-c)) + h(c)/((c-a)(c-b)),
// which equals h''(s)/2 for some s between the nodes. Nodes must be
// pairwise distinct.
double second_divided_difference(const std::function<double(double)>& h,
                                 double a, double b, double c);

}  // namespace bpart

#endif  // BPART_SADDLE_HPP

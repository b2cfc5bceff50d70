#ifndef BPART_CONTOUR_HPP
#define BPART_CONTOUR_HPP

namespace bpart {

// Independent quadrature oracle: recovers M_n/n! from the Cauchy integral
//   M_n/n! = (1 / (2 pi r^n sqrt(e))) * Int_{|theta| <= pi} e^A dtheta,
// with the circle at the saddle radius by default, plus the central-arc
// Gaussian approximation of the same integral. Everything is returned in
// natural-log space; the integrand is always evaluated peak-subtracted
// (e^{e^{2r}/2} overflows doubles long before n reaches 100).

struct ContourSpec {
    long long n = 1;
    double radius = 0;    // > 0; defaults to the c = 1 saddle radius
    int node_count = 64;  // starting node count, power of two, >= 16
    double theta0 = 0;    // central-arc half-width sqrt(2 log n / n)
};

ContourSpec make_contour_spec(long long n);

struct ExponentA {
    double r = 0;
    double theta = 0;
    double real_part = 0;
    double imag_part = 0;
};

// A(theta) = e^{2 r e^{i theta}}/2 + r e^{i theta} - i n theta, split into
//   Re(A) = e^{2r cos theta} cos(2r sin theta)/2 + r cos theta
//   Im(A) = e^{2r cos theta} sin(2r sin theta)/2 + r sin theta - n theta.
ExponentA exponent_a(double r, double theta, long long n);

struct QuadratureResult {
    double log_value = 0;  // log(M_n / n!)
    int nodes_used = 0;
};

// Trapezoidal rule over the full period with node doubling until two
// successive estimates agree to 1e-9; the integrand is smooth and
// 2 pi periodic, so convergence is spectral. Throws std::runtime_error
// after 14 doublings without agreement.
QuadratureResult cauchy_coefficient(const ContourSpec& spec);

// log of the Gaussian estimate of the central arc integral:
//   exp((e^{2r} + 2r)/2) * sqrt(2 pi / ((2r+1) n)).
double central_arc_estimate(long long n);

// log of the numerically integrated central arc Int_{|theta|<=theta0} e^A.
double central_arc_numeric(long long n);

// Tail integral over theta0 <= |theta| <= pi: log of the magnitude.
double tail_integral_log_abs(long long n);

// log of the central-arc remainder scale: central Gaussian value times
// n r^2 theta0^3. The tail integral must come in below this.
double central_arc_remainder_log(long long n);

}  // namespace bpart

#endif  // BPART_CONTOUR_HPP

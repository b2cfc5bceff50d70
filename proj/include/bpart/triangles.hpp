#ifndef BPART_TRIANGLES_HPP
#define BPART_TRIANGLES_HPP

#include <optional>
#include <vector>

#include "bpart/types.hpp"

namespace bpart {

// Exact counting triangles, built row by row from the recurrences
//   M[n][k] = M[n-1][k-1] + (2k+1) M[n-1][k]
//   N[n][k] = N[n-1][k-1] +  2k   N[n-1][k]
//   S[n][k] = S[n-1][k-1] +   k   S[n-1][k]
// with row 0 = [1] for every kind (empty partition). The whole prefix
// 0..n_max is cached; a completed triangle is immutable.
class CountTriangle {
public:
    CountTriangle(Kind kind, int n_max);

    Kind kind() const { return kind_; }
    int n_max() const { return n_max_; }

    // Row n as coefficients indexed by k, 0 <= k <= n.
    const std::vector<BigInt>& row(int n) const;

    // Exact sum of row n.
    const BigInt& row_sum(int n) const;

private:
    Kind kind_;
    int n_max_;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<BigInt> sums_;
};

CountTriangle build_triangle(Kind kind, int n_max);

struct RowPolynomial {
    int n = 0;
    std::vector<BigInt> coefficients;  // index = power of x, degree = n
};

RowPolynomial row_polynomial(const CountTriangle& triangle, int n);

// Exact Horner evaluation at a rational point.
BigRat eval_row_polynomial(const RowPolynomial& poly, const BigRat& x);

struct IdentityCheck {
    bool ok = true;
    int first_failing_n = -1;
};

// Checks M_n == sum_k C(n,k) N_k exactly for all n <= n_max.
// Both triangles must extend at least to n_max.
IdentityCheck check_binomial_identity(const CountTriangle& m_triangle,
                                      const CountTriangle& n_triangle);
IdentityCheck check_binomial_identity(int n_max);

// n!-scaled Taylor coefficients of exp((e^{2z}-1)/2 + z) (kind M) or
// exp((e^{2z}-1)/2) (kind N), expanded symbolically over exact rationals
// via F' = g' F. The results are integers and must equal the row sums.
std::vector<BigInt> egf_coefficients(Kind kind, int n_max);

// Sliding-window computation for large n, where caching the full prefix
// is too big (row sums to n ~ 3000 total several GB as a cached triangle).
// Only two adjacent rows are live at any time.
std::vector<BigInt> row_sums_upto(Kind kind, int n_max);

// Single row n, computed with the same sliding window.
std::vector<BigInt> triangle_row(Kind kind, int n);

// One pass that captures selected rows plus all row sums through sums_upto.
struct RowScan {
    Kind kind = Kind::M;
    std::vector<BigInt> sums;                     // sums[n], 0 <= n <= sums_upto
    std::vector<std::vector<BigInt>> rows;        // aligned with rows_wanted
    std::vector<int> rows_wanted;
};

RowScan scan_rows(Kind kind, std::vector<int> rows_wanted, int sums_upto);

}  // namespace bpart

#endif  // BPART_TRIANGLES_HPP

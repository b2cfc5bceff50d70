#include "bpart/triangles.hpp"

#include <stdexcept>
#include <utility>

namespace bpart {

namespace {

// Multiplier on the stay-put term of each recurrence.
long stay_weight(Kind kind, long k) {
    switch (kind) {
        case Kind::M: return 2 * k + 1;
        case Kind::N: return 2 * k;
        case Kind::Stirling: return k;
    }
    return 0;
}

std::vector<BigInt> next_row(Kind kind, const std::vector<BigInt>& prev) {
    const long n = static_cast<long>(prev.size());  // new row index
    std::vector<BigInt> row(n + 1);
    for (long k = 0; k <= n; ++k) {
        BigInt v = 0;
        if (k >= 1) v = prev[k - 1];
        if (k < n) {
            const long w = stay_weight(kind, k);
            if (w != 0) {
                mpz_addmul_ui(v.get_mpz_t(), prev[k].get_mpz_t(),
                              static_cast<unsigned long>(w));
            }
        }
        row[k] = std::move(v);
    }
    return row;
}

BigInt sum_row(const std::vector<BigInt>& row) {
    BigInt s = 0;
    for (const BigInt& v : row) s += v;
    return s;
}

}  // namespace

CountTriangle::CountTriangle(Kind kind, int n_max) : kind_(kind), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("CountTriangle: n_max must be >= 0");
    rows_.reserve(n_max + 1);
    sums_.reserve(n_max + 1);
    rows_.push_back({BigInt(1)});
    sums_.push_back(BigInt(1));
    for (int n = 1; n <= n_max; ++n) {
        rows_.push_back(next_row(kind_, rows_.back()));
        sums_.push_back(sum_row(rows_.back()));
    }
}

const std::vector<BigInt>& CountTriangle::row(int n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("CountTriangle::row: n out of range");
    return rows_[n];
}

const BigInt& CountTriangle::row_sum(int n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("CountTriangle::row_sum: n out of range");
    return sums_[n];
}

CountTriangle build_triangle(Kind kind, int n_max) { return CountTriangle(kind, n_max); }

RowPolynomial row_polynomial(const CountTriangle& triangle, int n) {
    return RowPolynomial{n, triangle.row(n)};
}

BigRat eval_row_polynomial(const RowPolynomial& poly, const BigRat& x) {
    BigRat acc = 0;
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) {
        acc = acc * x + BigRat(*it);
    }
    return acc;
}

IdentityCheck check_binomial_identity(const CountTriangle& m_triangle,
                                      const CountTriangle& n_triangle) {
    const int n_max = std::min(m_triangle.n_max(), n_triangle.n_max());
    for (int n = 0; n <= n_max; ++n) {
        BigInt rhs = 0;
        BigInt binom;
        for (int k = 0; k <= n; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), n, k);
            mpz_addmul(rhs.get_mpz_t(), binom.get_mpz_t(), n_triangle.row_sum(k).get_mpz_t());
        }
        if (rhs != m_triangle.row_sum(n)) return {false, n};
    }
    return {true, -1};
}

IdentityCheck check_binomial_identity(int n_max) {
    CountTriangle m(Kind::M, n_max);
    CountTriangle n(Kind::N, n_max);
    return check_binomial_identity(m, n);
}

std::vector<BigInt> egf_coefficients(Kind kind, int n_max) {
    if (n_max < 0) throw std::invalid_argument("egf_coefficients: n_max must be >= 0");
    // F = exp(g) with g'(z) = e^{2z} + c, c = 1 for M and 0 for N.
    // Coefficients f of F satisfy (n+1) f_{n+1} = sum_{j<=n} g'_j f_{n-j}.
    const long c = (kind == Kind::M) ? 1 : (kind == Kind::N) ? 0
                   : throw std::invalid_argument("egf_coefficients: no EGF for Stirling kind");

    std::vector<BigRat> gp(n_max + 1);  // g'_j = 2^j / j! (+ c at j = 0)
    BigInt pow2 = 1;
    BigInt fact = 1;
    for (int j = 0; j <= n_max; ++j) {
        if (j > 0) {
            pow2 *= 2;
            fact *= j;
        }
        gp[j] = BigRat(pow2, fact);
        gp[j].canonicalize();
    }
    gp[0] += c;

    std::vector<BigRat> f(n_max + 1);
    f[0] = 1;
    for (int n = 0; n < n_max; ++n) {
        BigRat acc = 0;
        for (int j = 0; j <= n; ++j) acc += gp[j] * f[n - j];
        f[n + 1] = acc / (n + 1);
    }

    std::vector<BigInt> out(n_max + 1);
    BigInt nfact = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) nfact *= n;
        BigRat scaled = f[n] * BigRat(nfact);
        scaled.canonicalize();
        if (scaled.get_den() != 1)
            throw std::logic_error("egf_coefficients: non-integer n!-scaled coefficient");
        out[n] = scaled.get_num();
    }
    return out;
}

std::vector<BigInt> row_sums_upto(Kind kind, int n_max) {
    RowScan scan = scan_rows(kind, {}, n_max);
    return std::move(scan.sums);
}

std::vector<BigInt> triangle_row(Kind kind, int n) {
    RowScan scan = scan_rows(kind, {n}, -1);
    return std::move(scan.rows[0]);
}

RowScan scan_rows(Kind kind, std::vector<int> rows_wanted, int sums_upto) {
    int last = sums_upto;
    for (int n : rows_wanted) {
        if (n < 0) throw std::invalid_argument("scan_rows: row index must be >= 0");
        last = std::max(last, n);
    }
    if (last < 0) throw std::invalid_argument("scan_rows: nothing requested");

    RowScan out;
    out.kind = kind;
    out.rows_wanted = rows_wanted;
    out.rows.resize(rows_wanted.size());
    if (sums_upto >= 0) out.sums.reserve(sums_upto + 1);

    std::vector<BigInt> row = {BigInt(1)};
    for (int n = 0; n <= last; ++n) {
        if (n > 0) row = next_row(kind, row);
        if (n <= sums_upto) out.sums.push_back(sum_row(row));
        for (size_t i = 0; i < rows_wanted.size(); ++i) {
            if (rows_wanted[i] == n) out.rows[i] = row;
        }
    }
    return out;
}

}  // namespace bpart

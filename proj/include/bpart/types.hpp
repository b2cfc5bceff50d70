#ifndef BPART_TYPES_HPP
#define BPART_TYPES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bpart {

// Exact arithmetic: all counting is done in arbitrary-precision integers,
// all pmf/moment work in normalized rationals. Floats enter only at the
// diagnostic boundary (logs, residuals, CDF comparisons).
using BigInt = mpz_class;
using BigRat = mpq_class;

enum class Kind { M, N, Stirling };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::M: return "M";
        case Kind::N: return "N";
        case Kind::Stirling: return "S";
    }
    return "?";
}

inline Kind kind_from_string(const std::string& s) {
    if (s == "M" || s == "m") return Kind::M;
    if (s == "N" || s == "n") return Kind::N;
    if (s == "S" || s == "s" || s == "Stirling") return Kind::Stirling;
    throw std::invalid_argument("unknown triangle kind: " + s);
}

}  // namespace bpart

#endif  // BPART_TYPES_HPP

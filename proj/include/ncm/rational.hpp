#pragma once

// Exact rational scalar used for all coordinates and squared lengths.
// Backed by GMP; every comparison in a decision path is exact.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ncm {

using Scalar = mpq_class;

// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
inline Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

inline double to_double(const Scalar& s) { return s.get_d(); }

inline int sign(const Scalar& s) { return sgn(s); }

}  // namespace ncm

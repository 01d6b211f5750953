#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chordstats {

// All counting is done in exact arbitrary precision; the results overflow
// 64-bit words near n = 20.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction with positive denominator.
inline Rat make_rat(const Int &num, const Int &den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat &v) { return v.get_den() == 1; }

// Renders "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rat &v) { return v.get_str(); }
inline std::string to_string(const Int &v) { return v.get_str(); }

inline double to_double(const Rat &v) { return v.get_d(); }

// Quotient of an exactly divisible pair; a nonzero remainder means the
// caller's algebra is broken, not the caller's input.
inline Int exact_div(const Int &num, const Int &den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("exact_div: " + num.get_str() + " is not divisible by " + den.get_str());
    return q;
}

// The integer a rational is asserted to be.
inline Int to_integer(const Rat &v) {
    if (!is_integer(v))
        throw std::logic_error("to_integer: non-integer value " + v.get_str());
    return v.get_num();
}

} // namespace chordstats

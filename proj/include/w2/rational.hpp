#pragma once

#include <gmpxx.h>

#include <string>

#include "w2/errors.hpp"

namespace w2 {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("zero denominator in rational constant");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline int sign(const Rat& r) { return sgn(r); }

// "3", "-3" or "3/2"; always canonical (reduced, positive denominator).
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace w2

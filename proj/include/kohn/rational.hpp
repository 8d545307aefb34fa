#pragma once

#include <gmpxx.h>

#include <string>

#include "kohn/errors.hpp"

namespace kohn {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class does not canonicalize two-argument constructions on its own.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Renders "p/q", or just "p" when q == 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace kohn

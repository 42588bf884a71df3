#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace shiq {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx constructors stop at long; the CLI and counting layers speak long long.
static_assert(sizeof(long) == sizeof(long long), "LP64 expected");

inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long v) { return Rat(static_cast<long>(v)); }

inline Int pow_int(const Int &base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact rational power; negative exponents require a nonzero base.
inline Rat pow_rat(const Rat &base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
                   static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0)
        throw std::domain_error("pow_rat: zero base with negative exponent");
    Rat inv;
    mpq_inv(inv.get_mpq_t(), base.get_mpq_t());
    return pow_rat(inv, -e);
}

inline Int lcm_int(const Int &a, const Int &b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int &a, const Int &b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_integer(const Rat &r) { return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0; }

inline long long to_ll(const Int &v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("integer does not fit a machine word: " + v.get_str());
    return static_cast<long long>(v.get_si());
}

}  // namespace shiq

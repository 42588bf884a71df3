#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "shiq/arrangement.hpp"
#include "shiq/rat_polynomial.hpp"

namespace shiq {

// A quasi-polynomial in q: one rational-coefficient constituent per residue
// class mod `period`, claimed valid for q >= q_min.
struct QuasiPolynomial {
    long long period = 1;
    long long q_min = 1;
    int degree = 0;
    std::vector<RatPolynomial> constituents;  // index r = q mod period
};

struct CountSample {
    long long q = 0;
    Int count;
};

struct FitError : std::runtime_error {
    long long q;
    Rat expected;
    Int actual;
    FitError(long long q_, Rat expected_, Int actual_);
};

// lcm over all nonempty column subsets J of the coefficient matrix of the
// largest elementary divisor of the submatrix A_J. Duplicate columns are
// collapsed first (a repeated column never changes the divisors). Empty
// arrangement yields 1. Throws when the distinct-column count exceeds the cap.
Int lcm_period(const Arrangement &a, std::size_t max_distinct_columns = 20);

// Same lcm over subsets of the augmented columns (a_i; b_i).
Int lcm_period_augmented(const Arrangement &a, std::size_t max_distinct_columns = 20);

// Per residue class mod `period`: interpolate the first degree+1 samples with
// q >= q_min, then require every remaining sample to satisfy the fitted
// constituent exactly. Each class needs at least degree+2 samples.
QuasiPolynomial fit_quasi_polynomial(std::vector<CountSample> samples, long long period,
                                     int degree, long long q_min);

// Smallest divisor p of qp.period with equal constituents on classes that
// agree mod p.
long long minimal_period(const QuasiPolynomial &qp);

// Constituent (q mod period) evaluated at q; the value must be an integer.
Int evaluate(const QuasiPolynomial &qp, long long q);

// Smallest threshold at which fitting the given samples succeeds, or -1 if none.
long long probe_q_min(const std::vector<CountSample> &samples, long long period, int degree);

std::string quasipoly_to_json(const QuasiPolynomial &qp);
QuasiPolynomial quasipoly_from_json(const std::string &text);

}  // namespace shiq

#pragma once

#include <optional>
#include <string>

#include "shiq/counting.hpp"

namespace shiq {

// The point maps pairing complements of the type D Shi arrangement at q with
// type B complements at q+2, together with their restricted variants:
//   full_d:    M(D_q)                     <-> M(B_{q+2})
//   sum_zero:  restriction on {x_i+x_j=0} <-> same restriction of B
//   diff_one:  restriction on {x_i-x_j=1} <-> same restriction of B
//   diff_zero: restriction on {x_i-x_j=0} <-> restriction of B u {x_j=-1}
//   sum_one:   restriction on {x_i+x_j=1} <-> restriction of B u {x_j=-1}
struct BijectionVariant {
    enum class Kind { full_d, sum_zero, diff_one, diff_zero, sum_one };
    Kind kind = Kind::full_d;
    int i = 0;
    int j = 0;

    std::string name() const;
};

BijectionVariant parse_bijection_variant(const std::string &name, int i, int j);

// x + 1 + q*e_u into Z_{q+2} when x_u = 0 (at most one zero coordinate
// allowed), otherwise x + 1.
Point bijection_forward(const Point &x, long long q);
// Inverse: subtract 1, folding a q+1 coordinate back to 0.
Point bijection_backward(const Point &y, long long q);

struct BijectionReport {
    BijectionVariant variant;
    int m = 0;
    long long q = 0;
    long long domain_size = 0;
    long long codomain_size = 0;
    bool pass = false;
    std::optional<Point> counterexample;  // lexicographically smallest failure
    std::string detail;
};

// Materializes both sides, applies the forward map to every domain point and
// checks: image lands in the codomain, no collisions, the backward map
// returns the original, equal cardinalities, and (for the augmented variants)
// that no image coordinate j equals q+1.
BijectionReport verify_bijection(const BijectionVariant &variant, int m, long long q,
                                 const CountOptions &opts = {});

std::string bijection_report_to_json(const BijectionReport &r);

}  // namespace shiq

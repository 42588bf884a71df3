#pragma once

#include <stdexcept>
#include <vector>

#include "shiq/arrangement.hpp"
#include "shiq/numeric.hpp"

namespace shiq {

using Point = std::vector<long long>;

struct CountOptions {
    // Charged up front as q^m * max(1, #hyperplanes) so that refusal does
    // not depend on early-exit savings or the thread count.
    long long budget = 100'000'000;
    int threads = 1;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |{x in Z_q^m : a.x != b (mod q) for every hyperplane}|
Int count_complement(const Arrangement &a, long long q, const CountOptions &opts = {});

// |{x in Z_q^m : x on h, x off every other hyperplane of a}|; h must be a member.
Int count_on_hyperplane(const Arrangement &a, const Hyperplane &h, long long q,
                        const CountOptions &opts = {});

// Generalization to a set of "on" hyperplanes (all members of a): equality on
// each element of `on`, avoidance on the rest. Empty `on` is the complement.
Int count_restricted(const Arrangement &a, const std::vector<Hyperplane> &on, long long q,
                     const CountOptions &opts = {});

// The matching point sets, coordinates in [0, q), lexicographically sorted.
std::vector<Point> enumerate_complement(const Arrangement &a, long long q,
                                        const CountOptions &opts = {});
std::vector<Point> enumerate_restricted(const Arrangement &a, const std::vector<Hyperplane> &on,
                                        long long q, const CountOptions &opts = {});

}  // namespace shiq

#pragma once

#include <cstddef>
#include <vector>

#include "shiq/numeric.hpp"

namespace shiq {

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;  // row-major, rows*cols values

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Int(0)) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> e);

    Int &at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Int &at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Elementary divisors d_1 | d_2 | ... | d_r of an integer matrix, r = rank.
// The product d_1...d_k equals the gcd of all k x k minors. Zero matrix
// yields the empty sequence.
std::vector<Int> smith_elementary_divisors(IntMatrix M);

}  // namespace shiq

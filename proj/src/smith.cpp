#include "shiq/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace shiq {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<Int> e)
    : rows(r), cols(c), entries(std::move(e)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: zero-sized");
    if (entries.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match rows*cols");
}

namespace {

bool pivot_is_lone(const IntMatrix &a, std::size_t t) {
    for (std::size_t i = t + 1; i < a.rows; ++i)
        if (a.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < a.cols; ++j)
        if (a.at(t, j) != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the submatrix starting at (t,t); false if all zero.
bool find_min_nonzero(const IntMatrix &a, std::size_t t, std::size_t &ri, std::size_t &ci) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows; ++i)
        for (std::size_t j = t; j < a.cols; ++j) {
            if (a.at(i, j) == 0) continue;
            Int v = abs(a.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                ri = i;
                ci = j;
            }
        }
    return found;
}

void swap_rows(IntMatrix &a, std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(i, j), a.at(k, j));
}

void swap_cols(IntMatrix &a, std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, j), a.at(i, k));
}

}  // namespace

std::vector<Int> smith_elementary_divisors(IntMatrix m) {
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("smith: zero-sized matrix");

    const std::size_t nmin = std::min(m.rows, m.cols);
    std::vector<Int> divisors;

    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t ri = t, ci = t;
        if (!find_min_nonzero(m, t, ri, ci)) break;  // remaining block is zero

        bool settled = false;
        while (!settled) {
            swap_rows(m, t, ri);
            swap_cols(m, t, ci);

            while (!pivot_is_lone(m, t)) {
                // Reduce column t and row t by the pivot; division may leave
                // remainders, so the pivot hunt repeats until it divides cleanly.
                for (std::size_t i = t + 1; i < m.rows; ++i) {
                    if (m.at(i, t) == 0) continue;
                    Int f = m.at(i, t) / m.at(t, t);
                    for (std::size_t j = t; j < m.cols; ++j) m.at(i, j) -= f * m.at(t, j);
                }
                for (std::size_t j = t + 1; j < m.cols; ++j) {
                    if (m.at(t, j) == 0) continue;
                    Int f = m.at(t, j) / m.at(t, t);
                    for (std::size_t i = t; i < m.rows; ++i) m.at(i, j) -= f * m.at(i, t);
                }
                if (pivot_is_lone(m, t)) break;
                find_min_nonzero(m, t, ri, ci);
                swap_rows(m, t, ri);
                swap_cols(m, t, ci);
            }

            // The pivot must divide every remaining entry for the chain
            // d_1 | d_2 | ... to hold; fold an offending row in and redo.
            settled = true;
            for (std::size_t i = t + 1; i < m.rows && settled; ++i)
                for (std::size_t j = t + 1; j < m.cols && settled; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (std::size_t k = 0; k < m.cols; ++k) m.at(t, k) += m.at(i, k);
                        find_min_nonzero(m, t, ri, ci);
                        settled = false;
                    }
        }

        divisors.push_back(abs(m.at(t, t)));
    }

    return divisors;
}

}  // namespace shiq

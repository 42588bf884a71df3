#pragma once

#include <string>
#include <vector>

#include "shiq/numeric.hpp"

namespace shiq {

// Univariate polynomial with exact rational coefficients, lowest degree
// first, trailing zeros trimmed. The empty coefficient list is the zero
// polynomial (degree -1).
class RatPolynomial {
  public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rat> coeffs);

    static RatPolynomial constant(const Rat &c);
    // (x + shift)^e, e >= 0
    static RatPolynomial shifted_power(const Rat &shift, unsigned e);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<Rat> &coefficients() const { return coeffs_; }
    Rat coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

    Rat operator()(const Rat &x) const;
    Rat operator()(const Int &x) const { return (*this)(Rat(x)); }

    RatPolynomial operator+(const RatPolynomial &o) const;
    RatPolynomial operator-(const RatPolynomial &o) const;
    RatPolynomial operator*(const RatPolynomial &o) const;
    bool operator==(const RatPolynomial &o) const = default;

    std::string str(const std::string &var = "q") const;

  private:
    std::vector<Rat> coeffs_;
};

// Unique polynomial of degree < #points through the given integer points.
// Pairwise distinct abscissae required.
RatPolynomial interpolate_polynomial(const std::vector<std::pair<Int, Int>> &points);

}  // namespace shiq

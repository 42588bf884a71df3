#include "shiq/rat_polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace shiq {

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial RatPolynomial::constant(const Rat &c) {
    return RatPolynomial(std::vector<Rat>{c});
}

RatPolynomial RatPolynomial::shifted_power(const Rat &shift, unsigned e) {
    RatPolynomial base(std::vector<Rat>{shift, Rat(1)});
    RatPolynomial r = constant(1);
    for (unsigned k = 0; k < e; ++k) r = r * base;
    return r;
}

Rat RatPolynomial::operator()(const Rat &x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial &o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial &o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial &o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) c[a + b] += coeffs_[a] * o.coeffs_[b];
    return RatPolynomial(std::move(c));
}

std::string RatPolynomial::str(const std::string &var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rat &c = coeffs_[k];
        if (c == 0) continue;
        Rat a = c;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        if (c < 0) a = -c;
        const bool unit = (a == 1);
        if (k == 0 || !unit) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

RatPolynomial interpolate_polynomial(const std::vector<std::pair<Int, Int>> &points) {
    if (points.empty()) throw std::invalid_argument("interpolate: no points");
    const std::size_t n = points.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (points[a].first == points[b].first)
                throw std::invalid_argument("interpolate: duplicate abscissa " +
                                            points[a].first.get_str());

    // Newton divided differences, then expansion to the monomial basis.
    std::vector<Rat> coef(n);
    for (std::size_t k = 0; k < n; ++k) coef[k] = Rat(points[k].second);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t k = n; k-- > level;)
            coef[k] = (coef[k] - coef[k - 1]) / Rat(points[k].first - points[k - level].first);

    RatPolynomial result;
    RatPolynomial basis = RatPolynomial::constant(1);
    for (std::size_t k = 0; k < n; ++k) {
        result = result + basis * RatPolynomial::constant(coef[k]);
        basis = basis * RatPolynomial(std::vector<Rat>{Rat(-points[k].first), Rat(1)});
    }
    return result;
}

}  // namespace shiq

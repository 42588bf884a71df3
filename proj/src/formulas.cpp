#include "shiq/formulas.hpp"

#include <stdexcept>

#include <json.hpp>

namespace shiq {

namespace {

// Exact rational power of an integer base; negative exponents appear at
// boundary indices (i = 1) and must cancel to an integer in the full product.
Rat P(long long base, long long e) { return pow_rat(make_rat(base), static_cast<long>(e)); }

void require(bool cond, const std::string &msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_args(RootType root, Family f, int m, int i, int j, long long q) {
    require(family_valid(root, f), "family " + family_name(f) + " is not defined for type " +
                                       root_type_name(root));
    require(m >= 1, "m must be >= 1");
    if (family_needs_pair(f))
        require(1 <= i && i < j && j <= m, "pair families need 1 <= i < j <= m");
    else
        require(1 <= i && i <= m, "coordinate families need 1 <= i <= m");
    require(q >= 2 * m + 1, "restriction formulas need q >= 2m+1");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::full: return "full";
        case Family::rest_2xi_0: return "2xi0";
        case Family::rest_2xi_1: return "2xi1";
        case Family::rest_xi_0: return "xi0";
        case Family::rest_xi_1: return "xi1";
        case Family::rest_diff_0: return "diff0";
        case Family::rest_diff_1: return "diff1";
        case Family::rest_sum_0: return "sum0";
        case Family::rest_sum_1: return "sum1";
        case Family::aux_diff_pinned: return "auxdiff0";
        case Family::aux_sum_pinned: return "auxsum1";
    }
    throw std::logic_error("unreachable");
}

Family parse_family(const std::string &s) {
    for (Family f : {Family::full, Family::rest_2xi_0, Family::rest_2xi_1, Family::rest_xi_0,
                     Family::rest_xi_1, Family::rest_diff_0, Family::rest_diff_1,
                     Family::rest_sum_0, Family::rest_sum_1, Family::aux_diff_pinned,
                     Family::aux_sum_pinned})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family: " + s);
}

bool family_valid(RootType root, Family f) {
    switch (f) {
        case Family::full: return true;
        case Family::rest_2xi_0:
        case Family::rest_2xi_1: return root == RootType::C;
        case Family::rest_xi_0:
        case Family::rest_xi_1: return root == RootType::B;
        case Family::rest_diff_0:
        case Family::rest_diff_1:
        case Family::rest_sum_0:
        case Family::rest_sum_1: return true;
        case Family::aux_diff_pinned:
        case Family::aux_sum_pinned: return root == RootType::B;
    }
    return false;
}

bool family_needs_pair(Family f) {
    switch (f) {
        case Family::rest_diff_0:
        case Family::rest_diff_1:
        case Family::rest_sum_0:
        case Family::rest_sum_1:
        case Family::aux_diff_pinned:
        case Family::aux_sum_pinned: return true;
        default: return false;
    }
}

bool family_is_aux(Family f) {
    return f == Family::aux_diff_pinned || f == Family::aux_sum_pinned;
}

bool family_parity_split(RootType root, Family f) {
    switch (f) {
        case Family::rest_2xi_0:
        case Family::rest_2xi_1: return true;
        case Family::rest_diff_0: return root != RootType::C;
        case Family::rest_sum_0:
        case Family::rest_sum_1: return true;
        default: return false;
    }
}

Selector family_selector(Family f, int i, int j) {
    switch (f) {
        case Family::rest_2xi_0: return Selector::coord2_sel(i, 0);
        case Family::rest_2xi_1: return Selector::coord2_sel(i, 1);
        case Family::rest_xi_0: return Selector::coord_sel(i, 0);
        case Family::rest_xi_1: return Selector::coord_sel(i, 1);
        case Family::rest_diff_0: return Selector::diff_sel(i, j, 0);
        case Family::rest_diff_1: return Selector::diff_sel(i, j, 1);
        case Family::rest_sum_0: return Selector::sum_sel(i, j, 0);
        case Family::rest_sum_1: return Selector::sum_sel(i, j, 1);
        default: throw std::invalid_argument("family has no single member hyperplane");
    }
}

RestrictionCase restriction_case(RootType root, Family f, int m, int i, int j) {
    require(family_valid(root, f), "family " + family_name(f) + " is not defined for type " +
                                       root_type_name(root));
    if (family_is_aux(f)) {
        // Augmented arrangement B_m u {x_j = -1}, restricted onto two members.
        Arrangement base = add_hyperplane(build_shi(RootType::B, m),
                                          selector_hyperplane(Selector::coord_sel(j, -1), m));
        Hyperplane pin = selector_hyperplane(Selector::coord_sel(j, -1), m);
        Hyperplane main = f == Family::aux_diff_pinned
                              ? selector_hyperplane(Selector::diff_sel(i, j, 0), m)
                              : selector_hyperplane(Selector::sum_sel(i, j, 1), m);
        return RestrictionCase{std::move(base), {std::move(main), std::move(pin)}};
    }
    Arrangement arr = build_shi(root, m);
    if (f == Family::full) return RestrictionCase{std::move(arr), {}};
    Hyperplane h = selector_hyperplane(family_selector(f, i, j), m);
    return RestrictionCase{std::move(arr), {std::move(h)}};
}

Int eval_full_shi_formula(RootType root, int m, long long q) {
    require(m >= 1, "m must be >= 1");
    if (root == RootType::D) {
        require(q >= 2 * m - 1, "type D full formula needs q >= 2m-1");
        return pow_int(make_int(q - 2 * m + 2), static_cast<unsigned long>(m));
    }
    require(q >= 2 * m + 1, "full formula needs q >= 2m+1");
    return pow_int(make_int(q - 2 * m), static_cast<unsigned long>(m));
}

namespace {

// Primary transcription, T = q - 2m.
Rat restriction_rat(RootType root, Family f, int m, int i, int j, long long q) {
    const long long T = q - 2 * m;
    const bool even = (q % 2 == 0);
    switch (root) {
        case RootType::B:
            switch (f) {
                case Family::rest_xi_0: return P(T + 1, m - i) * P(T + 2, i - 1);
                case Family::rest_xi_1: return P(T, i - 1) * P(T + 1, m - i);
                case Family::rest_diff_0:
                    if (even)
                        return P(T + 1, j - i - 1) * P(T + 2, i - 1) *
                               (P(T + 2, m - j + 1) - P(T + 1, m - j));
                    return P(T + 1, j - i - 1) * P(T + 2, m - j) *
                           (P(T + 2, i) - P(T + 1, i - 1));
                case Family::rest_diff_1: return P(T, m + i - j) * P(T + 1, j - i - 1);
                case Family::rest_sum_0:
                    if (even) return P(T, m - j + 1) * P(T + 1, j - i - 1) * P(T + 2, i - 1);
                    return P(T, m - j) * P(T + 1, j - i) * (P(T + 2, i - 1) - P(T + 1, i - 2));
                case Family::rest_sum_1:
                    if (even)
                        return P(T, i - 1) * P(T + 1, j - i - 1) *
                               (P(T + 2, m - j + 1) - P(T + 1, m - j));
                    return P(T, i - 1) * P(T + 1, j - i) * P(T + 2, m - j);
                case Family::aux_diff_pinned: return P(T + 1, m - i - 1) * P(T + 2, i - 1);
                case Family::aux_sum_pinned: return P(T, i - 1) * P(T + 1, m - i - 1);
                default: break;
            }
            break;
        case RootType::C:
            switch (f) {
                case Family::rest_2xi_0:
                    return (even ? Rat(2) : Rat(1)) * P(T, m - i) * P(T + 1, i - 1);
                case Family::rest_2xi_1:
                    if (even) return Rat(0);
                    return P(T, i - 1) * P(T + 1, m - i);
                case Family::rest_diff_0: return P(T + 1, j - i - 1) * P(T + 2, m - j + i);
                case Family::rest_diff_1: return P(T, m - j + i) * P(T + 1, j - i - 1);
                case Family::rest_sum_0:
                    if (even) return P(T, m - j) * P(T + 1, j - i - 1) * P(T + 2, i);
                    return P(T, m - j) * P(T + 1, j - i) * P(T + 2, i - 1);
                case Family::rest_sum_1:
                    if (even) return P(T, i) * P(T + 1, j - i - 1) * P(T + 2, m - j);
                    return P(T, i - 1) * P(T + 1, j - i) * P(T + 2, m - j);
                default: break;
            }
            break;
        case RootType::D:
            switch (f) {
                case Family::rest_diff_0:
                    if (even)
                        return P(T + 3, j - i - 1) * P(T + 4, i - 1) *
                                   (P(T + 4, m - j + 1) - P(T + 3, m - j)) -
                               P(T + 3, m - i - 1) * P(T + 4, i - 1);
                    return P(T + 3, j - i - 1) * P(T + 4, m - j) *
                               (P(T + 4, i) - P(T + 3, i - 1)) -
                           P(T + 3, m - i - 1) * P(T + 4, i - 1);
                case Family::rest_diff_1: return P(T + 2, m + i - j) * P(T + 3, j - i - 1);
                case Family::rest_sum_0:
                    if (even) return P(T + 2, m - j + 1) * P(T + 3, j - i - 1) * P(T + 4, i - 1);
                    return P(T + 2, m - j) * P(T + 3, j - i) *
                           (P(T + 4, i - 1) - P(T + 3, i - 2));
                case Family::rest_sum_1:
                    if (even)
                        return P(T + 2, i - 1) * P(T + 3, j - i - 1) *
                                   (P(T + 4, m - j + 1) - P(T + 3, m - j)) -
                               P(T + 2, i - 1) * P(T + 3, m - i - 1);
                    return P(T + 2, i - 1) * P(T + 3, j - i) * P(T + 4, m - j) -
                           P(T + 2, i - 1) * P(T + 3, m - i - 1);
                default: break;
            }
            break;
    }
    throw std::invalid_argument("no catalog entry for type " + root_type_name(root) +
                                ", family " + family_name(f));
}

// Second transcription: literal q - 2m + k bases, products expanded so that
// no negative exponent appears. Tests assert it agrees with the primary
// transcription pointwise.
Rat restriction_rat_alt(RootType root, Family f, int m, int i, int j, long long q) {
    const bool odd = (q % 2 != 0);
    auto p = [q, m](long long k, long long e) { return P(q - 2 * m + k, e); };
    switch (root) {
        case RootType::B:
            switch (f) {
                case Family::rest_xi_0: return p(2, i - 1) * p(1, m - i);
                case Family::rest_xi_1: return p(1, m - i) * p(0, i - 1);
                case Family::rest_diff_0:
                    if (odd) return p(2, m - j + i) * p(1, j - i - 1) -
                                    p(2, m - j) * p(1, j - 2);
                    return p(2, m - j + i) * p(1, j - i - 1) - p(2, i - 1) * p(1, m - i - 1);
                case Family::rest_diff_1: return p(1, j - i - 1) * p(0, m - j + i);
                case Family::rest_sum_0:
                    if (odd) return p(0, m - j) * p(1, j - i) * p(2, i - 1) -
                                    p(0, m - j) * p(1, j - 2);
                    return p(0, m - j + 1) * p(1, j - i - 1) * p(2, i - 1);
                case Family::rest_sum_1:
                    if (odd) return p(0, i - 1) * p(1, j - i) * p(2, m - j);
                    return p(0, i - 1) * p(1, j - i - 1) * p(2, m - j + 1) -
                           p(0, i - 1) * p(1, m - i - 1);
                case Family::aux_diff_pinned: return p(1, m - i - 1) * p(2, i - 1);
                case Family::aux_sum_pinned: return p(0, i - 1) * p(1, m - i - 1);
                default: break;
            }
            break;
        case RootType::C:
            switch (f) {
                case Family::rest_2xi_0:
                    if (odd) return p(0, m - i) * p(1, i - 1);
                    return Rat(2) * p(0, m - i) * p(1, i - 1);
                case Family::rest_2xi_1:
                    if (odd) return p(0, i - 1) * p(1, m - i);
                    return Rat(0);
                case Family::rest_diff_0: return p(2, m - j + i) * p(1, j - i - 1);
                case Family::rest_diff_1: return p(0, m - j + i) * p(1, j - i - 1);
                case Family::rest_sum_0:
                    if (odd) return p(0, m - j) * p(1, j - i) * p(2, i - 1);
                    return p(0, m - j) * p(1, j - i - 1) * p(2, i);
                case Family::rest_sum_1:
                    if (odd) return p(0, i - 1) * p(1, j - i) * p(2, m - j);
                    return p(0, i) * p(1, j - i - 1) * p(2, m - j);
                default: break;
            }
            break;
        case RootType::D:
            switch (f) {
                case Family::rest_diff_0:
                    if (odd) return p(3, j - i - 1) * p(4, m - j) * p(4, i) -
                                    p(3, j - i - 1) * p(4, m - j) * p(3, i - 1) -
                                    p(3, m - i - 1) * p(4, i - 1);
                    return p(3, j - i - 1) * p(4, i - 1) * p(4, m - j + 1) -
                           p(3, j - i - 1) * p(4, i - 1) * p(3, m - j) -
                           p(3, m - i - 1) * p(4, i - 1);
                case Family::rest_diff_1: return p(2, m + i - j) * p(3, j - i - 1);
                case Family::rest_sum_0:
                    if (odd) return p(2, m - j) * p(3, j - i) * p(4, i - 1) -
                                    p(2, m - j) * p(3, j - 2);
                    return p(2, m - j + 1) * p(3, j - i - 1) * p(4, i - 1);
                case Family::rest_sum_1:
                    if (odd) return p(2, i - 1) * p(3, j - i) * p(4, m - j) -
                                    p(2, i - 1) * p(3, m - i - 1);
                    return p(2, i - 1) * p(3, j - i - 1) * p(4, m - j + 1) -
                           p(2, i - 1) * p(3, j - i - 1) * p(3, m - j) -
                           p(2, i - 1) * p(3, m - i - 1);
                default: break;
            }
            break;
    }
    throw std::invalid_argument("no catalog entry for type " + root_type_name(root) +
                                ", family " + family_name(f));
}

Int to_integer_checked(const Rat &v, const std::string &what) {
    if (!is_integer(v))
        throw std::runtime_error(what + " evaluated to the non-integer " + v.get_str());
    return Int(v.get_num());
}

}  // namespace

Int eval_restriction_formula(RootType root, Family f, int m, int i, int j, long long q) {
    check_args(root, f, m, i, j, q);
    return to_integer_checked(restriction_rat(root, f, m, i, j, q),
                              "catalog " + root_type_name(root) + "/" + family_name(f));
}

Int eval_restriction_formula_alt(RootType root, Family f, int m, int i, int j, long long q) {
    check_args(root, f, m, i, j, q);
    return to_integer_checked(restriction_rat_alt(root, f, m, i, j, q),
                              "catalog-alt " + root_type_name(root) + "/" + family_name(f));
}

Int eval_auxiliary_formula(Family lemma, int m, int i, int j, long long q) {
    require(family_is_aux(lemma), "not an auxiliary family: " + family_name(lemma));
    return eval_restriction_formula(RootType::B, lemma, m, i, j, q);
}

Int eval_deletion_formula(RootType root, Family f, int m, int i, int j, long long q) {
    return eval_full_shi_formula(root, m, q) + eval_restriction_formula(root, f, m, i, j, q);
}

RatPolynomial full_shi_polynomial(RootType root, int m) {
    require(m >= 1, "m must be >= 1");
    long long shift = root == RootType::D ? -(2 * m - 2) : -(2 * m);
    return RatPolynomial::shifted_power(make_rat(shift), static_cast<unsigned>(m));
}

RatPolynomial restriction_constituent(RootType root, Family f, int m, int i, int j, Parity p) {
    require(p != Parity::both, "pick one parity class for the constituent");
    long long q0 = 2 * m + 1;
    if ((p == Parity::even) != (q0 % 2 == 0)) ++q0;
    // m+1 interpolation nodes bound the degree by m; three extra nodes
    // over-validate the recovered polynomial.
    std::vector<std::pair<Int, Int>> pts;
    for (int k = 0; k <= m; ++k)
        pts.emplace_back(make_int(q0 + 2 * k), eval_restriction_formula(root, f, m, i, j, q0 + 2 * k));
    RatPolynomial fitted = interpolate_polynomial(pts);
    for (int k = m + 1; k <= m + 3; ++k) {
        long long q = q0 + 2 * k;
        if (fitted(make_int(q)) != Rat(eval_restriction_formula(root, f, m, i, j, q)))
            throw std::runtime_error("constituent recovery failed validation");
    }
    return fitted;
}

namespace {

const char *expr(RootType root, Family f, Parity p) {
    switch (root) {
        case RootType::B:
            switch (f) {
                case Family::full: return "T^m";
                case Family::rest_xi_0: return "(T+1)^(m-i) (T+2)^(i-1)";
                case Family::rest_xi_1: return "T^(i-1) (T+1)^(m-i)";
                case Family::rest_diff_0:
                    return p == Parity::odd
                               ? "(T+1)^(j-i-1) (T+2)^(m-j) ((T+2)^i - (T+1)^(i-1))"
                               : "(T+1)^(j-i-1) (T+2)^(i-1) ((T+2)^(m-j+1) - (T+1)^(m-j))";
                case Family::rest_diff_1: return "T^(m+i-j) (T+1)^(j-i-1)";
                case Family::rest_sum_0:
                    return p == Parity::odd ? "T^(m-j) (T+1)^(j-i) ((T+2)^(i-1) - (T+1)^(i-2))"
                                            : "T^(m-j+1) (T+1)^(j-i-1) (T+2)^(i-1)";
                case Family::rest_sum_1:
                    return p == Parity::odd
                               ? "T^(i-1) (T+1)^(j-i) (T+2)^(m-j)"
                               : "T^(i-1) (T+1)^(j-i-1) ((T+2)^(m-j+1) - (T+1)^(m-j))";
                case Family::aux_diff_pinned: return "(T+1)^(m-i-1) (T+2)^(i-1)";
                case Family::aux_sum_pinned: return "T^(i-1) (T+1)^(m-i-1)";
                default: break;
            }
            break;
        case RootType::C:
            switch (f) {
                case Family::full: return "T^m";
                case Family::rest_2xi_0:
                    return p == Parity::odd ? "T^(m-i) (T+1)^(i-1)" : "2 T^(m-i) (T+1)^(i-1)";
                case Family::rest_2xi_1:
                    return p == Parity::odd ? "T^(i-1) (T+1)^(m-i)" : "0";
                case Family::rest_diff_0: return "(T+1)^(j-i-1) (T+2)^(m-j+i)";
                case Family::rest_diff_1: return "T^(m-j+i) (T+1)^(j-i-1)";
                case Family::rest_sum_0:
                    return p == Parity::odd ? "T^(m-j) (T+1)^(j-i) (T+2)^(i-1)"
                                            : "T^(m-j) (T+1)^(j-i-1) (T+2)^i";
                case Family::rest_sum_1:
                    return p == Parity::odd ? "T^(i-1) (T+1)^(j-i) (T+2)^(m-j)"
                                            : "T^i (T+1)^(j-i-1) (T+2)^(m-j)";
                default: break;
            }
            break;
        case RootType::D:
            switch (f) {
                case Family::full: return "(T+2)^m";
                case Family::rest_diff_0:
                    return p == Parity::odd ? "(T+3)^(j-i-1) (T+4)^(m-j) ((T+4)^i - (T+3)^(i-1)) "
                                              "- (T+3)^(m-i-1) (T+4)^(i-1)"
                                            : "(T+3)^(j-i-1) (T+4)^(i-1) ((T+4)^(m-j+1) - "
                                              "(T+3)^(m-j)) - (T+3)^(m-i-1) (T+4)^(i-1)";
                case Family::rest_diff_1: return "(T+2)^(m+i-j) (T+3)^(j-i-1)";
                case Family::rest_sum_0:
                    return p == Parity::odd ? "(T+2)^(m-j) (T+3)^(j-i) ((T+4)^(i-1) - (T+3)^(i-2))"
                                            : "(T+2)^(m-j+1) (T+3)^(j-i-1) (T+4)^(i-1)";
                case Family::rest_sum_1:
                    return p == Parity::odd ? "(T+2)^(i-1) (T+3)^(j-i) (T+4)^(m-j) - (T+2)^(i-1) "
                                              "(T+3)^(m-i-1)"
                                            : "(T+2)^(i-1) (T+3)^(j-i-1) ((T+4)^(m-j+1) - "
                                              "(T+3)^(m-j)) - (T+2)^(i-1) (T+3)^(m-i-1)";
                default: break;
            }
            break;
    }
    return "";
}

}  // namespace

std::vector<CatalogEntry> formula_catalog() {
    std::vector<CatalogEntry> out;
    auto domain = [](Family f, RootType root) -> std::string {
        if (f == Family::full)
            return root == RootType::D ? "m >= 1, q >= 2m-1" : "m >= 1, q >= 2m+1";
        if (family_needs_pair(f)) return "1 <= i < j <= m, q >= 2m+1";
        return "1 <= i <= m, q >= 2m+1";
    };
    for (RootType root : {RootType::B, RootType::C, RootType::D})
        for (Family f : {Family::full, Family::rest_2xi_0, Family::rest_2xi_1, Family::rest_xi_0,
                         Family::rest_xi_1, Family::rest_diff_0, Family::rest_diff_1,
                         Family::rest_sum_0, Family::rest_sum_1, Family::aux_diff_pinned,
                         Family::aux_sum_pinned}) {
            if (!family_valid(root, f)) continue;
            if (family_parity_split(root, f)) {
                out.push_back({root, f, Parity::odd, expr(root, f, Parity::odd), domain(f, root)});
                out.push_back(
                    {root, f, Parity::even, expr(root, f, Parity::even), domain(f, root)});
            } else {
                out.push_back(
                    {root, f, Parity::both, expr(root, f, Parity::both), domain(f, root)});
            }
        }
    return out;
}

std::string catalog_to_json() {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &e : formula_catalog()) {
        nlohmann::json ej;
        ej["root"] = root_type_name(e.root);
        ej["family"] = family_name(e.family);
        ej["parity"] =
            e.parity == Parity::both ? "both" : (e.parity == Parity::odd ? "odd" : "even");
        ej["expression"] = e.expression;
        ej["domain"] = e.domain;
        j.push_back(std::move(ej));
    }
    return j.dump();
}

}  // namespace shiq

#include "shiq/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "shiq/formulas.hpp"

namespace shiq {

std::string BijectionVariant::name() const {
    switch (kind) {
        case Kind::full_d: return "full";
        case Kind::sum_zero: return "sum0";
        case Kind::diff_one: return "diff1";
        case Kind::diff_zero: return "diff0";
        case Kind::sum_one: return "sum1";
    }
    throw std::logic_error("unreachable");
}

BijectionVariant parse_bijection_variant(const std::string &name, int i, int j) {
    BijectionVariant v;
    v.i = i;
    v.j = j;
    if (name == "full") {
        v.kind = BijectionVariant::Kind::full_d;
        return v;
    }
    if (name == "sum0") v.kind = BijectionVariant::Kind::sum_zero;
    else if (name == "diff1") v.kind = BijectionVariant::Kind::diff_one;
    else if (name == "diff0") v.kind = BijectionVariant::Kind::diff_zero;
    else if (name == "sum1") v.kind = BijectionVariant::Kind::sum_one;
    else throw std::invalid_argument("unknown bijection variant: " + name);
    if (!(1 <= i && i < j)) throw std::invalid_argument("variant needs 1 <= i < j");
    return v;
}

Point bijection_forward(const Point &x, long long q) {
    int zeros = 0;
    std::size_t u = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] % q == 0) {
            ++zeros;
            u = k;
        }
    if (zeros > 1) throw std::invalid_argument("point has two zero coordinates");
    Point y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = (x[k] + 1) % (q + 2);
    if (zeros == 1) y[u] = (y[u] + q) % (q + 2);  // 0 -> q+1
    return y;
}

Point bijection_backward(const Point &y, long long q) {
    int tops = 0;
    std::size_t u = 0;
    for (std::size_t k = 0; k < y.size(); ++k)
        if (y[k] % (q + 2) == q + 1) {
            ++tops;
            u = k;
        }
    if (tops > 1) throw std::invalid_argument("point has two coordinates equal to q+1");
    Point x(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) x[k] = ((y[k] - 1) % q + q) % q;
    if (tops == 1) x[u] = 0;
    return x;
}

namespace {

struct Sides {
    RestrictionCase domain;    // over Z_q
    RestrictionCase codomain;  // over Z_{q+2}
    bool augmented = false;
};

Sides variant_sides(const BijectionVariant &v, int m) {
    Sides s;
    switch (v.kind) {
        case BijectionVariant::Kind::full_d:
            s.domain = restriction_case(RootType::D, Family::full, m, 0, 0);
            s.codomain = restriction_case(RootType::B, Family::full, m, 0, 0);
            return s;
        case BijectionVariant::Kind::sum_zero:
            s.domain = restriction_case(RootType::D, Family::rest_sum_0, m, v.i, v.j);
            s.codomain = restriction_case(RootType::B, Family::rest_sum_0, m, v.i, v.j);
            return s;
        case BijectionVariant::Kind::diff_one:
            s.domain = restriction_case(RootType::D, Family::rest_diff_1, m, v.i, v.j);
            s.codomain = restriction_case(RootType::B, Family::rest_diff_1, m, v.i, v.j);
            return s;
        case BijectionVariant::Kind::diff_zero:
        case BijectionVariant::Kind::sum_one: {
            bool diff = v.kind == BijectionVariant::Kind::diff_zero;
            s.domain = restriction_case(
                RootType::D, diff ? Family::rest_diff_0 : Family::rest_sum_1, m, v.i, v.j);
            // Codomain complement also avoids the pin {x_j = -1}.
            Arrangement aug = add_hyperplane(
                build_shi(RootType::B, m),
                selector_hyperplane(Selector::coord_sel(v.j, -1), m));
            Hyperplane on = selector_hyperplane(
                diff ? Selector::diff_sel(v.i, v.j, 0) : Selector::sum_sel(v.i, v.j, 1), m);
            s.codomain = RestrictionCase{std::move(aug), {std::move(on)}};
            s.augmented = true;
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

BijectionReport verify_bijection(const BijectionVariant &variant, int m, long long q,
                                 const CountOptions &opts) {
    if (m < 2 && variant.kind != BijectionVariant::Kind::full_d)
        throw std::invalid_argument("restricted variants need m >= 2");
    if (m < 1 || q < 1) throw std::invalid_argument("need m >= 1 and q >= 1");

    Sides sides = variant_sides(variant, m);
    auto domain = enumerate_restricted(sides.domain.arrangement, sides.domain.on, q, opts);
    auto codomain =
        enumerate_restricted(sides.codomain.arrangement, sides.codomain.on, q + 2, opts);

    BijectionReport rep;
    rep.variant = variant;
    rep.m = m;
    rep.q = q;
    rep.domain_size = static_cast<long long>(domain.size());
    rep.codomain_size = static_cast<long long>(codomain.size());

    auto fail = [&](const Point &x, const std::string &why) {
        rep.pass = false;
        rep.counterexample = x;
        rep.detail = why;
        return rep;
    };

    std::set<Point> seen;
    for (const Point &x : domain) {  // lex order, so the first failure is minimal
        Point y = bijection_forward(x, q);
        if (!std::binary_search(codomain.begin(), codomain.end(), y))
            return fail(x, "image point not in the codomain complement");
        if (!seen.insert(y).second) return fail(x, "image point collides with an earlier one");
        if (sides.augmented && y[static_cast<std::size_t>(variant.j - 1)] == q + 1)
            return fail(x, "image has coordinate j equal to q+1");
        if (bijection_backward(y, q) != x) return fail(x, "backward map does not return the point");
    }
    if (rep.domain_size != rep.codomain_size) {
        rep.pass = false;
        rep.detail = "cardinalities differ";
        return rep;
    }
    rep.pass = true;
    return rep;
}

std::string bijection_report_to_json(const BijectionReport &r) {
    nlohmann::json j;
    j["variant"] = r.variant.name();
    if (r.variant.kind != BijectionVariant::Kind::full_d) {
        j["i"] = r.variant.i;
        j["j"] = r.variant.j;
    }
    j["m"] = r.m;
    j["q"] = r.q;
    j["domainSize"] = r.domain_size;
    j["codomainSize"] = r.codomain_size;
    j["pass"] = r.pass;
    if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    else
        j["counterexample"] = nullptr;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j.dump();
}

}  // namespace shiq

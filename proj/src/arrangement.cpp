#include "shiq/arrangement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace shiq {

std::string root_type_name(RootType t) {
    switch (t) {
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
    }
    throw std::logic_error("unreachable");
}

RootType parse_root_type(const std::string &s) {
    if (s == "B" || s == "b") return RootType::B;
    if (s == "C" || s == "c") return RootType::C;
    if (s == "D" || s == "d") return RootType::D;
    throw std::invalid_argument("unknown root type: " + s);
}

std::string Hyperplane::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Int &c = coeffs[k];
        if (c == 0) continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        Int a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << "x" << (k + 1);
        first = false;
    }
    if (first) os << "0";
    os << " = " << offset.get_str();
    return os.str();
}

bool Arrangement::contains(const Hyperplane &h) const { return index_of(h).has_value(); }

std::optional<std::size_t> Arrangement::index_of(const Hyperplane &h) const {
    auto it = std::find(hyperplanes.begin(), hyperplanes.end(), h);
    if (it == hyperplanes.end()) return std::nullopt;
    return static_cast<std::size_t>(it - hyperplanes.begin());
}

Hyperplane selector_hyperplane(const Selector &sel, int m) {
    if (m < 1) throw std::invalid_argument("selector: dimension must be >= 1");
    auto in_range = [m](int k) { return 1 <= k && k <= m; };
    std::vector<Int> c(static_cast<std::size_t>(m), Int(0));
    switch (sel.kind) {
        case Selector::Kind::coord2:
            if (!in_range(sel.i)) throw std::invalid_argument("selector: index out of range");
            c[sel.i - 1] = 2;
            break;
        case Selector::Kind::coord:
            if (!in_range(sel.i)) throw std::invalid_argument("selector: index out of range");
            c[sel.i - 1] = 1;
            break;
        case Selector::Kind::diff:
        case Selector::Kind::sum:
            if (!in_range(sel.i) || !in_range(sel.j) || sel.i >= sel.j)
                throw std::invalid_argument("selector: pair indices must satisfy 1 <= i < j <= m");
            c[sel.i - 1] = 1;
            c[sel.j - 1] = (sel.kind == Selector::Kind::diff) ? -1 : 1;
            break;
    }
    return Hyperplane{std::move(c), sel.c};
}

Arrangement build_shi(RootType type, int m) {
    if (m < 1) throw std::invalid_argument("build_shi: m must be >= 1");
    Arrangement a;
    a.dim = m;
    auto push = [&](const Selector &sel) {
        a.hyperplanes.push_back(selector_hyperplane(sel, m));
    };
    if (type == RootType::B || type == RootType::C) {
        for (int i = 1; i <= m; ++i)
            for (int c = 0; c <= 1; ++c)
                push(type == RootType::C ? Selector::coord2_sel(i, c)
                                         : Selector::coord_sel(i, c));
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int c = 0; c <= 1; ++c) {
                push(Selector::diff_sel(i, j, c));
                push(Selector::sum_sel(i, j, c));
            }
    return a;
}

Arrangement delete_hyperplanes(const Arrangement &a, const std::vector<Hyperplane> &s) {
    Arrangement out;
    out.dim = a.dim;
    for (const auto &h : s)
        if (!a.contains(h))
            throw std::invalid_argument("delete_hyperplanes: not a member: " + h.str());
    for (const auto &h : a.hyperplanes)
        if (std::find(s.begin(), s.end(), h) == s.end()) out.hyperplanes.push_back(h);
    return out;
}

Arrangement add_hyperplane(const Arrangement &a, Hyperplane h) {
    if (h.coeffs.size() != static_cast<std::size_t>(a.dim))
        throw std::invalid_argument("add_hyperplane: coefficient length does not match dimension");
    if (std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const Int &c) { return c == 0; }))
        throw std::invalid_argument("add_hyperplane: all-zero coefficients");
    if (a.contains(h)) throw std::invalid_argument("add_hyperplane: duplicate: " + h.str());
    Arrangement out = a;
    out.hyperplanes.push_back(std::move(h));
    return out;
}

std::string arrangement_to_json(const Arrangement &a) {
    nlohmann::json j;
    j["m"] = a.dim;
    j["hyperplanes"] = nlohmann::json::array();
    for (const auto &h : a.hyperplanes) {
        nlohmann::json hj;
        hj["a"] = nlohmann::json::array();
        for (const auto &c : h.coeffs) hj["a"].push_back(to_ll(c));
        hj["b"] = to_ll(h.offset);
        j["hyperplanes"].push_back(std::move(hj));
    }
    return j.dump();
}

Arrangement arrangement_from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Arrangement a;
    a.dim = j.at("m").get<int>();
    if (a.dim < 1) throw std::invalid_argument("arrangement json: m must be >= 1");
    for (const auto &hj : j.at("hyperplanes")) {
        Hyperplane h;
        for (const auto &c : hj.at("a")) h.coeffs.push_back(make_int(c.get<long long>()));
        h.offset = make_int(hj.at("b").get<long long>());
        if (h.coeffs.size() != static_cast<std::size_t>(a.dim))
            throw std::invalid_argument("arrangement json: coefficient length mismatch");
        if (std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const Int &c) { return c == 0; }))
            throw std::invalid_argument("arrangement json: all-zero coefficients");
        if (a.contains(h))
            throw std::invalid_argument("arrangement json: duplicate hyperplane: " + h.str());
        a.hyperplanes.push_back(std::move(h));
    }
    return a;
}

}  // namespace shiq

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiq/numeric.hpp"

namespace shiq {

enum class RootType { B, C, D };

std::string root_type_name(RootType t);
RootType parse_root_type(const std::string &s);

// An integral hyperplane {x : a.x = b}. Stored exactly as constructed:
// no gcd division and no sign canonicalization, since scaling changes the
// solution set over Z_q ({2x=0} != {x=0}). Structural equality is the
// identity criterion.
struct Hyperplane {
    std::vector<Int> coeffs;
    Int offset;

    bool operator==(const Hyperplane &) const = default;
    std::string str() const;
};

struct Arrangement {
    int dim = 1;
    std::vector<Hyperplane> hyperplanes;  // ordered, duplicate-free

    std::size_t size() const { return hyperplanes.size(); }
    bool contains(const Hyperplane &h) const;
    std::optional<std::size_t> index_of(const Hyperplane &h) const;
};

// One member of the catalog's hyperplane families:
//   coord2: {2x_i = c}     coord: {x_i = c}
//   diff:   {x_i - x_j = c}   sum: {x_i + x_j = c},  1 <= i < j <= m
struct Selector {
    enum class Kind { coord2, coord, diff, sum };
    Kind kind;
    int i = 0;
    int j = 0;
    Int c;

    static Selector coord2_sel(int i, Int c) { return {Kind::coord2, i, 0, std::move(c)}; }
    static Selector coord_sel(int i, Int c) { return {Kind::coord, i, 0, std::move(c)}; }
    static Selector diff_sel(int i, int j, Int c) { return {Kind::diff, i, j, std::move(c)}; }
    static Selector sum_sel(int i, int j, Int c) { return {Kind::sum, i, j, std::move(c)}; }
};

Hyperplane selector_hyperplane(const Selector &sel, int m);

// Shi arrangement of the given type: offsets 0 and 1 on every coordinate
// form (B: x_i, C: 2x_i, D: none) and on every pair form x_i +- x_j.
Arrangement build_shi(RootType type, int m);

Arrangement delete_hyperplanes(const Arrangement &a, const std::vector<Hyperplane> &s);
Arrangement add_hyperplane(const Arrangement &a, Hyperplane h);

std::string arrangement_to_json(const Arrangement &a);
Arrangement arrangement_from_json(const std::string &text);

}  // namespace shiq

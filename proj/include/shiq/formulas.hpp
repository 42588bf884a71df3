#pragma once

#include <string>
#include <vector>

#include "shiq/arrangement.hpp"
#include "shiq/rat_polynomial.hpp"

namespace shiq {

// The closed-form catalog: one exact evaluator per restriction family of the
// Shi arrangements, plus the two auxiliary counts on the augmented
// arrangement B_m u {x_j = -1} that the type D derivation runs through.
enum class Family {
    full,
    rest_2xi_0,  // C: {2x_i = 0}
    rest_2xi_1,  // C: {2x_i = 1}
    rest_xi_0,   // B: {x_i = 0}
    rest_xi_1,   // B: {x_i = 1}
    rest_diff_0,
    rest_diff_1,
    rest_sum_0,
    rest_sum_1,
    aux_diff_pinned,  // (B_m u {x_j=-1}) on {x_i - x_j = 0, x_j = -1}
    aux_sum_pinned,   // (B_m u {x_j=-1}) on {x_i + x_j = 1, x_j = -1}
};

enum class Parity { odd, even, both };

struct FormulaId {
    RootType root;
    Family family;
    Parity parity = Parity::both;
};

std::string family_name(Family f);
Family parse_family(const std::string &s);

bool family_valid(RootType root, Family f);
bool family_needs_pair(Family f);                     // requires (i, j) with i < j
bool family_parity_split(RootType root, Family f);    // distinct odd/even branches
bool family_is_aux(Family f);

// Member hyperplane of build_shi(root, m) selected by a restriction family.
Selector family_selector(Family f, int i, int j);

// The exact counting problem each formula answers: an arrangement plus the
// member hyperplanes the count is restricted onto.
struct RestrictionCase {
    Arrangement arrangement;
    std::vector<Hyperplane> on;
};
RestrictionCase restriction_case(RootType root, Family f, int m, int i, int j);

// (q-2m)^m for B and C (q >= 2m+1); (q-2m+2)^m for D (q >= 2m-1).
Int eval_full_shi_formula(RootType root, int m, long long q);

// Catalog value of the restriction family at q; the parity of q selects the
// branch. Evaluated over the rationals (boundary indices produce negative
// exponents) and asserted integral.
Int eval_restriction_formula(RootType root, Family f, int m, int i, int j, long long q);

// Independent second transcription of the same catalog, asserted equal to the
// first on a window of points by the tests; guards against transcription drift.
Int eval_restriction_formula_alt(RootType root, Family f, int m, int i, int j, long long q);

Int eval_auxiliary_formula(Family lemma, int m, int i, int j, long long q);

// Deletion count via the partition identity: full + restriction.
Int eval_deletion_formula(RootType root, Family f, int m, int i, int j, long long q);

// The catalog value as a polynomial in q on one parity class, recovered by
// exact interpolation and over-validated on extra points.
RatPolynomial restriction_constituent(RootType root, Family f, int m, int i, int j, Parity p);
RatPolynomial full_shi_polynomial(RootType root, int m);

struct CatalogEntry {
    RootType root;
    Family family;
    Parity parity;
    std::string expression;  // closed form with T = q - 2m
    std::string domain;
};
std::vector<CatalogEntry> formula_catalog();
std::string catalog_to_json();

}  // namespace shiq

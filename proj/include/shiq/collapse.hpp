#pragma once

#include <string>
#include <vector>

#include "shiq/counting.hpp"
#include "shiq/formulas.hpp"

namespace shiq {

enum class Verdict { polynomial, quasi };

std::string verdict_name(Verdict v);

// Stem of a parallel pair {offset 0, offset 1} within one family.
enum class FamilyStem { coord2, diff, sum };

// Verdict for deleting one hyperplane from the type C or D Shi arrangement:
// "polynomial" iff the odd and even constituents of the deletion
// quasi-polynomial (full + restriction, per parity) coincide exactly.
Verdict classify_single_deletion(RootType root, int m, const Selector &h);

// Verdict for deleting a parallel pair: polynomial iff the odd and even
// constituents of full + restriction(offset 0) + restriction(offset 1) agree.
Verdict classify_pair_deletion(RootType root, int m, FamilyStem stem, int i, int j);

// Same verdicts obtained from oracle counts: fit the deletion counts over
// q in [2m+1, 2m+12] with period 2 and test whether the period collapses.
Verdict classify_single_deletion_oracle(RootType root, int m, const Selector &h,
                                        const CountOptions &opts = {});
Verdict classify_pair_deletion_oracle(RootType root, int m, FamilyStem stem, int i, int j,
                                      const CountOptions &opts = {});

// The classification lists, transcribed as standalone predicates so the
// comparison against the computed verdicts is two-sided.
bool expected_single_polynomial(RootType root, int m, Family f, int i, int j);
bool expected_pair_polynomial(RootType root, int m, FamilyStem stem, int i, int j);

struct ClassificationRow {
    std::string subject;
    Family family;
    int i = 0;
    int j = 0;
    bool pair = false;
    Verdict computed = Verdict::quasi;
    Verdict expected = Verdict::quasi;
    bool agree = false;
};

struct ClassificationReport {
    RootType root;
    int m = 0;
    std::vector<ClassificationRow> rows;
    bool pass = false;
};

// Classifies every hyperplane and every parallel pair of the arrangement and
// compares against the expected predicates.
ClassificationReport verify_corollaries(RootType root, int m);

std::string classification_to_json(const ClassificationReport &r);
std::string classification_to_csv(const ClassificationReport &r);

}  // namespace shiq

#pragma once

#include <string>
#include <vector>

#include "shiq/counting.hpp"

namespace shiq {

// Box-and-circle layout for the full type C complement count. Two rows of
// `box_pairs` boxes; odd q excludes the lower-right box from placement, even
// q instead adds a side circle holding the residue q/2. Either way exactly
// q - 2m boxes accept labels and every placement decodes to one point of the
// complement.
struct BoxLayout {
    int m = 0;
    long long q = 0;
    long long box_pairs = 0;  // boxes per row
    bool side_circle = false;
    bool lower_right_excluded = false;

    long long placeable_boxes() const { return 2 * box_pairs - (lower_right_excluded ? 1 : 0); }
};

struct BoxRef {
    bool lower = false;
    long long index = 0;  // 1-based, left to right

    bool operator==(const BoxRef &) const = default;
};

struct Placement {
    std::vector<BoxRef> box_of_label;  // label i at box_of_label[i-1]
};

BoxLayout build_layout(int m, long long q);

// Clockwise circle sequence induced by a placement: positions number
// 0..q-1 from the upper-left leader; a labeled circle at position p forces an
// unlabeled mirror at position q-p.
struct CircleSequence {
    std::vector<long long> point;     // point[i-1] = position of label i
    std::vector<int> label_at;        // label_at[pos] = label, 0 if unlabeled
};

CircleSequence decode_placement_circles(const Placement &p, const BoxLayout &layout);
Point decode_placement(const Placement &p, const BoxLayout &layout);

struct EncodingReport {
    int m = 0;
    long long q = 0;
    Int placements;
    Int complement_size;
    bool pass = false;
    std::string detail;
};

// Decodes every placement, asserting distinct images that all lie in the
// type C complement, with image count equal to the oracle count.
EncodingReport verify_encoding(int m, long long q, const CountOptions &opts = {});

std::string placement_to_json(const Placement &p, int m, long long q);
Placement placement_from_json(const std::string &text);
std::string encoding_report_to_json(const EncodingReport &r);

}  // namespace shiq

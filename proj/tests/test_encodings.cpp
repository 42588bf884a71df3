#include <doctest.h>

#include <set>

#include <json.hpp>

#include "shiq/encodings.hpp"

using namespace shiq;

namespace {

Placement worked_example_placement() {
    // labels 1..5 into upper 2, upper 3, lower 2, lower 2, lower 1
    Placement p;
    p.box_of_label = {{false, 2}, {false, 3}, {true, 2}, {true, 2}, {true, 1}};
    return p;
}

}  // namespace

TEST_CASE("layout shapes") {
    BoxLayout odd = build_layout(5, 15);
    CHECK(odd.box_pairs == 3);
    CHECK(odd.lower_right_excluded);
    CHECK_FALSE(odd.side_circle);
    CHECK(odd.placeable_boxes() == 5);

    BoxLayout even = build_layout(5, 16);
    CHECK(even.box_pairs == 3);
    CHECK(even.side_circle);
    CHECK_FALSE(even.lower_right_excluded);
    CHECK(even.placeable_boxes() == 6);

    BoxLayout tiny = build_layout(1, 5);
    CHECK(tiny.box_pairs == 2);
    CHECK(tiny.lower_right_excluded);

    CHECK_THROWS_AS(build_layout(5, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_layout(0, 5), std::invalid_argument);
}

TEST_CASE("the worked figures decode to the stated points") {
    Placement p = worked_example_placement();
    CHECK(decode_placement(p, build_layout(5, 15)) == Point{3, 7, 10, 11, 14});
    CHECK(decode_placement(p, build_layout(5, 16)) == Point{3, 7, 11, 12, 15});

    Placement single;
    single.box_of_label = {{false, 1}};
    CHECK(decode_placement(single, build_layout(1, 5)) == Point{1});
}

TEST_CASE("decoding rejects malformed placements") {
    BoxLayout odd = build_layout(5, 15);
    Placement bad = worked_example_placement();
    bad.box_of_label[4] = {true, 3};  // lower-right is excluded for odd q
    CHECK_THROWS_AS(decode_placement(bad, odd), std::invalid_argument);
    bad.box_of_label[4] = {false, 4};  // out of range
    CHECK_THROWS_AS(decode_placement(bad, odd), std::invalid_argument);
    Placement short_one;
    short_one.box_of_label = {{false, 1}};
    CHECK_THROWS_AS(decode_placement(short_one, odd), std::invalid_argument);
}

TEST_CASE("mirror invariant across every placement") {
    for (int m : {1, 2, 3}) {
        for (long long q = 2 * m + 1; q <= 2 * m + 5; ++q) {
            BoxLayout layout = build_layout(m, q);
            std::vector<BoxRef> boxes;
            for (long long u = 1; u <= layout.box_pairs; ++u) boxes.push_back({false, u});
            for (long long u = 1; u <= layout.box_pairs; ++u)
                if (!(layout.lower_right_excluded && u == layout.box_pairs))
                    boxes.push_back({true, u});

            std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
            while (true) {
                Placement p;
                for (int label = 0; label < m; ++label)
                    p.box_of_label.push_back(boxes[choice[static_cast<std::size_t>(label)]]);
                CircleSequence seq = decode_placement_circles(p, layout);

                CHECK(seq.label_at[0] == 0);  // position 0 is always unlabeled
                if (q % 2 != 0)
                    CHECK(seq.label_at[static_cast<std::size_t>((q + 1) / 2)] == 0);
                else
                    CHECK(seq.label_at[static_cast<std::size_t>(q / 2)] == 0);
                for (int label = 1; label <= m; ++label) {
                    long long pos = seq.point[static_cast<std::size_t>(label - 1)];
                    CHECK(pos >= 0);
                    long long mirror = (q - pos) % q;
                    CHECK(seq.label_at[static_cast<std::size_t>(mirror)] == 0);
                }

                std::size_t k = choice.size();
                while (k > 0 && ++choice[k - 1] == boxes.size()) {
                    choice[k - 1] = 0;
                    --k;
                }
                if (k == 0) break;
            }
        }
    }
}

TEST_CASE("placement decoding is a bijection onto the complement") {
    EncodingReport r27 = verify_encoding(2, 7);
    CHECK(r27.pass);
    CHECK(r27.placements == 9);
    CHECK(r27.complement_size == 9);

    EncodingReport r15 = verify_encoding(1, 5);
    CHECK(r15.pass);
    CHECK(r15.placements == 3);

    EncodingReport r28 = verify_encoding(2, 8);
    CHECK(r28.pass);
    CHECK(r28.placements == 16);

    // the three decoded values for m=1, q=5 are exactly {1, 2, 4}
    BoxLayout tiny = build_layout(1, 5);
    std::set<long long> vals;
    for (BoxRef ref : {BoxRef{false, 1}, BoxRef{false, 2}, BoxRef{true, 1}}) {
        Placement p;
        p.box_of_label = {ref};
        vals.insert(decode_placement(p, tiny)[0]);
    }
    CHECK(vals == std::set<long long>{1, 2, 4});
}

TEST_CASE("placement json round-trip") {
    Placement p = worked_example_placement();
    std::string text = placement_to_json(p, 5, 15);
    auto j = nlohmann::json::parse(text);
    CHECK(j["boxes"]["1"] == "U2");
    CHECK(j["boxes"]["5"] == "L1");
    Placement back = placement_from_json(text);
    CHECK(back.box_of_label == p.box_of_label);
}

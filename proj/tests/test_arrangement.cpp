#include <doctest.h>

#include <algorithm>
#include <set>

#include "shiq/arrangement.hpp"

using namespace shiq;

TEST_CASE("shi arrangement construction") {
    Arrangement b2 = build_shi(RootType::B, 2);
    CHECK(b2.size() == 8);
    CHECK(b2.contains(Hyperplane{{1, 0}, 0}));
    CHECK(b2.contains(Hyperplane{{1, 0}, 1}));
    CHECK(b2.contains(Hyperplane{{0, 1}, 0}));
    CHECK(b2.contains(Hyperplane{{1, -1}, 1}));
    CHECK(b2.contains(Hyperplane{{1, 1}, 0}));

    Arrangement c2 = build_shi(RootType::C, 2);
    CHECK(c2.size() == 8);
    CHECK(c2.contains(Hyperplane{{2, 0}, 0}));
    CHECK(c2.contains(Hyperplane{{0, 2}, 1}));
    CHECK_FALSE(c2.contains(Hyperplane{{1, 0}, 0}));

    CHECK(build_shi(RootType::D, 1).size() == 0);
    CHECK(build_shi(RootType::D, 2).size() == 4);

    for (int m = 1; m <= 5; ++m) {
        CHECK(build_shi(RootType::B, m).size() == 2 * m + 2 * m * (m - 1));
        CHECK(build_shi(RootType::C, m).size() == build_shi(RootType::B, m).size());
        CHECK(build_shi(RootType::D, m).size() == 2 * m * (m - 1));
    }

    CHECK_THROWS_AS(build_shi(RootType::B, 0), std::invalid_argument);
}

TEST_CASE("type D is type B without the coordinate hyperplanes") {
    for (int m = 2; m <= 4; ++m) {
        Arrangement b = build_shi(RootType::B, m);
        Arrangement d = build_shi(RootType::D, m);
        std::vector<Hyperplane> coords;
        for (int i = 1; i <= m; ++i)
            for (int c = 0; c <= 1; ++c)
                coords.push_back(selector_hyperplane(Selector::coord_sel(i, c), m));
        Arrangement stripped = delete_hyperplanes(b, coords);
        CHECK(stripped.hyperplanes == d.hyperplanes);
    }
}

TEST_CASE("selector transcription") {
    CHECK(selector_hyperplane(Selector::coord2_sel(1, 0), 2) == Hyperplane{{2, 0}, 0});
    CHECK(selector_hyperplane(Selector::diff_sel(1, 2, 1), 3) == Hyperplane{{1, -1, 0}, 1});
    CHECK(selector_hyperplane(Selector::coord_sel(2, -1), 2) == Hyperplane{{0, 1}, -1});
    CHECK(selector_hyperplane(Selector::sum_sel(2, 3, 0), 3) == Hyperplane{{0, 1, 1}, 0});

    CHECK_THROWS_AS(selector_hyperplane(Selector::coord_sel(3, 0), 2), std::invalid_argument);
    CHECK_THROWS_AS(selector_hyperplane(Selector::diff_sel(2, 2, 0), 3), std::invalid_argument);
    CHECK_THROWS_AS(selector_hyperplane(Selector::sum_sel(2, 1, 0), 3), std::invalid_argument);
}

TEST_CASE("selector transcription is injective for fixed m") {
    const int m = 4;
    std::set<std::pair<std::vector<Int>, Int>> seen;
    std::size_t produced = 0;
    auto probe = [&](const Selector &sel) {
        Hyperplane h = selector_hyperplane(sel, m);
        seen.insert({h.coeffs, h.offset});
        ++produced;
    };
    for (int c = 0; c <= 1; ++c)
        for (int i = 1; i <= m; ++i) {
            probe(Selector::coord2_sel(i, c));
            probe(Selector::coord_sel(i, c));
            for (int j = i + 1; j <= m; ++j) {
                probe(Selector::diff_sel(i, j, c));
                probe(Selector::sum_sel(i, j, c));
            }
        }
    for (int i = 1; i <= m; ++i) probe(Selector::coord_sel(i, -1));
    CHECK(seen.size() == produced);
}

TEST_CASE("deletion and augmentation") {
    Arrangement b2 = build_shi(RootType::B, 2);
    Arrangement c2 = build_shi(RootType::C, 2);
    Arrangement d1 = build_shi(RootType::D, 1);
    Arrangement d2 = build_shi(RootType::D, 2);

    CHECK(delete_hyperplanes(b2, {Hyperplane{{1, 0}, 0}}).size() == 7);
    CHECK(delete_hyperplanes(c2, {Hyperplane{{1, 1}, 0}, Hyperplane{{1, 1}, 1}}).size() == 6);
    CHECK_THROWS_AS(delete_hyperplanes(d1, {Hyperplane{{1}, 0}}), std::invalid_argument);

    CHECK(add_hyperplane(b2, Hyperplane{{0, 1}, -1}).size() == 9);
    CHECK(add_hyperplane(build_shi(RootType::D, 2), Hyperplane{{2, 0}, 0}).size() == 5);
    CHECK_THROWS_AS(add_hyperplane(d2, Hyperplane{{1, -1}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(add_hyperplane(d2, Hyperplane{{0, 0}, 1}), std::invalid_argument);
    CHECK_THROWS_AS(add_hyperplane(d2, Hyperplane{{1}, 0}), std::invalid_argument);

    // delete then re-add restores the same set
    Hyperplane h{{1, -1}, 1};
    Arrangement round = add_hyperplane(delete_hyperplanes(d2, {h}), h);
    auto sorted = [](Arrangement a) {
        std::sort(a.hyperplanes.begin(), a.hyperplanes.end(),
                  [](const Hyperplane &x, const Hyperplane &y) {
                      return std::pair(x.coeffs, x.offset) < std::pair(y.coeffs, y.offset);
                  });
        return a.hyperplanes;
    };
    CHECK(sorted(round) == sorted(d2));

    // deletion preserves the order of the survivors
    Arrangement del = delete_hyperplanes(c2, {c2.hyperplanes[2]});
    CHECK(del.hyperplanes[0] == c2.hyperplanes[0]);
    CHECK(del.hyperplanes[2] == c2.hyperplanes[3]);
}

TEST_CASE("arrangement json round-trip") {
    Arrangement c2 = build_shi(RootType::C, 2);
    Arrangement back = arrangement_from_json(arrangement_to_json(c2));
    CHECK(back.dim == c2.dim);
    CHECK(back.hyperplanes == c2.hyperplanes);

    Arrangement aug = add_hyperplane(build_shi(RootType::B, 2),
                                     selector_hyperplane(Selector::coord_sel(2, -1), 2));
    CHECK(arrangement_from_json(arrangement_to_json(aug)).hyperplanes == aug.hyperplanes);

    CHECK_THROWS(arrangement_from_json("{\"m\":2,\"hyperplanes\":[{\"a\":[0,0],\"b\":1}]}"));
    CHECK_THROWS(arrangement_from_json(
        "{\"m\":2,\"hyperplanes\":[{\"a\":[1,0],\"b\":1},{\"a\":[1,0],\"b\":1}]}"));
}

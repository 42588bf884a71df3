#include <doctest.h>

#include <json.hpp>

#include "shiq/collapse.hpp"

using namespace shiq;

TEST_CASE("single-deletion verdicts on pinned cases") {
    CHECK(classify_single_deletion(RootType::C, 3, Selector::diff_sel(1, 2, 0)) ==
          Verdict::polynomial);
    CHECK(classify_single_deletion(RootType::C, 3, Selector::coord2_sel(1, 0)) == Verdict::quasi);
    CHECK(classify_single_deletion(RootType::D, 3, Selector::diff_sel(1, 3, 0)) ==
          Verdict::polynomial);
    CHECK(classify_single_deletion(RootType::D, 3, Selector::diff_sel(1, 2, 0)) == Verdict::quasi);
    CHECK(classify_single_deletion(RootType::D, 3, Selector::sum_sel(1, 2, 0)) ==
          Verdict::polynomial);  // x_1 + x_j = 0 collapses for any j
    CHECK(classify_single_deletion(RootType::D, 3, Selector::sum_sel(2, 3, 1)) ==
          Verdict::polynomial);  // x_i + x_m = 1 collapses for any i

    CHECK_THROWS_AS(classify_single_deletion(RootType::B, 3, Selector::diff_sel(1, 2, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_single_deletion(RootType::D, 3, Selector::coord2_sel(1, 0)),
                    std::invalid_argument);
}

TEST_CASE("pair-deletion verdicts on pinned cases") {
    CHECK(classify_pair_deletion(RootType::C, 3, FamilyStem::coord2, 2, 0) ==
          Verdict::polynomial);  // 2i = m+1 with m odd
    CHECK(classify_pair_deletion(RootType::C, 3, FamilyStem::coord2, 1, 0) == Verdict::quasi);
    CHECK(classify_pair_deletion(RootType::C, 2, FamilyStem::sum, 1, 2) == Verdict::polynomial);
    CHECK(classify_pair_deletion(RootType::D, 3, FamilyStem::sum, 1, 2) == Verdict::quasi);
    CHECK(classify_pair_deletion(RootType::D, 3, FamilyStem::sum, 1, 3) == Verdict::polynomial);
    CHECK(classify_pair_deletion(RootType::D, 4, FamilyStem::diff, 2, 3) == Verdict::polynomial);
}

TEST_CASE("classification agrees with the expected lists") {
    for (RootType root : {RootType::C, RootType::D})
        for (int m : {2, 3}) {
            ClassificationReport rep = verify_corollaries(root, m);
            CHECK(rep.pass);
            for (const auto &row : rep.rows) CHECK(row.agree);
        }
}

TEST_CASE("oracle-fit classification agrees with the symbolic one") {
    // spot window; the full m in {2,3} sweep runs in the acceptance suite
    const int m = 2;
    for (RootType root : {RootType::C, RootType::D}) {
        for (int c = 0; c <= 1; ++c) {
            CHECK(classify_single_deletion_oracle(root, m, Selector::diff_sel(1, 2, c)) ==
                  classify_single_deletion(root, m, Selector::diff_sel(1, 2, c)));
            CHECK(classify_single_deletion_oracle(root, m, Selector::sum_sel(1, 2, c)) ==
                  classify_single_deletion(root, m, Selector::sum_sel(1, 2, c)));
        }
        CHECK(classify_pair_deletion_oracle(root, m, FamilyStem::sum, 1, 2) ==
              classify_pair_deletion(root, m, FamilyStem::sum, 1, 2));
    }
    CHECK(classify_single_deletion_oracle(RootType::C, m, Selector::coord2_sel(1, 1)) ==
          classify_single_deletion(RootType::C, m, Selector::coord2_sel(1, 1)));
    CHECK(classify_pair_deletion_oracle(RootType::C, m, FamilyStem::coord2, 1, 0) ==
          classify_pair_deletion(RootType::C, m, FamilyStem::coord2, 1, 0));
}

TEST_CASE("deletion polynomiality reduces to the restriction sum") {
    // the full count is a polynomial, so deciding on full + restrictions is
    // the same as deciding on the restriction sum alone
    for (RootType root : {RootType::C, RootType::D})
        for (int m : {2, 3})
            for (Family f :
                 {Family::rest_2xi_0, Family::rest_diff_0, Family::rest_sum_0,
                  Family::rest_sum_1}) {
                if (!family_valid(root, f)) continue;
                int i = 1, j = family_needs_pair(f) ? 2 : 0;
                RatPolynomial odd = restriction_constituent(root, f, m, i, j, Parity::odd);
                RatPolynomial even = restriction_constituent(root, f, m, i, j, Parity::even);
                RatPolynomial full = full_shi_polynomial(root, m);
                CHECK(((full + odd) == (full + even)) == (odd == even));
            }
}

TEST_CASE("report serialization") {
    ClassificationReport rep = verify_corollaries(RootType::C, 2);
    auto j = nlohmann::json::parse(classification_to_json(rep));
    CHECK(j["root"] == "C");
    CHECK(j["pass"] == true);
    CHECK(j["rows"].size() == rep.rows.size());

    std::string csv = classification_to_csv(rep);
    CHECK(csv.find("subject,pair,verdict,expected,agree") == 0);
    CHECK(csv.find("polynomial") != std::string::npos);
}

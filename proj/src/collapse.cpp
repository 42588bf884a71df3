#include "shiq/collapse.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "shiq/quasipoly.hpp"

namespace shiq {

std::string verdict_name(Verdict v) { return v == Verdict::polynomial ? "polynomial" : "quasi"; }

namespace {

void check_root(RootType root) {
    if (root != RootType::C && root != RootType::D)
        throw std::invalid_argument("classification covers types C and D");
}

Family selector_family(RootType root, const Selector &h) {
    long long c = to_ll(h.c);
    if (c != 0 && c != 1) throw std::invalid_argument("classification: offset must be 0 or 1");
    switch (h.kind) {
        case Selector::Kind::coord2:
            if (root != RootType::C) throw std::invalid_argument("coord2 selector needs type C");
            return c == 0 ? Family::rest_2xi_0 : Family::rest_2xi_1;
        case Selector::Kind::diff: return c == 0 ? Family::rest_diff_0 : Family::rest_diff_1;
        case Selector::Kind::sum: return c == 0 ? Family::rest_sum_0 : Family::rest_sum_1;
        case Selector::Kind::coord:
            throw std::invalid_argument("coordinate selectors {x_i=c} are not members of C or D");
    }
    throw std::logic_error("unreachable");
}

std::pair<Family, Family> stem_families(RootType root, FamilyStem stem) {
    switch (stem) {
        case FamilyStem::coord2:
            if (root != RootType::C) throw std::invalid_argument("coord2 pairs need type C");
            return {Family::rest_2xi_0, Family::rest_2xi_1};
        case FamilyStem::diff: return {Family::rest_diff_0, Family::rest_diff_1};
        case FamilyStem::sum: return {Family::rest_sum_0, Family::rest_sum_1};
    }
    throw std::logic_error("unreachable");
}

Verdict verdict_from_constituents(const RatPolynomial &odd, const RatPolynomial &even) {
    return odd == even ? Verdict::polynomial : Verdict::quasi;
}

Verdict classify_families(RootType root, int m, const std::vector<Family> &fams, int i, int j) {
    RatPolynomial full = full_shi_polynomial(root, m);
    RatPolynomial odd = full, even = full;
    for (Family f : fams) {
        odd = odd + restriction_constituent(root, f, m, i, j, Parity::odd);
        even = even + restriction_constituent(root, f, m, i, j, Parity::even);
    }
    return verdict_from_constituents(odd, even);
}

Verdict oracle_verdict(RootType root, int m, const std::vector<Hyperplane> &deleted,
                       const CountOptions &opts) {
    Arrangement arr = delete_hyperplanes(build_shi(root, m), deleted);
    std::vector<CountSample> samples;
    for (long long q = 2 * m + 1; q <= 2 * m + 12; ++q)
        samples.push_back({q, count_complement(arr, q, opts)});
    QuasiPolynomial qp = fit_quasi_polynomial(samples, 2, m, 2 * m + 1);
    return minimal_period(qp) == 1 ? Verdict::polynomial : Verdict::quasi;
}

}  // namespace

Verdict classify_single_deletion(RootType root, int m, const Selector &h) {
    check_root(root);
    if (m < 2) throw std::invalid_argument("classification needs m >= 2");
    Family f = selector_family(root, h);
    return classify_families(root, m, {f}, h.i, h.j);
}

Verdict classify_pair_deletion(RootType root, int m, FamilyStem stem, int i, int j) {
    check_root(root);
    if (m < 2) throw std::invalid_argument("classification needs m >= 2");
    auto [f0, f1] = stem_families(root, stem);
    return classify_families(root, m, {f0, f1}, i, j);
}

Verdict classify_single_deletion_oracle(RootType root, int m, const Selector &h,
                                        const CountOptions &opts) {
    check_root(root);
    return oracle_verdict(root, m, {selector_hyperplane(h, m)}, opts);
}

Verdict classify_pair_deletion_oracle(RootType root, int m, FamilyStem stem, int i, int j,
                                      const CountOptions &opts) {
    check_root(root);
    Selector s0, s1;
    switch (stem) {
        case FamilyStem::coord2:
            s0 = Selector::coord2_sel(i, 0);
            s1 = Selector::coord2_sel(i, 1);
            break;
        case FamilyStem::diff:
            s0 = Selector::diff_sel(i, j, 0);
            s1 = Selector::diff_sel(i, j, 1);
            break;
        case FamilyStem::sum:
            s0 = Selector::sum_sel(i, j, 0);
            s1 = Selector::sum_sel(i, j, 1);
            break;
    }
    return oracle_verdict(root, m, {selector_hyperplane(s0, m), selector_hyperplane(s1, m)}, opts);
}

bool expected_single_polynomial(RootType root, int m, Family f, int i, int j) {
    check_root(root);
    if (root == RootType::C) return f == Family::rest_diff_0 || f == Family::rest_diff_1;
    switch (f) {
        case Family::rest_diff_0: return i + j == m + 1;
        case Family::rest_diff_1: return true;
        case Family::rest_sum_0: return i == 1;
        case Family::rest_sum_1: return j == m;
        default: return false;
    }
}

bool expected_pair_polynomial(RootType root, int m, FamilyStem stem, int i, int j) {
    check_root(root);
    if (root == RootType::C) {
        switch (stem) {
            case FamilyStem::coord2: return m % 2 == 1 && 2 * i == m + 1;
            case FamilyStem::diff: return true;
            case FamilyStem::sum: return i + j == m + 1;
        }
    }
    return (stem == FamilyStem::diff || stem == FamilyStem::sum) && i + j == m + 1;
}

ClassificationReport verify_corollaries(RootType root, int m) {
    check_root(root);
    if (m < 2) throw std::invalid_argument("classification needs m >= 2");

    ClassificationReport rep;
    rep.root = root;
    rep.m = m;

    auto add_single = [&](const Selector &sel, Family f) {
        ClassificationRow row;
        row.subject = "delete { " + selector_hyperplane(sel, m).str() + " }";
        row.family = f;
        row.i = sel.i;
        row.j = sel.j;
        row.computed = classify_single_deletion(root, m, sel);
        row.expected = expected_single_polynomial(root, m, f, sel.i, sel.j) ? Verdict::polynomial
                                                                            : Verdict::quasi;
        row.agree = row.computed == row.expected;
        rep.rows.push_back(std::move(row));
    };
    auto add_pair = [&](FamilyStem stem, int i, int j, const std::string &subject) {
        ClassificationRow row;
        row.subject = subject;
        auto [f0, f1] = stem_families(root, stem);
        (void)f1;
        row.family = f0;
        row.i = i;
        row.j = j;
        row.pair = true;
        row.computed = classify_pair_deletion(root, m, stem, i, j);
        row.expected =
            expected_pair_polynomial(root, m, stem, i, j) ? Verdict::polynomial : Verdict::quasi;
        row.agree = row.computed == row.expected;
        rep.rows.push_back(std::move(row));
    };

    if (root == RootType::C)
        for (int i = 1; i <= m; ++i)
            for (int c = 0; c <= 1; ++c) add_single(Selector::coord2_sel(i, c),
                                                    c == 0 ? Family::rest_2xi_0
                                                           : Family::rest_2xi_1);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int c = 0; c <= 1; ++c) {
                add_single(Selector::diff_sel(i, j, c),
                           c == 0 ? Family::rest_diff_0 : Family::rest_diff_1);
                add_single(Selector::sum_sel(i, j, c),
                           c == 0 ? Family::rest_sum_0 : Family::rest_sum_1);
            }

    if (root == RootType::C)
        for (int i = 1; i <= m; ++i)
            add_pair(FamilyStem::coord2, i, 0, "delete pair { 2x" + std::to_string(i) + " = 0, 1 }");
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            add_pair(FamilyStem::diff, i, j,
                     "delete pair { x" + std::to_string(i) + " - x" + std::to_string(j) +
                         " = 0, 1 }");
            add_pair(FamilyStem::sum, i, j,
                     "delete pair { x" + std::to_string(i) + " + x" + std::to_string(j) +
                         " = 0, 1 }");
        }

    rep.pass = true;
    for (const auto &row : rep.rows) rep.pass = rep.pass && row.agree;
    return rep;
}

std::string classification_to_json(const ClassificationReport &r) {
    nlohmann::json j;
    j["root"] = root_type_name(r.root);
    j["m"] = r.m;
    j["pass"] = r.pass;
    j["rows"] = nlohmann::json::array();
    for (const auto &row : r.rows) {
        nlohmann::json rj;
        rj["subject"] = row.subject;
        rj["pair"] = row.pair;
        rj["verdict"] = verdict_name(row.computed);
        rj["expected"] = verdict_name(row.expected);
        rj["agree"] = row.agree;
        j["rows"].push_back(std::move(rj));
    }
    return j.dump();
}

std::string classification_to_csv(const ClassificationReport &r) {
    std::ostringstream os;
    os << "subject,pair,verdict,expected,agree\n";
    for (const auto &row : r.rows)
        os << '"' << row.subject << "\"," << (row.pair ? "yes" : "no") << ','
           << verdict_name(row.computed) << ',' << verdict_name(row.expected) << ','
           << (row.agree ? "yes" : "no") << '\n';
    return os.str();
}

}  // namespace shiq

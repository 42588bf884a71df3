#include "shiq/encodings.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "shiq/formulas.hpp"

namespace shiq {

BoxLayout build_layout(int m, long long q) {
    if (m < 1) throw std::invalid_argument("layout: m must be >= 1");
    if (q < 2 * m + 1) throw std::invalid_argument("layout: q must be >= 2m+1");
    BoxLayout l;
    l.m = m;
    l.q = q;
    if (q % 2 != 0) {
        l.box_pairs = (q + 1) / 2 - m;
        l.lower_right_excluded = true;
    } else {
        l.box_pairs = q / 2 - m;
        l.side_circle = true;
    }
    return l;
}

CircleSequence decode_placement_circles(const Placement &p, const BoxLayout &layout) {
    const int m = layout.m;
    const long long q = layout.q;
    if (p.box_of_label.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("placement: expected one box per label");

    std::vector<std::vector<int>> upper(static_cast<std::size_t>(layout.box_pairs));
    std::vector<std::vector<int>> lower(static_cast<std::size_t>(layout.box_pairs));
    for (int label = 1; label <= m; ++label) {
        const BoxRef &ref = p.box_of_label[static_cast<std::size_t>(label - 1)];
        if (ref.index < 1 || ref.index > layout.box_pairs)
            throw std::invalid_argument("placement: box index out of range");
        if (ref.lower && layout.lower_right_excluded && ref.index == layout.box_pairs)
            throw std::invalid_argument("placement: the lower-right box is excluded for odd q");
        (ref.lower ? lower : upper)[static_cast<std::size_t>(ref.index - 1)].push_back(label);
    }
    for (auto &v : upper) std::sort(v.begin(), v.end());
    for (auto &v : lower) std::sort(v.begin(), v.end());

    CircleSequence seq;
    seq.point.assign(static_cast<std::size_t>(m), -1);
    seq.label_at.assign(static_cast<std::size_t>(q), 0);
    long long pos = 0;
    auto emit = [&](int label) {
        seq.label_at[static_cast<std::size_t>(pos)] = label;
        if (label > 0) seq.point[static_cast<std::size_t>(label - 1)] = pos;
        ++pos;
    };

    // Upper row, left to right: each box opens with its unlabeled leader,
    // then its own labels ascending, then one mirror slot per label of the
    // lower partner box.
    for (long long u = 0; u < layout.box_pairs; ++u) {
        emit(0);
        for (int label : upper[static_cast<std::size_t>(u)]) emit(label);
        for (std::size_t k = 0; k < lower[static_cast<std::size_t>(u)].size(); ++k) emit(0);
    }
    if (layout.side_circle) emit(0);  // lands exactly at position q/2
    // Lower row, clockwise (right to left): own labels ascending, then one
    // mirror slot per upper label, then the leader's mirror. The lower-left
    // box has no leader mirror: position 0 is self-mirrored.
    for (long long u = layout.box_pairs; u-- > 0;) {
        for (int label : lower[static_cast<std::size_t>(u)]) emit(label);
        for (std::size_t k = 0; k < upper[static_cast<std::size_t>(u)].size(); ++k) emit(0);
        if (u > 0) emit(0);
    }
    if (pos != q) throw std::logic_error("decoded circle count differs from q");
    return seq;
}

Point decode_placement(const Placement &p, const BoxLayout &layout) {
    return decode_placement_circles(p, layout).point;
}

EncodingReport verify_encoding(int m, long long q, const CountOptions &opts) {
    BoxLayout layout = build_layout(m, q);
    EncodingReport rep;
    rep.m = m;
    rep.q = q;
    rep.placements = pow_int(make_int(q - 2 * m), static_cast<unsigned long>(m));
    if (rep.placements * static_cast<long>(std::max(1, m)) > make_int(opts.budget))
        throw BudgetError("encoding verification budget exceeded: " + rep.placements.get_str() +
                          " placements, budget is " + std::to_string(opts.budget));

    Arrangement shi_c = build_shi(RootType::C, m);
    rep.complement_size = count_complement(shi_c, q, opts);

    // All placeable boxes in a fixed order: upper row then lower row.
    std::vector<BoxRef> boxes;
    for (long long u = 1; u <= layout.box_pairs; ++u) boxes.push_back({false, u});
    for (long long u = 1; u <= layout.box_pairs; ++u)
        if (!(layout.lower_right_excluded && u == layout.box_pairs)) boxes.push_back({true, u});

    std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
    std::vector<Point> images;
    Placement p;
    p.box_of_label.resize(static_cast<std::size_t>(m));
    while (true) {
        for (int label = 1; label <= m; ++label)
            p.box_of_label[static_cast<std::size_t>(label - 1)] =
                boxes[choice[static_cast<std::size_t>(label - 1)]];
        Point x = decode_placement(p, layout);
        std::vector<Int> lifted;
        for (long long v : x) lifted.push_back(make_int(v));
        const Int qz = make_int(q);
        for (const auto &h : shi_c.hyperplanes) {
            Int s = 0;
            for (std::size_t k = 0; k < lifted.size(); ++k) s += h.coeffs[k] * lifted[k];
            if (((s - h.offset) % qz) == 0) {
                rep.pass = false;
                rep.detail = "decoded point lies on " + h.str();
                return rep;
            }
        }
        images.push_back(std::move(x));

        std::size_t pos = choice.size();
        while (pos > 0 && ++choice[pos - 1] == boxes.size()) {
            choice[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }

    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        rep.pass = false;
        rep.detail = "two placements decoded to the same point";
        return rep;
    }
    if (Int(static_cast<long>(images.size())) != rep.complement_size) {
        rep.pass = false;
        rep.detail = "image count differs from the complement cardinality";
        return rep;
    }
    rep.pass = true;
    return rep;
}

std::string placement_to_json(const Placement &p, int m, long long q) {
    nlohmann::json j;
    j["m"] = m;
    j["q"] = q;
    nlohmann::json boxes = nlohmann::json::object();
    for (std::size_t k = 0; k < p.box_of_label.size(); ++k) {
        const BoxRef &ref = p.box_of_label[k];
        boxes[std::to_string(k + 1)] =
            (ref.lower ? "L" : "U") + std::to_string(ref.index);
    }
    j["boxes"] = std::move(boxes);
    return j.dump();
}

Placement placement_from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int m = j.at("m").get<int>();
    Placement p;
    p.box_of_label.resize(static_cast<std::size_t>(m));
    for (int label = 1; label <= m; ++label) {
        std::string s = j.at("boxes").at(std::to_string(label)).get<std::string>();
        if (s.size() < 2 || (s[0] != 'U' && s[0] != 'L'))
            throw std::invalid_argument("placement json: box must look like U2 or L1");
        BoxRef ref;
        ref.lower = s[0] == 'L';
        ref.index = std::stoll(s.substr(1));
        p.box_of_label[static_cast<std::size_t>(label - 1)] = ref;
    }
    return p;
}

std::string encoding_report_to_json(const EncodingReport &r) {
    nlohmann::json j;
    j["m"] = r.m;
    j["q"] = r.q;
    j["placements"] = to_ll(r.placements);
    j["complement"] = to_ll(r.complement_size);
    j["pass"] = r.pass;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j.dump();
}

}  // namespace shiq

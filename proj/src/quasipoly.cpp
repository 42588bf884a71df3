#include "shiq/quasipoly.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "shiq/smith.hpp"

namespace shiq {

FitError::FitError(long long q_, Rat expected_, Int actual_)
    : std::runtime_error("fit validation failed at q=" + std::to_string(q_) + ": constituent gives " +
                         expected_.get_str() + ", sampled count is " + actual_.get_str()),
      q(q_),
      expected(std::move(expected_)),
      actual(std::move(actual_)) {}

namespace {

Int lcm_period_over_columns(std::vector<std::vector<Int>> cols, std::size_t cap) {
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    const std::size_t n = cols.size();
    if (n == 0) return 1;
    if (n > cap)
        throw std::invalid_argument("lcm_period: " + std::to_string(n) +
                                    " distinct columns exceed the subset cap of " +
                                    std::to_string(cap));
    const std::size_t rows = cols[0].size();
    Int acc = 1;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> pick;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) pick.push_back(k);
        IntMatrix sub(rows, pick.size());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < pick.size(); ++c) sub.at(r, c) = cols[pick[c]][r];
        auto div = smith_elementary_divisors(std::move(sub));
        if (!div.empty()) acc = lcm_int(acc, div.back());
    }
    return acc;
}

}  // namespace

Int lcm_period(const Arrangement &a, std::size_t max_distinct_columns) {
    std::vector<std::vector<Int>> cols;
    for (const auto &h : a.hyperplanes) cols.push_back(h.coeffs);
    return lcm_period_over_columns(std::move(cols), max_distinct_columns);
}

Int lcm_period_augmented(const Arrangement &a, std::size_t max_distinct_columns) {
    std::vector<std::vector<Int>> cols;
    for (const auto &h : a.hyperplanes) {
        auto c = h.coeffs;
        c.push_back(h.offset);
        cols.push_back(std::move(c));
    }
    return lcm_period_over_columns(std::move(cols), max_distinct_columns);
}

QuasiPolynomial fit_quasi_polynomial(std::vector<CountSample> samples, long long period,
                                     int degree, long long q_min) {
    if (period < 1) throw std::invalid_argument("fit: period must be >= 1");
    if (degree < 0) throw std::invalid_argument("fit: degree must be >= 0");

    std::sort(samples.begin(), samples.end(),
              [](const CountSample &a, const CountSample &b) { return a.q < b.q; });

    std::map<long long, std::vector<CountSample>> classes;
    for (const auto &s : samples) {
        if (s.q < q_min) continue;
        classes[s.q % period].push_back(s);
    }

    QuasiPolynomial qp;
    qp.period = period;
    qp.q_min = q_min;
    qp.degree = degree;
    qp.constituents.resize(static_cast<std::size_t>(period));

    const std::size_t need = static_cast<std::size_t>(degree) + 2;
    for (long long r = 0; r < period; ++r) {
        const auto &cl = classes[r];
        if (cl.size() < need)
            throw std::invalid_argument("fit: residue class " + std::to_string(r) + " has " +
                                        std::to_string(cl.size()) + " samples, needs " +
                                        std::to_string(need));
        std::vector<std::pair<Int, Int>> pts;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(degree); ++k)
            pts.emplace_back(make_int(cl[k].q), cl[k].count);
        RatPolynomial fitted = interpolate_polynomial(pts);
        for (std::size_t k = static_cast<std::size_t>(degree) + 1; k < cl.size(); ++k) {
            Rat expect = fitted(make_int(cl[k].q));
            if (expect != Rat(cl[k].count)) throw FitError(cl[k].q, expect, cl[k].count);
        }
        qp.constituents[static_cast<std::size_t>(r)] = std::move(fitted);
    }
    return qp;
}

long long minimal_period(const QuasiPolynomial &qp) {
    for (long long d = 1; d <= qp.period; ++d) {
        if (qp.period % d != 0) continue;
        bool ok = true;
        for (long long r = 0; r < qp.period && ok; ++r)
            ok = qp.constituents[static_cast<std::size_t>(r)] ==
                 qp.constituents[static_cast<std::size_t>(r % d)];
        if (ok) return d;
    }
    return qp.period;
}

Int evaluate(const QuasiPolynomial &qp, long long q) {
    if (q < qp.q_min)
        throw std::domain_error("evaluate: q=" + std::to_string(q) + " is below q_min=" +
                                std::to_string(qp.q_min));
    Rat v = qp.constituents[static_cast<std::size_t>(q % qp.period)](make_int(q));
    if (!is_integer(v))
        throw std::runtime_error("evaluate: non-integer value " + v.get_str() + " at q=" +
                                 std::to_string(q));
    return Int(v.get_num());
}

long long probe_q_min(const std::vector<CountSample> &samples, long long period, int degree) {
    std::vector<long long> qs;
    for (const auto &s : samples) qs.push_back(s.q);
    std::sort(qs.begin(), qs.end());
    for (long long q0 : qs) {
        try {
            fit_quasi_polynomial(samples, period, degree, q0);
            return q0;
        } catch (const std::exception &) {
        }
    }
    return -1;
}

std::string quasipoly_to_json(const QuasiPolynomial &qp) {
    nlohmann::json j;
    j["period"] = qp.period;
    j["qmin"] = qp.q_min;
    j["constituents"] = nlohmann::json::array();
    for (const auto &c : qp.constituents) {
        nlohmann::json cj = nlohmann::json::array();
        for (const auto &coef : c.coefficients()) {
            cj.push_back(nlohmann::json::array(
                {to_ll(Int(coef.get_num())), to_ll(Int(coef.get_den()))}));
        }
        j["constituents"].push_back(std::move(cj));
    }
    return j.dump();
}

QuasiPolynomial quasipoly_from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    QuasiPolynomial qp;
    qp.period = j.at("period").get<long long>();
    qp.q_min = j.at("qmin").get<long long>();
    int degree = 0;
    for (const auto &cj : j.at("constituents")) {
        std::vector<Rat> coeffs;
        for (const auto &pair : cj) {
            Rat r(make_int(pair.at(0).get<long long>()), make_int(pair.at(1).get<long long>()));
            r.canonicalize();
            coeffs.push_back(std::move(r));
        }
        RatPolynomial p{std::move(coeffs)};
        degree = std::max(degree, p.degree());
        qp.constituents.push_back(std::move(p));
    }
    qp.degree = degree;
    if (qp.constituents.size() != static_cast<std::size_t>(qp.period))
        throw std::invalid_argument("quasipoly json: constituent count != period");
    return qp;
}

}  // namespace shiq

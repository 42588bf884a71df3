#include "shiq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiq/bijections.hpp"
#include "shiq/collapse.hpp"
#include "shiq/counting.hpp"
#include "shiq/encodings.hpp"
#include "shiq/formulas.hpp"
#include "shiq/quasipoly.hpp"

namespace shiq {

namespace {

struct Common {
    std::string type = "C";
    int m = 2;
    std::string file;
    long long budget = 100'000'000;
    int threads = 1;
    bool json = false;

    CountOptions opts() const { return CountOptions{budget, threads}; }
    Arrangement arrangement() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open " + file);
            std::ostringstream buf;
            buf << in.rdbuf();
            return arrangement_from_json(buf.str());
        }
        return build_shi(parse_root_type(type), m);
    }
};

void add_common(CLI::App *cmd, Common &c, bool with_type = true) {
    if (with_type) {
        cmd->add_option("--type", c.type, "root type: B, C or D");
        cmd->add_option("--m", c.m, "dimension m >= 1");
        cmd->add_option("--file", c.file, "arrangement JSON file instead of --type/--m");
    }
    cmd->add_option("--budget", c.budget, "enumeration budget in point-hyperplane checks");
    cmd->add_option("--threads", c.threads, "worker threads for enumeration");
    cmd->add_flag("--json", c.json, "machine-readable output");
}

struct HyperplanePick {
    std::string family;
    int i = 1;
    int j = 2;
    long long offset = 0;
};

void add_pick(CLI::App *cmd, HyperplanePick &p) {
    cmd->add_option("--family", p.family, "hyperplane family: 2xi, xi, diff or sum")->required();
    cmd->add_option("--i", p.i, "first index (1-based)");
    cmd->add_option("--j", p.j, "second index, pair families only");
    cmd->add_option("--offset", p.offset, "offset c, 0 or 1 (coord also admits -1)");
}

Selector pick_selector(const HyperplanePick &p) {
    if (p.family == "2xi") return Selector::coord2_sel(p.i, make_int(p.offset));
    if (p.family == "xi") return Selector::coord_sel(p.i, make_int(p.offset));
    if (p.family == "diff") return Selector::diff_sel(p.i, p.j, make_int(p.offset));
    if (p.family == "sum") return Selector::sum_sel(p.i, p.j, make_int(p.offset));
    throw std::invalid_argument("unknown family: " + p.family + " (use 2xi, xi, diff, sum)");
}

// Counts are exact and can exceed 64 bits (empty arrangements at huge q);
// JSON carries them as numbers when they fit and as decimal strings otherwise.
nlohmann::json json_count(const Int &n) {
    if (n.fits_slong_p()) return nlohmann::json(n.get_si());
    return nlohmann::json(n.get_str());
}

std::vector<long long> q_values(std::optional<long long> q, std::optional<long long> qmin,
                                std::optional<long long> qmax) {
    if (q) return {*q};
    if (qmin && qmax && *qmin <= *qmax) {
        std::vector<long long> out;
        for (long long v = *qmin; v <= *qmax; ++v) out.push_back(v);
        return out;
    }
    throw CLI::ValidationError("pass --q or --qmin/--qmax");
}

// Families whose formulas are verified for one root type, in catalog order.
std::vector<Family> verification_families(RootType root, bool include_aux) {
    std::vector<Family> fams;
    for (Family f : {Family::rest_2xi_0, Family::rest_2xi_1, Family::rest_xi_0, Family::rest_xi_1,
                     Family::rest_diff_0, Family::rest_diff_1, Family::rest_sum_0,
                     Family::rest_sum_1})
        if (family_valid(root, f)) fams.push_back(f);
    if (include_aux && root == RootType::B) {
        fams.push_back(Family::aux_diff_pinned);
        fams.push_back(Family::aux_sum_pinned);
    }
    return fams;
}

std::vector<std::pair<int, int>> index_choices(Family f, int m) {
    std::vector<std::pair<int, int>> out;
    if (family_needs_pair(f)) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) out.emplace_back(i, j);
    } else {
        for (int i = 1; i <= m; ++i) out.emplace_back(i, 0);
    }
    return out;
}

int cmd_build(const Common &c, std::ostream &out) {
    Arrangement a = c.arrangement();
    if (c.json) {
        out << arrangement_to_json(a) << "\n";
    } else {
        out << "m = " << a.dim << ", " << a.size() << " hyperplanes\n";
        for (const auto &h : a.hyperplanes) out << "  " << h.str() << "\n";
    }
    return 0;
}

int cmd_count(const Common &c, std::optional<long long> q, std::optional<long long> qmin,
              std::optional<long long> qmax, std::ostream &out) {
    Arrangement a = c.arrangement();
    auto qs = q_values(q, qmin, qmax);
    nlohmann::json rows = nlohmann::json::array();
    for (long long qq : qs) {
        Int n = count_complement(a, qq, c.opts());
        if (c.json)
            rows.push_back({{"q", qq}, {"count", json_count(n)}});
        else if (qs.size() == 1)
            out << n.get_str() << "\n";
        else
            out << "q=" << qq << "  " << n.get_str() << "\n";
    }
    if (c.json) out << rows.dump() << "\n";
    return 0;
}

int cmd_restrict_count(const Common &c, const HyperplanePick &pick, std::optional<long long> q,
                       std::optional<long long> qmin, std::optional<long long> qmax,
                       std::ostream &out) {
    Arrangement a = c.arrangement();
    Hyperplane h = selector_hyperplane(pick_selector(pick), a.dim);
    auto qs = q_values(q, qmin, qmax);
    nlohmann::json rows = nlohmann::json::array();
    for (long long qq : qs) {
        Int n = count_on_hyperplane(a, h, qq, c.opts());
        if (c.json)
            rows.push_back({{"q", qq}, {"count", json_count(n)}});
        else if (qs.size() == 1)
            out << n.get_str() << "\n";
        else
            out << "q=" << qq << "  " << n.get_str() << "\n";
    }
    if (c.json) out << rows.dump() << "\n";
    return 0;
}

int cmd_lcm_period(const Common &c, bool augmented, std::ostream &out) {
    Arrangement a = c.arrangement();
    Int p = augmented ? lcm_period_augmented(a) : lcm_period(a);
    if (c.json)
        out << nlohmann::json({{"lcmPeriod", to_ll(p)}}).dump() << "\n";
    else
        out << p.get_str() << "\n";
    return 0;
}

int cmd_fit(const Common &c, const HyperplanePick *pick, bool deletion, long long qmin,
            long long qmax, long long period, std::ostream &out) {
    Arrangement a = c.arrangement();
    int m = a.dim;
    int degree = m;

    std::vector<CountSample> samples;
    for (long long q = qmin; q <= qmax; ++q) {
        Int n;
        if (pick && !deletion) {
            Hyperplane h = selector_hyperplane(pick_selector(*pick), m);
            n = count_on_hyperplane(a, h, q, c.opts());
            degree = m - 1;
        } else if (pick && deletion) {
            Hyperplane h = selector_hyperplane(pick_selector(*pick), m);
            n = count_complement(delete_hyperplanes(a, {h}), q, c.opts());
        } else {
            n = count_complement(a, q, c.opts());
        }
        samples.push_back({q, n});
    }
    if (period == 0) period = to_ll(lcm_period(a));
    long long q_min_fit = 2 * static_cast<long long>(m) + 1;
    QuasiPolynomial qp = fit_quasi_polynomial(samples, period, degree, q_min_fit);

    if (c.json) {
        out << quasipoly_to_json(qp) << "\n";
    } else {
        out << "period " << qp.period << ", qmin " << qp.q_min << ", minimal period "
            << minimal_period(qp) << "\n";
        for (long long r = 0; r < qp.period; ++r)
            out << "  q = " << r << " (mod " << qp.period
                << "): " << qp.constituents[static_cast<std::size_t>(r)].str() << "\n";
    }
    return 0;
}

int cmd_verify_formulas(const Common &c, long long qmin, long long qmax, bool include_aux,
                        std::ostream &out) {
    RootType root = parse_root_type(c.type);
    int m = c.m;
    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    if (!c.json)
        out << std::left << std::setw(10) << "family" << std::setw(4) << "i" << std::setw(4)
            << "j" << std::setw(6) << "q" << std::setw(6) << "T" << std::setw(12) << "oracle"
            << std::setw(12) << "formula" << "match\n";
    for (Family f : verification_families(root, include_aux)) {
        for (auto [i, j] : index_choices(f, m)) {
            RestrictionCase rc = restriction_case(root, f, m, i, j);
            for (long long q = qmin; q <= qmax; ++q) {
                Int oracle = count_restricted(rc.arrangement, rc.on, q, c.opts());
                Int formula = family_is_aux(f) ? eval_auxiliary_formula(f, m, i, j, q)
                                               : eval_restriction_formula(root, f, m, i, j, q);
                bool ok = oracle == formula;
                all_ok = all_ok && ok;
                if (c.json)
                    rows.push_back({{"family", family_name(f)},
                                    {"i", i},
                                    {"j", j},
                                    {"q", q},
                                    {"oracle", to_ll(oracle)},
                                    {"formula", to_ll(formula)},
                                    {"match", ok}});
                else
                    out << std::left << std::setw(10) << family_name(f) << std::setw(4) << i
                        << std::setw(4) << j << std::setw(6) << q << std::setw(6) << (q - 2 * m)
                        << std::setw(12) << oracle.get_str() << std::setw(12) << formula.get_str()
                        << (ok ? "yes" : "NO") << "\n";
            }
        }
    }
    if (c.json) out << rows.dump() << "\n";
    else out << (all_ok ? "all formulas match" : "MISMATCH found") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_verify_bijection(const Common &c, const std::string &variant, int i, int j,
                         std::optional<long long> q, std::optional<long long> qmin,
                         std::optional<long long> qmax, std::ostream &out) {
    BijectionVariant v = parse_bijection_variant(variant, i, j);
    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (long long qq : q_values(q, qmin, qmax)) {
        BijectionReport rep = verify_bijection(v, c.m, qq, c.opts());
        all_ok = all_ok && rep.pass;
        if (c.json)
            rows.push_back(nlohmann::json::parse(bijection_report_to_json(rep)));
        else {
            out << "variant " << rep.variant.name() << " m=" << rep.m << " q=" << rep.q << ": "
                << rep.domain_size << " <-> " << rep.codomain_size
                << (rep.pass ? "  pass" : "  FAIL " + rep.detail) << "\n";
            if (rep.counterexample) {
                out << "  counterexample: (";
                for (std::size_t k = 0; k < rep.counterexample->size(); ++k)
                    out << (k ? "," : "") << (*rep.counterexample)[k];
                out << ")\n";
            }
        }
    }
    if (c.json) out << rows.dump() << "\n";
    return all_ok ? 0 : 1;
}

int cmd_verify_encoding(const Common &c, std::optional<long long> q,
                        std::optional<long long> qmin, std::optional<long long> qmax,
                        std::ostream &out) {
    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (long long qq : q_values(q, qmin, qmax)) {
        EncodingReport rep = verify_encoding(c.m, qq, c.opts());
        all_ok = all_ok && rep.pass;
        if (c.json)
            rows.push_back(nlohmann::json::parse(encoding_report_to_json(rep)));
        else
            out << "m=" << rep.m << " q=" << rep.q << ": " << rep.placements.get_str()
                << " placements <-> " << rep.complement_size.get_str() << " points"
                << (rep.pass ? "  pass" : "  FAIL " + rep.detail) << "\n";
    }
    if (c.json) out << rows.dump() << "\n";
    return all_ok ? 0 : 1;
}

int cmd_classify(const Common &c, bool pairs_only, bool singles_only, bool csv, bool oracle,
                 std::ostream &out) {
    RootType root = parse_root_type(c.type);
    ClassificationReport rep = verify_corollaries(root, c.m);
    if (pairs_only || singles_only) {
        std::vector<ClassificationRow> rows;
        for (auto &row : rep.rows)
            if (row.pair == pairs_only) rows.push_back(row);
        rep.rows = std::move(rows);
        rep.pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                               [](const ClassificationRow &r) { return r.agree; });
    }
    bool oracle_ok = true;
    if (oracle) {
        for (const auto &row : rep.rows) {
            Verdict v;
            if (row.pair) {
                FamilyStem stem = row.family == Family::rest_2xi_0 ? FamilyStem::coord2
                                  : row.family == Family::rest_diff_0 ? FamilyStem::diff
                                                                      : FamilyStem::sum;
                v = classify_pair_deletion_oracle(root, c.m, stem, row.i, row.j, c.opts());
            } else {
                Selector sel = family_selector(row.family, row.i, row.j);
                v = classify_single_deletion_oracle(root, c.m, sel, c.opts());
            }
            oracle_ok = oracle_ok && v == row.computed;
        }
    }
    if (c.json)
        out << classification_to_json(rep) << "\n";
    else if (csv)
        out << classification_to_csv(rep);
    else {
        for (const auto &row : rep.rows)
            out << std::left << std::setw(40) << row.subject << std::setw(12)
                << verdict_name(row.computed) << std::setw(12) << verdict_name(row.expected)
                << (row.agree ? "agree" : "DISAGREE") << "\n";
        out << (rep.pass ? "classification matches the expected lists" : "MISMATCH found")
            << "\n";
        if (oracle)
            out << (oracle_ok ? "oracle-fit cross-check agrees" : "oracle-fit DISAGREES") << "\n";
    }
    return rep.pass && oracle_ok ? 0 : 1;
}

int cmd_report(const Common &c, long long qmin, long long qmax, std::ostream &out) {
    RootType root = parse_root_type(c.type);
    int m = c.m;
    bool all_ok = true;
    auto line = [&](bool ok, const std::string &what) {
        all_ok = all_ok && ok;
        out << (ok ? "PASS  " : "FAIL  ") << what << "\n";
    };

    {
        bool ok = true;
        for (long long q = qmin; q <= qmax; ++q)
            ok = ok && count_complement(build_shi(root, m), q, c.opts()) ==
                           eval_full_shi_formula(root, m, q);
        line(ok, "full-arrangement formula, q in [" + std::to_string(qmin) + ", " +
                     std::to_string(qmax) + "]");
    }
    {
        bool ok = true;
        for (Family f : verification_families(root, false))
            for (auto [i, j] : index_choices(f, m)) {
                RestrictionCase rc = restriction_case(root, f, m, i, j);
                for (long long q = qmin; q <= qmax; ++q)
                    ok = ok && count_restricted(rc.arrangement, rc.on, q, c.opts()) ==
                                   eval_restriction_formula(root, f, m, i, j, q);
            }
        line(ok, "restriction formulas, every family and index");
    }
    {
        Int lp = lcm_period(build_shi(root, m));
        std::vector<CountSample> samples;
        for (long long q = 2 * m + 1; q <= 2 * m + 12; ++q)
            samples.push_back({q, count_complement(build_shi(root, m), q, c.opts())});
        QuasiPolynomial qp = fit_quasi_polynomial(samples, to_ll(lp), m, 2 * m + 1);
        line(lp == 2 && minimal_period(qp) == 1,
             "lcm period 2 with period collapse of the full arrangement");
    }
    if (root == RootType::D) {
        bool ok = true;
        for (long long q = qmin; q <= qmax; ++q) {
            ok = ok && verify_bijection({BijectionVariant::Kind::full_d, 0, 0}, m, q, c.opts())
                           .pass;
            for (auto kind : {BijectionVariant::Kind::sum_zero, BijectionVariant::Kind::diff_one,
                              BijectionVariant::Kind::diff_zero, BijectionVariant::Kind::sum_one})
                for (int i = 1; i <= m; ++i)
                    for (int j = i + 1; j <= m; ++j)
                        ok = ok && verify_bijection({kind, i, j}, m, q, c.opts()).pass;
        }
        line(ok, "point bijections, full and restricted variants");
    }
    if (root == RootType::C) {
        bool ok = true;
        for (long long q = qmin; q <= qmax; ++q) ok = ok && verify_encoding(m, q, c.opts()).pass;
        line(ok, "box placement decoding is a bijection onto the complement");
    }
    if (root != RootType::B && m >= 2) {
        ClassificationReport rep = verify_corollaries(root, m);
        line(rep.pass, "period-collapse classification of deletions");
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run_command(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"exact characteristic quasi-polynomials of Shi arrangements over Z_q", "shiq"};
    app.require_subcommand(1);

    Common c;
    std::optional<long long> q, qmin, qmax;
    HyperplanePick pick;
    bool augmented = false, deletion = false, include_aux = false;
    bool pairs_only = false, singles_only = false, csv = false, oracle = false;
    long long period = 0;
    std::string variant = "full";
    int bi = 1, bj = 2;

    auto *build = app.add_subcommand("build", "print an arrangement");
    add_common(build, c);

    auto *count = app.add_subcommand("count", "count complement points over Z_q");
    add_common(count, c);
    count->add_option("--q", q, "single modulus");
    count->add_option("--qmin", qmin, "modulus range start");
    count->add_option("--qmax", qmax, "modulus range end");

    auto *rcount = app.add_subcommand("restrict-count",
                                      "count points on one hyperplane avoiding the rest");
    add_common(rcount, c);
    add_pick(rcount, pick);
    rcount->add_option("--q", q, "single modulus");
    rcount->add_option("--qmin", qmin, "modulus range start");
    rcount->add_option("--qmax", qmax, "modulus range end");

    auto *fit = app.add_subcommand("fit", "fit a quasi-polynomial from oracle counts");
    add_common(fit, c);
    fit->add_option("--family", pick.family, "restrict onto this family instead of fitting the "
                                             "full arrangement");
    fit->add_option("--i", pick.i, "first index");
    fit->add_option("--j", pick.j, "second index");
    fit->add_option("--offset", pick.offset, "offset 0 or 1");
    fit->add_flag("--deletion", deletion, "fit the deletion instead of the restriction");
    fit->add_option("--qmin", qmin, "sample range start")->required();
    fit->add_option("--qmax", qmax, "sample range end")->required();
    fit->add_option("--period", period, "period (default: lcm period of the arrangement)");

    auto *lcm = app.add_subcommand("lcm-period", "lcm period from the coefficient matrix");
    add_common(lcm, c);
    lcm->add_flag("--augmented", augmented, "use the augmented columns (a_i; b_i)");

    auto *vf = app.add_subcommand("verify-formulas", "oracle counts against the closed forms");
    add_common(vf, c);
    vf->add_option("--qmin", qmin, "modulus range start");
    vf->add_option("--qmax", qmax, "modulus range end");
    vf->add_flag("--aux", include_aux, "include the auxiliary pinned counts (type B)");

    auto *vb = app.add_subcommand("verify-bijection", "exhaustive bijection check");
    add_common(vb, c);
    vb->add_option("--variant", variant, "full, sum0, diff1, diff0 or sum1");
    vb->add_option("--i", bi, "first index (restricted variants)");
    vb->add_option("--j", bj, "second index");
    vb->add_option("--q", q, "single modulus");
    vb->add_option("--qmin", qmin, "modulus range start");
    vb->add_option("--qmax", qmax, "modulus range end");

    auto *ve = app.add_subcommand("verify-encoding", "box placements decode onto the complement");
    add_common(ve, c);
    ve->add_option("--q", q, "single modulus");
    ve->add_option("--qmin", qmin, "modulus range start");
    ve->add_option("--qmax", qmax, "modulus range end");

    auto *cl = app.add_subcommand("classify", "period collapse of deletions vs expected lists");
    add_common(cl, c);
    auto *pairs_flag = cl->add_flag("--pairs", pairs_only, "parallel pairs only");
    cl->add_flag("--singles", singles_only, "single hyperplanes only")->excludes(pairs_flag);
    cl->add_flag("--csv", csv, "CSV output");
    cl->add_flag("--oracle", oracle, "cross-check verdicts by fitting oracle counts");

    auto *rep = app.add_subcommand("report", "run the full verification battery for one type");
    add_common(rep, c);
    rep->add_option("--qmin", qmin, "modulus range start");
    rep->add_option("--qmax", qmax, "modulus range end");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(c, out);
        if (count->parsed()) return cmd_count(c, q, qmin, qmax, out);
        if (rcount->parsed()) return cmd_restrict_count(c, pick, q, qmin, qmax, out);
        if (fit->parsed())
            return cmd_fit(c, pick.family.empty() ? nullptr : &pick, deletion,
                           qmin.value_or(2 * c.m + 1), qmax.value_or(2 * c.m + 12), period, out);
        if (lcm->parsed()) return cmd_lcm_period(c, augmented, out);
        if (vf->parsed())
            return cmd_verify_formulas(c, qmin.value_or(2 * c.m + 1),
                                       qmax.value_or(2 * c.m + 12), include_aux, out);
        if (vb->parsed()) return cmd_verify_bijection(c, variant, bi, bj, q, qmin, qmax, out);
        if (ve->parsed()) return cmd_verify_encoding(c, q, qmin, qmax, out);
        if (cl->parsed()) return cmd_classify(c, pairs_only, singles_only, csv, oracle, out);
        if (rep->parsed())
            return cmd_report(c, qmin.value_or(2 * c.m + 1), qmax.value_or(2 * c.m + 12), out);
    } catch (const CLI::ValidationError &e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace shiq

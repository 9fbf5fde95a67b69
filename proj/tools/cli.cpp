/**************************************************************************
 * Copyright 2026 The kummer-lcp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "kummer/codes.hpp"
#include "kummer/curve.hpp"
#include "kummer/error.hpp"
#include "kummer/instances.hpp"
#include "kummer/nonspecial.hpp"
#include "kummer/serialize.hpp"

namespace kummer::cli {

namespace {

using nlohmann::json;

struct CurveOpts {
    std::string catalog;
    std::string spec;
    int m = 0;
    std::vector<int> lambdas;
    std::vector<int> field;
    std::vector<std::uint32_t> alphas;
    std::uint32_t lead = 1;
};

void add_curve_opts(CLI::App* app, CurveOpts& o) {
    app->add_option("--catalog", o.catalog, "catalog id (ex37, f49, dickson_half_m8)");
    app->add_option("--spec", o.spec, "curve spec JSON file");
    app->add_option("--m", o.m, "degree m of the extension");
    app->add_option("--lambdas", o.lambdas, "multiplicities lambda_i")->delimiter(',');
    app->add_option("--field", o.field, "p,k for GF(p^k); omit for an abstract curve")->delimiter(',');
    app->add_option("--alphas", o.alphas, "branch points as encodings")->delimiter(',');
    app->add_option("--lead", o.lead, "leading coefficient as an encoding");
}

KummerCurve load_curve(const CurveOpts& o) {
    if (!o.catalog.empty()) return catalog(o.catalog).curve;
    if (!o.spec.empty()) {
        std::ifstream in(o.spec);
        if (!in) throw Error(ErrorCode::InvalidSpec, "cannot open " + o.spec);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidSpec, std::string("cannot parse ") + o.spec + ": " + e.what());
        }
        return curve_from_json(j);
    }
    if (o.m == 0 || o.lambdas.empty()) throw CLI::ValidationError("curve", "give --catalog, --spec or --m with --lambdas");
    if (o.field.empty()) return KummerCurve::make_abstract(o.m, o.lambdas);
    if (o.field.size() > 2) throw CLI::ValidationError("--field", "expected p or p,k");
    auto f = make_field(o.field[0], o.field.size() == 2 ? o.field[1] : 1);
    if (o.alphas.size() != o.lambdas.size()) throw CLI::ValidationError("--alphas", "one encoding per lambda is required");
    std::vector<BranchSpec> branches;
    for (std::size_t i = 0; i < o.alphas.size(); ++i) branches.push_back({f->element(o.alphas[i]), o.lambdas[i]});
    return KummerCurve::make(f, o.m, std::move(branches), f->element(o.lead));
}

InvariantTuple parse_tuple(const std::vector<long long>& v, const KummerCurve& curve) {
    if (v.size() != static_cast<std::size_t>(curve.r()) + 1) {
        throw CLI::ValidationError("--tuple", "expected n0 followed by " + std::to_string(curve.r()) + " coefficients");
    }
    return InvariantTuple{v.front(), std::vector<long long>(v.begin() + 1, v.end())};
}

std::string tuple_csv(const InvariantTuple& a) {
    std::ostringstream s;
    s << a.n0;
    for (long long v : a.n) s << ',' << v;
    return s.str();
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void curve_info(std::ostream& out, const KummerCurve& curve, bool as_json) {
    const auto& ram = curve.ram();
    json j = curve_to_json(curve);
    j["genus"] = curve.genus();
    j["d"] = ram.d;
    j["e"] = ram.e;
    j["Lambda"] = ram.Lambda;
    j["d_inf"] = ram.d_inf;
    j["e_inf"] = ram.e_inf;
    if (as_json) {
        print_json(out, j);
        return;
    }
    out << "m = " << curve.m() << ", r = " << curve.r() << ", genus = " << curve.genus() << '\n';
    if (!curve.is_abstract()) {
        out << "field GF(" << curve.field().p() << "^" << curve.field().k() << "), a = " << curve.lead().enc << '\n';
    }
    out << "i  alpha  lambda  d  e\n";
    for (int i = 0; i < curve.r(); ++i) {
        const auto& b = curve.branches()[static_cast<std::size_t>(i)];
        out << std::left << std::setw(3) << i + 1 << std::setw(7) << (b.alpha ? std::to_string(b.alpha->enc) : "-")
            << std::setw(8) << b.lambda << std::setw(3) << ram.d[static_cast<std::size_t>(i)] << ram.e[static_cast<std::size_t>(i)]
            << '\n';
    }
    out << "inf  Lambda = " << ram.Lambda << "  d_inf = " << ram.d_inf << "  e_inf = " << ram.e_inf << '\n';
}

void print_tuples(std::ostream& out, const KummerCurve& curve, const std::vector<InvariantTuple>& tuples,
                  const std::string& format) {
    if (format == "json") {
        json j = json::object({{"genus", curve.genus()}, {"count", tuples.size()}, {"tuples", tuples}});
        print_json(out, j);
        return;
    }
    if (format == "csv") {
        for (const auto& a : tuples) out << tuple_csv(a) << '\n';
        return;
    }
    out << std::right << std::setw(4) << "n0";
    for (int i = 1; i <= curve.r(); ++i) out << std::setw(4) << ("n" + std::to_string(i));
    out << '\n';
    for (const auto& a : tuples) {
        out << std::setw(4) << a.n0;
        for (long long v : a.n) out << std::setw(4) << v;
        out << '\n';
    }
    out << tuples.size() << " divisor(s) of degree g = " << curve.genus() << '\n';
}

void print_report(std::ostream& out, const CriterionReport& r, bool as_json) {
    if (as_json) {
        print_json(out, json(r));
        return;
    }
    out << "mode " << mode_name(r.mode) << ", degree " << r.degree << ", genus " << r.genus
        << ", coefficient bounds " << (r.bounds_ok ? "ok" : "violated") << '\n';
    out << std::right << std::setw(4) << "j" << std::setw(8) << "B" << std::setw(8) << "|C|" << "  pass\n";
    for (const auto& row : r.rows) {
        out << std::setw(4) << row.j << std::setw(8) << row.bound << std::setw(8) << row.count << "  "
            << (row.pass ? "yes" : "no") << '\n';
    }
    out << "verdict: " << r.verdict() << '\n';
}

void print_lcp(std::ostream& out, const KummerCurve& curve, const LCPPair& pair, bool as_json, const std::string& matrices) {
    if (as_json) {
        json j = lcp_to_json(curve, pair);
        if (matrices == "json") {
            j["matrix_G"] = matrix_to_json(curve.field(), pair.C.gen);
            j["matrix_H"] = matrix_to_json(curve.field(), pair.E.gen);
        }
        print_json(out, j);
    } else {
        out << "A = (" << tuple_csv(pair.A) << "), t = " << pair.split_points.size() << ", s = " << pair.s
            << " (admissible " << pair.s_min << ".." << pair.s_max << ")\n";
        out << "C_L(D,G): [" << pair.C.n << ", " << pair.C.k << ", >=" << pair.C.designed_distance
            << "], deg G = " << pair.G.degree() << '\n';
        out << "C_L(D,H): [" << pair.E.n << ", " << pair.E.k << ", >=" << pair.E.designed_distance
            << "], deg H = " << pair.H.degree() << '\n';
        out << "gcd(G,H) = A - Q_inf: " << (pair.gcd_identity ? "yes" : "no") << '\n';
        out << "lmd(G,H) - D - (A - Q_inf) principal: " << (pair.lmd_identity ? "yes" : "no") << '\n';
        out << "LCP verified: " << (pair.verified ? "yes" : "no") << '\n';
        for (const auto& note : pair.notes) out << "note: " << note << '\n';
        if (matrices == "json") {
            print_json(out, json{{"G", matrix_to_json(curve.field(), pair.C.gen)}, {"H", matrix_to_json(curve.field(), pair.E.gen)}});
        }
    }
    if (matrices == "csv") {
        out << "# G\n" << matrix_to_csv(pair.C.gen) << "# H\n" << matrix_to_csv(pair.E.gen);
    }
}

unsigned long long search_cap() {
    if (const char* env = std::getenv("KDL_MAX_SEARCH")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidSpec, std::string("KDL_MAX_SEARCH is not an integer: ") + env);
        }
    }
    return kDefaultSearchCap;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kummer extensions: non-special divisors and LCPs of AG codes", "kummer-lcp"};
    app.require_subcommand(1);

    CurveOpts curve_opts;
    bool as_json = false;

    auto* curve_cmd = app.add_subcommand("curve", "curve inspection");
    curve_cmd->require_subcommand(1);
    auto* info_cmd = curve_cmd->add_subcommand("info", "ramification data and genus");
    add_curve_opts(info_cmd, curve_opts);
    info_cmd->add_flag("--json", as_json);

    auto* ns_cmd = app.add_subcommand("nonspecial", "invariant non-special divisors of degree g");
    ns_cmd->require_subcommand(1);
    auto* enum_cmd = ns_cmd->add_subcommand("enumerate", "all effective invariant non-special divisors of degree g");
    add_curve_opts(enum_cmd, curve_opts);
    bool dedup = false;
    bool as_csv = false;
    unsigned threads = 0;
    enum_cmd->add_flag("--dedup", dedup, "one representative per permutation of equal lambdas");
    enum_cmd->add_flag("--json", as_json);
    enum_cmd->add_flag("--csv", as_csv);
    enum_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* check_cmd = ns_cmd->add_subcommand("check", "evaluate the criterion on one tuple");
    add_curve_opts(check_cmd, curve_opts);
    std::vector<long long> tuple;
    std::string mode = "cond3";
    check_cmd->add_option("--tuple", tuple, "n0,n1,...,nr")->delimiter(',')->required();
    check_cmd->add_option("--mode", mode, "cond2 or cond3")->check(CLI::IsMember({"cond2", "cond3"}));
    check_cmd->add_flag("--json", as_json);

    auto* lcp_cmd = app.add_subcommand("lcp", "linear complementary pairs");
    lcp_cmd->require_subcommand(1);
    auto* build_cmd = lcp_cmd->add_subcommand("build", "build and verify C_L(D,G), C_L(D,H)");
    add_curve_opts(build_cmd, curve_opts);
    std::string regime;
    std::optional<long long> s;
    int k_index = 1;
    std::vector<int> phi;
    std::vector<std::uint32_t> points;
    std::string matrices;
    build_cmd->add_option("--regime", regime, "half_single, half_double_N1, half_double_N2 or lambda_two");
    build_cmd->add_option("--tuple", tuple, "A as n0,n1,...,nr (general recipe)")->delimiter(',');
    build_cmd->add_option("--phi", phi, "1-based totally ramified indices (general recipe)")->delimiter(',');
    build_cmd->add_option("--s", s, "recipe parameter s (default: smallest admissible)");
    build_cmd->add_option("--k", k_index, "lambda_two: index k of N_k");
    build_cmd->add_option("--points", points, "split points as encodings (default: all)")->delimiter(',');
    build_cmd->add_option("--matrices", matrices, "emit generator matrices")->check(CLI::IsMember({"json", "csv"}));
    build_cmd->add_flag("--json", as_json);

    auto* census_cmd = app.add_subcommand("census", "rational places and maximality");
    add_curve_opts(census_cmd, curve_opts);
    census_cmd->add_flag("--json", as_json);

    auto* repro_cmd = app.add_subcommand("reproduce", "recompute a catalog example");
    std::string repro_id;
    repro_cmd->add_option("id", repro_id, "catalog id")->required();
    repro_cmd->add_flag("--json", as_json);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (info_cmd->parsed()) {
            curve_info(out, load_curve(curve_opts), as_json);
        } else if (enum_cmd->parsed()) {
            const auto curve = load_curve(curve_opts);
            auto tuples = enumerate_nonspecial(curve, EnumerateOptions{dedup, search_cap(), threads});
            print_tuples(out, curve, tuples, as_json ? "json" : as_csv ? "csv" : "text");
        } else if (check_cmd->parsed()) {
            const auto curve = load_curve(curve_opts);
            print_report(out, criterion_check(curve, parse_tuple(tuple, curve), mode_from_string(mode)), as_json);
        } else if (build_cmd->parsed()) {
            const auto curve = load_curve(curve_opts);
            std::vector<Elem> pts;
            for (auto enc : points) pts.push_back(curve.field().element(enc));
            LCPPair pair;
            if (!regime.empty()) {
                pair = lcp_build_regime(curve, regime_from_string(regime), RegimeParams{s, k_index, pts});
            } else {
                if (tuple.empty() || phi.empty()) {
                    throw CLI::ValidationError("lcp build", "give --regime, or --tuple with --phi");
                }
                std::vector<int> phi0;
                for (int i : phi) phi0.push_back(i - 1);
                pair = lcp_build_general(curve, parse_tuple(tuple, curve), phi0, pts, s);
            }
            print_lcp(out, curve, pair, as_json, matrices);
        } else if (census_cmd->parsed()) {
            const auto c = census(load_curve(curve_opts));
            if (as_json) {
                print_json(out, json(c));
            } else {
                out << "rational places " << c.rational_places << " (split " << c.split_places << ", branch "
                    << c.branch_places << ", infinite " << c.infinite_places << ")\n"
                    << "Hasse-Weil bound " << c.hasse_weil_bound << ", maximal " << (c.is_maximal ? "yes" : "no") << '\n';
            }
        } else if (repro_cmd->parsed()) {
            const auto entry = catalog(repro_id);
            const auto observed = observe(entry);
            json diff = json::array();
            for (const auto& [key, value] : entry.expected.items()) {
                if (observed.value(key, json()) != value) diff.push_back(key);
            }
            if (as_json) {
                print_json(out, json{{"id", entry.id}, {"title", entry.title}, {"expected", entry.expected},
                                     {"observed", observed}, {"mismatches", diff}});
            } else {
                out << entry.id << ": " << entry.title << '\n';
                for (const auto& [key, value] : entry.expected.items()) {
                    const auto obs = observed.value(key, json());
                    if (key == "tuples") {
                        out << "  tuples: " << value.size() << " expected, " << obs.size() << " observed, "
                            << (obs == value ? "equal" : "different") << '\n';
                        continue;
                    }
                    out << "  " << key << ": expected " << value.dump() << ", observed " << obs.dump()
                        << (obs == value ? "" : "  MISMATCH") << '\n';
                }
            }
            if (!diff.empty()) {
                err << "reproduce " << repro_id << ": " << diff.size() << " value(s) differ\n";
                return 1;
            }
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace kummer::cli

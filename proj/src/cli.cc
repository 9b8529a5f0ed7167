// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <vector>

#include "qwalk/angles.h"
#include "qwalk/errors.h"
#include "qwalk/experiment.h"
#include "qwalk/povm.h"
#include "qwalk/protocol_io.h"
#include "qwalk/reference_data.h"

namespace qwalk::cli {

using nlohmann::json;

namespace {

// psi_+/- default to phi = 45 degrees when a walk is given no --alpha.
constexpr double kDefaultWalkAlpha = std::numbers::sqrt2 / 2;

std::vector<double> parse_numbers(std::string_view body, std::string_view whole) {
    std::vector<double> out;
    while (true) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        double v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || !std::isfinite(v)) {
            throw DomainError("malformed state '" + std::string(whole) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json coin_json(const CoinState &c) { return {{"h", complex_json(c.h)}, {"v", complex_json(c.v)}}; }

json matrix_json(const Mat2 &m) {
    return json::array({json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
                        json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
}

json angle_json(double rad) {
    return {{"rad", rad}, {"deg", rad_to_deg(rad)}, {"dms", format_dms(to_dms(rad))}};
}

json params_json(const UsdParams &p) {
    return {{"alpha", p.alpha()}, {"beta", p.beta()}, {"phi_rad", p.phi()}, {"phi_deg", rad_to_deg(p.phi())}};
}

json angles_json(const UsdAngles &a) {
    return {{"theta_m1_2", angle_json(a.theta_m1_2)},
            {"theta_1_2", angle_json(a.theta_1_2)},
            {"theta_0_3", angle_json(a.theta_0_3)}};
}

json sampling_json(const CountRecord &rec) {
    return {{"shots", rec.shots}, {"seed", rec.seed}, {"rng", rec.rng_algorithm}};
}

json distribution_rows(const Distribution &theory, const CountRecord *rec) {
    json rows = json::array();
    for (const auto &[x, p] : theory) {
        json row = {{"position", x}, {"p_theory", p}};
        if (rec) {
            row["count"] = rec->counts.at(x);
            row["p_hat"] = rec->probs_hat.at(x);
        }
        rows.push_back(row);
    }
    return rows;
}

json distance_json(const DistanceReport &r) {
    json gaps = json::array();
    for (const auto &[x, g] : r.per_position_gap) {
        gaps.push_back({{"position", x}, {"gap", g}});
    }
    return {{"d", r.d}, {"per_position_gap", gaps}};
}

double norm(const CoinState &c) { return std::sqrt(c.norm_sq()); }

UsdParams require_params(const RunConfig &config) {
    if (!config.alpha) {
        throw DomainError(config.command + " requires --alpha");
    }
    return UsdParams::from_alpha(*config.alpha);
}

std::string fixed(double v, int precision = 4) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << v;
    return out.str();
}

std::string pad(const std::string &s, size_t width) {
    // Width counts code points so degree/prime marks align.
    size_t cps = 0;
    for (unsigned char ch : s) {
        if ((ch & 0xC0) != 0x80) ++cps;
    }
    return cps >= width ? s : s + std::string(width - cps, ' ');
}

std::string text_matrix(const json &m) {
    std::ostringstream out;
    for (int r = 0; r < 2; ++r) {
        out << "    [";
        for (int c = 0; c < 2; ++c) {
            double re = m[r][c][0].get<double>();
            double im = m[r][c][1].get<double>();
            out << (c ? "  " : "") << std::setw(10) << fixed(re, 6);
            if (im != 0.0) out << (im < 0 ? "-" : "+") << fixed(std::abs(im), 6) << "i";
        }
        out << " ]\n";
    }
    return out.str();
}

std::string render_text(const json &r) {
    std::ostringstream out;
    const std::string cmd = r.at("command");
    if (cmd == "discriminate") {
        const auto &p = r.at("params");
        out << "alpha = " << fixed(p.at("alpha"), 6) << "  phi = " << fixed(p.at("phi_deg"), 4) << " deg\n";
        out << "input: " << r.at("input").at("label").get<std::string>() << "\n";
        out << "coins: theta(-1,2) = " << r.at("angles").at("theta_m1_2").at("dms").get<std::string>()
            << "  theta(1,2) = " << r.at("angles").at("theta_1_2").at("dms").get<std::string>()
            << "  theta(0,3) = " << r.at("angles").at("theta_0_3").at("dms").get<std::string>() << "\n\n";
        out << pad("position", 10) << pad("outcome", 18) << pad("state (psi)", 13) << pad("state (pair)", 20)
            << pad("P_theory", 10) << pad("count", 8) << "P_hat\n";
        for (const auto &o : r.at("outcomes")) {
            out << pad(std::to_string(o.at("position").get<int>()), 10) << pad(o.at("kind"), 18)
                << pad(o.at("label_psi"), 13) << pad(o.at("label_pair"), 20) << pad(fixed(o.at("probability")), 10)
                << pad(std::to_string(o.at("count").get<long long>()), 8) << fixed(o.at("p_hat")) << "\n";
        }
        out << "\neta_theory = " << fixed(r.at("eta_theory")) << "  eta_simulated = " << fixed(r.at("eta_simulated"))
            << "\nshots = " << r.at("sampling").at("shots").get<long long>()
            << "  seed = " << r.at("sampling").at("seed").get<unsigned long long>()
            << "  d(sampled, theory) = " << fixed(r.at("distance").at("d"), 5) << "\n";
    } else if (cmd == "povm") {
        const auto &p = r.at("params");
        out << "alpha = " << fixed(p.at("alpha"), 6) << "  phi = " << fixed(p.at("phi_deg"), 4) << " deg\n";
        for (const char *name : {"E_plus", "E_minus", "E_inconclusive"}) {
            out << "\n" << name << " (walk)\n" << text_matrix(r.at("walk").at(name));
            out << name << " (closed form)\n" << text_matrix(r.at("closed_form").at(name));
            out << "  max |walk - closed form| = " << r.at("max_abs_diff").at(name).get<double>() << "\n";
        }
        out << "\ncompleteness deviation = " << r.at("completeness").at("deviation").get<double>()
            << (r.at("completeness").at("pass").get<bool>() ? "  (pass)" : "  (FAIL)") << "\n";
        out << "|E_plus psi_minus| = " << r.at("zero_error").at("E_plus_psi_minus").get<double>()
            << "  |E_minus psi_plus| = " << r.at("zero_error").at("E_minus_psi_plus").get<double>() << "\n";
    } else if (cmd == "table1") {
        out << pad("alpha", 7) << pad("phi", 5) << pad("input", 7) << pad("th(-1,2)", 9) << pad("th(1,2)", 9)
            << pad("printed", 9) << pad("th(0,3)", 9) << pad("eta_th", 8) << pad("eta_hat", 17) << pad("d_hat", 8)
            << pad("eta_measured", 17) << pad("d_measured", 17) << "3sigma\n";
        for (const auto &row : r.at("rows")) {
            const auto &em = row.at("eta_measured");
            const auto &dm = row.at("d_measured");
            out << pad(fixed(row.at("alpha"), 3), 7) << pad(std::to_string(row.at("phi_deg").get<int>()), 5)
                << pad(row.at("input"), 7) << pad(row.at("theta_m1_2").at("dms"), 9)
                << pad(row.at("theta_1_2").at("dms"), 9) << pad(row.at("theta_1_2").at("printed"), 9)
                << pad(row.at("theta_0_3").at("dms"), 9) << pad(fixed(row.at("eta_theory")), 8)
                << pad(fixed(row.at("eta_sampled")) + "±" + fixed(row.at("eta_sampled_uncertainty")), 17)
                << pad(fixed(row.at("d_sampled")), 8)
                << pad(fixed(em.at("value")) + "±" + fixed(em.at("uncertainty")), 17)
                << pad(fixed(dm.at("value")) + "±" + fixed(dm.at("uncertainty")), 17)
                << (row.at("measured_within_3sigma").get<bool>() ? "yes" : "no") << "\n";
        }
        out << "\nshots per row = " << r.at("shots").get<long long>() << "  seed = " << r.at("seed").get<unsigned long long>()
            << "  (measured values: " << r.at("provenance").get<std::string>() << ")\n";
    } else if (cmd == "fig2d") {
        out << pad("position", 10) << pad("P_theory", 10) << pad("count", 8) << pad("P_hat", 10) << "P_measured\n";
        for (const auto &row : r.at("distribution")) {
            std::string measured = "-";
            if (row.contains("p_measured")) {
                measured = fixed(row.at("p_measured").at("value")) + "±" + fixed(row.at("p_measured").at("uncertainty"));
            }
            out << pad(std::to_string(row.at("position").get<int>()), 10) << pad(fixed(row.at("p_theory")), 10)
                << pad(std::to_string(row.at("count").get<long long>()), 8) << pad(fixed(row.at("p_hat")), 10)
                << measured << "\n";
        }
        out << "\nsymmetry gap |P_hat(1) - P_hat(-1)| = " << fixed(r.at("symmetry_gap"), 5)
            << "  d(sampled, theory) = " << fixed(r.at("distance").at("d"), 5) << "\n";
    } else if (cmd == "walk") {
        for (const auto &step : r.at("steps")) {
            out << "step " << step.at("step").get<int>() << ":";
            for (const auto &row : step.at("distribution")) {
                out << "  " << row.at("position").get<int>() << ": " << fixed(row.at("probability"), 6);
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string csv_number(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::string render_csv(const json &r) {
    std::ostringstream out;
    const std::string cmd = r.at("command");
    if (cmd == "discriminate" || cmd == "fig2d") {
        out << "position,p_theory,count,p_hat\n";
        const json &rows = cmd == "fig2d" ? r.at("distribution") : r.at("outcomes");
        for (const auto &row : rows) {
            double p = cmd == "fig2d" ? row.at("p_theory").get<double>() : row.at("probability").get<double>();
            out << row.at("position").get<int>() << ',' << csv_number(p) << ',' << row.at("count").get<long long>()
                << ',' << csv_number(row.at("p_hat")) << '\n';
        }
    } else if (cmd == "walk") {
        out << "step,position,probability\n";
        for (const auto &step : r.at("steps")) {
            for (const auto &row : step.at("distribution")) {
                out << step.at("step").get<int>() << ',' << row.at("position").get<int>() << ','
                    << csv_number(row.at("probability")) << '\n';
            }
        }
    } else if (cmd == "table1") {
        out << "alpha,phi_deg,input,theta_m1_2,theta_1_2,theta_1_2_printed,theta_1_2_gap_arcmin,theta_0_3,"
               "eta_theory,eta_sampled,eta_sampled_uncertainty,d_sampled,eta_measured,eta_measured_uncertainty,"
               "d_measured,d_measured_uncertainty,measured_within_3sigma\n";
        for (const auto &row : r.at("rows")) {
            out << csv_number(row.at("alpha")) << ',' << row.at("phi_deg").get<int>() << ','
                << row.at("input").get<std::string>() << ',' << row.at("theta_m1_2").at("dms_ascii").get<std::string>()
                << ',' << row.at("theta_1_2").at("dms_ascii").get<std::string>() << ','
                << row.at("theta_1_2").at("printed_ascii").get<std::string>() << ','
                << csv_number(row.at("theta_1_2").at("gap_arcmin")) << ','
                << row.at("theta_0_3").at("dms_ascii").get<std::string>() << ',' << csv_number(row.at("eta_theory"))
                << ',' << csv_number(row.at("eta_sampled")) << ',' << csv_number(row.at("eta_sampled_uncertainty"))
                << ',' << csv_number(row.at("d_sampled")) << ',' << csv_number(row.at("eta_measured").at("value"))
                << ',' << csv_number(row.at("eta_measured").at("uncertainty")) << ','
                << csv_number(row.at("d_measured").at("value")) << ','
                << csv_number(row.at("d_measured").at("uncertainty")) << ','
                << (row.at("measured_within_3sigma").get<bool>() ? "true" : "false") << '\n';
        }
    } else if (cmd == "povm") {
        out << "element,source,row,col,re,im\n";
        for (const char *source : {"walk", "closed_form"}) {
            for (const char *name : {"E_plus", "E_minus", "E_inconclusive"}) {
                const auto &m = r.at(source).at(name);
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        out << name << ',' << source << ',' << i << ',' << j << ',' << csv_number(m[i][j][0]) << ','
                            << csv_number(m[i][j][1]) << '\n';
                    }
                }
            }
        }
    }
    return out.str();
}

json theta_row_json(double rad, const Dms &printed) {
    Dms d = to_dms(rad);
    return {{"rad", rad},
            {"dms", format_dms(d)},
            {"dms_ascii", format_dms(d, true)},
            {"printed", format_dms(printed)},
            {"printed_ascii", format_dms(printed, true)},
            {"gap_arcmin", arcminute_gap(rad, printed.to_radians())}};
}

}  // namespace

StateChoice parse_state(std::string_view text) {
    StateChoice s;
    if (text == "plus") {
        s.kind = StateChoice::Kind::Plus;
    } else if (text == "minus") {
        s.kind = StateChoice::Kind::Minus;
    } else if (text == "H" || text == "V") {
        s.kind = StateChoice::Kind::Custom;
        s.custom = text == "H" ? CoinState::horizontal() : CoinState::vertical();
    } else if (text.starts_with("superposition:")) {
        auto v = parse_numbers(text.substr(14), text);
        if (v.size() != 2) throw DomainError("superposition takes two coefficients a,b");
        s.kind = StateChoice::Kind::Superposition;
        s.a = v[0];
        s.b = v[1];
    } else if (text.starts_with("custom:")) {
        auto v = parse_numbers(text.substr(7), text);
        s.kind = StateChoice::Kind::Custom;
        if (v.size() == 2) {
            s.custom = {v[0], v[1]};
        } else if (v.size() == 4) {
            s.custom = {{v[0], v[1]}, {v[2], v[3]}};
        } else {
            throw DomainError("custom state takes aH,aV or reH,imH,reV,imV");
        }
        if (!(s.custom.norm_sq() > 1e-24)) throw DomainError("custom state is the zero vector");
    } else {
        throw DomainError("unknown state '" + std::string(text) + "'");
    }
    return s;
}

std::string describe(const StateChoice &s) {
    switch (s.kind) {
    case StateChoice::Kind::Plus:
        return "psi_plus";
    case StateChoice::Kind::Minus:
        return "psi_minus";
    case StateChoice::Kind::Superposition:
        return "superposition(a=" + csv_number(s.a) + ", b=" + csv_number(s.b) + ")";
    case StateChoice::Kind::Custom:
        return "custom";
    }
    return "";
}

std::uint64_t default_seed() {
    const char *env = std::getenv(std::string(kSeedEnvVar).c_str());
    if (!env) return kDefaultSeed;
    std::string_view s(env);
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
        throw DomainError(std::string(kSeedEnvVar) + " must be an unsigned integer, got '" + std::string(s) + "'");
    }
    return v;
}

CoinState resolve_state(const StateChoice &s, const UsdParams &params) {
    switch (s.kind) {
    case StateChoice::Kind::Plus:
        return prepare_coin(params, Sign::Plus);
    case StateChoice::Kind::Minus:
        return prepare_coin(params, Sign::Minus);
    case StateChoice::Kind::Superposition:
        return prepare_superposition(params, s.a, s.b);
    case StateChoice::Kind::Custom:
        return s.custom.normalized();
    }
    return {};
}

json cmd_discriminate(const RunConfig &config) {
    UsdParams params = require_params(config);
    UsdProtocol usd = compile(params);
    CoinState coin = resolve_state(config.state, params);
    auto outcomes = discriminate(usd, coin);

    Distribution theory;
    for (const auto &o : outcomes) theory[o.position] = o.probability;
    CountRecord rec = sample_counts(theory, config.shots, config.seed);
    DistanceReport dist = l1_distance(rec.probs_hat, theory);

    json rows = json::array();
    for (const auto &o : outcomes) {
        const char *psi = o.kind == OutcomeKind::ConclusivePlus    ? "psi_plus"
                          : o.kind == OutcomeKind::ConclusiveMinus ? "psi_minus"
                                                                   : "inconclusive";
        const char *pair = o.kind == OutcomeKind::ConclusivePlus    ? "|0>"
                           : o.kind == OutcomeKind::ConclusiveMinus ? "alpha|0>+beta|1>"
                                                                    : "inconclusive";
        rows.push_back({{"kind", to_string(o.kind)},
                        {"position", o.position},
                        {"probability", o.probability},
                        {"label_psi", psi},
                        {"label_pair", pair},
                        {"count", rec.counts.at(o.position)},
                        {"p_hat", rec.probs_hat.at(o.position)}});
    }
    double conclusive = outcomes[0].probability + outcomes[1].probability;
    double conclusive_hat = rec.probs_hat.at(1) + rec.probs_hat.at(-1);
    json sampling = sampling_json(rec);
    sampling["eta_hat"] = conclusive_hat;
    sampling["eta_hat_uncertainty"] = binomial_uncertainty(conclusive_hat, rec.shots);
    return {{"schema_version", kSchemaVersion},
            {"command", "discriminate"},
            {"params", params_json(params)},
            {"angles", angles_json(usd.angles)},
            {"input", {{"label", describe(config.state)}, {"coin", coin_json(coin)}}},
            {"outcomes", rows},
            {"eta_theory", success_probability(params)},
            {"eta_simulated", conclusive},
            {"sampling", sampling},
            {"distance", distance_json(dist)}};
}

json cmd_povm(const RunConfig &config) {
    UsdParams params = require_params(config);
    UsdProtocol usd = compile(params);
    UsdPovm walk = walk_usd_elements(usd);
    UsdPovm closed = closed_form_usd_elements(params);

    std::vector<PovmElement> elements = {{walk.plus, 1}, {walk.minus, -1}, {walk.inconclusive, 3}};
    CompletenessReport completeness = verify_completeness(elements);
    std::vector<PovmElement> all;
    for (const auto &k : kraus_operators(usd.protocol)) all.push_back(povm_element(k));
    CompletenessReport all_positions = verify_completeness(all);

    CoinState plus = prepare_coin(params, Sign::Plus);
    CoinState minus = prepare_coin(params, Sign::Minus);
    Mat2 reversed_plus = reversed_walk_element(usd.protocol, 1, CoinState::horizontal()).e;
    Mat2 reversed_minus = reversed_walk_element(usd.protocol, -1, CoinState::vertical()).e;

    auto eig = [](const Mat2 &m) {
        auto e = hermitian_eigenvalues(m);
        return json::array({e.low, e.high});
    };
    return {{"schema_version", kSchemaVersion},
            {"command", "povm"},
            {"params", params_json(params)},
            {"angles", angles_json(usd.angles)},
            {"walk",
             {{"E_plus", matrix_json(walk.plus)},
              {"E_minus", matrix_json(walk.minus)},
              {"E_inconclusive", matrix_json(walk.inconclusive)}}},
            {"closed_form",
             {{"E_plus", matrix_json(closed.plus)},
              {"E_minus", matrix_json(closed.minus)},
              {"E_inconclusive", matrix_json(closed.inconclusive)}}},
            {"max_abs_diff",
             {{"E_plus", max_abs_diff(walk.plus, closed.plus)},
              {"E_minus", max_abs_diff(walk.minus, closed.minus)},
              {"E_inconclusive", max_abs_diff(walk.inconclusive, closed.inconclusive)}}},
            {"eigenvalues", {{"E_plus", eig(walk.plus)}, {"E_minus", eig(walk.minus)}, {"E_inconclusive", eig(walk.inconclusive)}}},
            {"reversed_walk",
             {{"E_plus_max_abs_diff", max_abs_diff(reversed_plus, walk.plus)},
              {"E_minus_max_abs_diff", max_abs_diff(reversed_minus, walk.minus)}}},
            {"completeness",
             {{"deviation", completeness.deviation},
              {"min_eigenvalues", completeness.min_eigenvalues},
              {"pass", completeness.pass},
              {"all_positions_deviation", all_positions.deviation}}},
            {"zero_error",
             {{"E_plus_psi_minus", norm(walk.plus * minus)}, {"E_minus_psi_plus", norm(walk.minus * plus)}}},
            {"success",
             {{"psi_plus_E_plus", expectation(walk.plus, plus)},
              {"psi_minus_E_minus", expectation(walk.minus, minus)},
              {"one_minus_alpha", success_probability(params)}}}};
}

json cmd_table1(const RunConfig &config) {
    json rows = json::array();
    for (const auto &row : table1_report(config.shots, config.seed)) {
        const auto &ref = row.reference;
        json theta12 = theta_row_json(row.angles.theta_1_2, ref.theta_1_2);
        theta12["from_alpha_rad"] = row.theta_1_2_from_alpha;
        theta12["from_alpha_dms"] = format_dms(to_dms(row.theta_1_2_from_alpha));
        rows.push_back({{"alpha", ref.alpha},
                        {"alpha_exact", row.alpha_exact},
                        {"phi_deg", ref.phi_deg},
                        {"input", to_string(ref.input)},
                        {"theta_m1_2", theta_row_json(row.angles.theta_m1_2, ref.theta_m1_2)},
                        {"theta_1_2", theta12},
                        {"theta_0_3", theta_row_json(row.angles.theta_0_3, ref.theta_0_3)},
                        {"eta_theory", row.eta_theory},
                        {"eta_sampled", row.eta_sampled},
                        {"eta_sampled_uncertainty", row.eta_sampled_uncertainty},
                        {"uncertainty_method", "binomial"},
                        {"d_sampled", row.d_sampled},
                        {"counts", distribution_rows(row.theory, &row.sampled)},
                        {"eta_measured", {{"value", ref.eta.value}, {"uncertainty", ref.eta.uncertainty}}},
                        {"d_measured", {{"value", ref.d.value}, {"uncertainty", ref.d.uncertainty}}},
                        {"measured_within_3sigma", row.measured_within_3sigma}});
    }
    return {{"schema_version", kSchemaVersion},
            {"command", "table1"},
            {"shots", config.shots},
            {"seed", config.seed},
            {"rng", std::string(kRngAlgorithm)},
            {"provenance", std::string(reference::kProvenance)},
            {"visibility", reference::kVisibility},
            {"rows", rows}};
}

json cmd_fig2d(const RunConfig &config) {
    Fig2dReport rep = fig2d_report(config.shots, config.seed);
    json rows = distribution_rows(rep.theory, &rep.sampled);
    for (auto &row : rows) {
        int x = row.at("position");
        if (x == 1 || x == -1) {
            const auto &m = x == 1 ? reference::kFig2dP1 : reference::kFig2dPm1;
            row["p_measured"] = {{"value", m.value}, {"uncertainty", m.uncertainty}};
        }
    }
    return {{"schema_version", kSchemaVersion},
            {"command", "fig2d"},
            {"params", params_json(rep.params)},
            {"input", {{"label", "superposition(a=1, b=1)"}, {"coin", coin_json(rep.input)}}},
            {"distribution", rows},
            {"sampling", sampling_json(rep.sampled)},
            {"distance", distance_json(rep.distance)},
            {"symmetry_gap", rep.symmetry_gap}};
}

json cmd_walk(const RunConfig &config) {
    if (!config.protocol_file) {
        throw DomainError("walk requires --protocol");
    }
    Protocol protocol = load_protocol(*config.protocol_file);
    UsdParams params = UsdParams::from_alpha(config.alpha.value_or(kDefaultWalkAlpha));
    CoinState coin = resolve_state(config.state, params);

    json steps = json::array();
    WalkState state = WalkState::localized(0, coin);
    for (size_t n = 0; n < protocol.size(); ++n) {
        state = apply_step(state, protocol[n]);
        if (config.per_step || n + 1 == protocol.size()) {
            json rows = json::array();
            for (const auto &[x, p] : position_distribution(state)) {
                rows.push_back({{"position", x}, {"probability", p}});
            }
            steps.push_back({{"step", n + 1}, {"distribution", rows}, {"norm", state.norm_sq()}});
        }
    }
    return {{"schema_version", kSchemaVersion},
            {"command", "walk"},
            {"protocol_file", *config.protocol_file},
            {"num_steps", protocol.size()},
            {"input", {{"label", describe(config.state)}, {"coin", coin_json(coin)}}},
            {"steps", steps}};
}

json execute(const RunConfig &config) {
    if (config.shots < 1) {
        throw DomainError("--shots must be >= 1");
    }
    if (config.command == "discriminate") return cmd_discriminate(config);
    if (config.command == "povm") return cmd_povm(config);
    if (config.command == "table1") return cmd_table1(config);
    if (config.command == "fig2d") return cmd_fig2d(config);
    if (config.command == "walk") return cmd_walk(config);
    throw DomainError("unknown command '" + config.command + "'");
}

std::string render(const json &report, Format format) {
    switch (format) {
    case Format::Json:
        return report.dump(2) + "\n";
    case Format::Text:
        return render_text(report);
    case Format::Csv:
        return render_csv(report);
    }
    return {};
}

}  // namespace qwalk::cli

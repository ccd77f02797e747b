/*
   Copyright 2026 The gaglrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file cli.hpp
 * @brief The gaglrc command line, callable in-process through cli::run().
 *
 * Exit status: 0 on success, 1 on a violated precondition (one line on stderr
 * of the form "error: <category>: <detail>"), 2 when an exhaustive search
 * exceeds its budget.
 */

#ifndef GAGLRC_CLI_HPP
#define GAGLRC_CLI_HPP

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "descriptor.hpp"
#include "finite_field.hpp"
#include "linear_code.hpp"
#include "lrc.hpp"

namespace gaglrc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitBudget = 2;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Space-separated element renderings; "?" or "_" marks an erasure.
inline std::vector<std::optional<Symbol>> parse_word(const Field& f, const std::string& text) {
    std::vector<std::optional<Symbol>> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "?" || tok == "_")
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(f.parse(tok));
    }
    return out;
}

inline std::string join_positions(const std::vector<std::size_t>& pos) {
    std::string s;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pos[i] + 1);
    }
    return s;
}

inline std::string render_vector(const Field& f, std::span<const Symbol> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += f.render(v[i]);
    }
    return s;
}

inline std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

inline std::string fmt_rational(const Rational& r) {
    if (r.denominator() == 1) return to_string(r);
    return to_string(r) + " (" + fmt_double(to_double(r)) + ")";
}

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string descriptor;
    std::uint64_t budget = kDefaultSearchBudget;
    // build
    std::string stage = "G";
    // mindist
    std::optional<int> claim;
    std::string witness;
    // repair
    std::string word;
    std::optional<std::size_t> erase;
    std::optional<std::size_t> sweep;
    // family
    std::uint64_t q = 0;
    std::string descriptor_out;
    // concat
    std::string outer, inner;
    // bounds
    std::string kind;
    std::optional<std::int64_t> n, k, r, d, s, g, k0, level;
    std::string delta = "0";
    std::optional<std::string> b, br;
};

namespace detail {

using nlohmann::ordered_json;

inline bool structured(const Options& o) { return o.format == "structured"; }

inline GagLrcCode load_code(const Options& o) { return build(parse_descriptor(read_file(o.descriptor))); }

inline int cmd_build(const Options& o, std::ostream& out) {
    const GagLrcCode code = load_code(o);
    Stage st = Stage::Generator;
    if (o.stage == "G0")
        st = Stage::Residues;
    else if (o.stage == "G1")
        st = Stage::Flattened;
    else if (o.stage == "G_RS")
        st = Stage::InnerGenerator;
    const std::string text = emit_stage(code, st);
    if (!structured(o)) {
        out << text;
        return kExitOk;
    }
    auto j = report_envelope("build", "generalized-ag-generator");
    j["inputs"] = {{"descriptor", o.descriptor}, {"stage", o.stage}};
    std::istringstream is(text);
    std::string header, line;
    std::getline(is, header);
    ordered_json rows = ordered_json::array();
    while (std::getline(is, line)) rows.push_back(line);
    j["value"] = {{"header", header}, {"rows", rows}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline int cmd_mindist(const Options& o, std::ostream& out) {
    GagLrcCode code = load_code(o);
    auto j = report_envelope("mindist", "minimum-distance");
    j["inputs"] = {{"descriptor", o.descriptor}, {"budget", o.budget}};
    std::string text;
    if (o.claim) {
        std::optional<std::vector<Symbol>> witness;
        if (!o.witness.empty()) {
            witness.emplace();
            for (const auto& s : parse_word(code.field(), o.witness)) {
                if (!s) throw std::invalid_argument("witness may not contain erasures");
                witness->push_back(*s);
            }
        }
        const DistanceBounds db = distance_bounds(code.base(), *o.claim, witness);
        text = "d_lower=" + std::to_string(db.lower);
        if (db.upper) text += " d_upper=" + std::to_string(*db.upper);
        j["inputs"]["claim"] = *o.claim;
        j["value"] = {{"d_lower", db.lower}, {"d_upper", db.upper ? ordered_json(*db.upper) : ordered_json(nullptr)}};
    } else {
        const int d = min_distance_exhaustive(code.base(), o.budget);
        text = "d=" + std::to_string(d);
        j["value"] = {{"d", d}};
    }
    if (structured(o))
        out << j.dump(2) << '\n';
    else
        out << text << '\n';
    return kExitOk;
}

inline int cmd_repair(const Options& o, std::ostream& out) {
    const GagLrcCode code = load_code(o);
    const Field& f = code.field();
    auto j = report_envelope("repair", "local-repair");
    j["inputs"] = {{"descriptor", o.descriptor}};
    if (o.sweep) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<Symbol> sym(0, f.order() - 1);
        std::size_t repairs = 0, failures = 0, max_set = 0;
        for (std::size_t t = 0; t < *o.sweep; ++t) {
            std::vector<Symbol> msg(code.dimension());
            for (auto& m : msg) m = sym(rng);
            const auto cw = code.base().encode(msg);
            for (std::size_t e = 0; e < code.length(); ++e) {
                std::vector<Symbol> damaged = cw;
                damaged[e] = sym(rng);
                const RepairResult rr = repair_symbol(code, damaged, e);
                ++repairs;
                if (rr.symbol != cw[e]) ++failures;
                max_set = std::max(max_set, rr.recovery_set.size());
            }
        }
        j["inputs"]["sweep"] = *o.sweep;
        j["inputs"]["seed"] = o.seed;
        j["value"] = {{"repairs", repairs}, {"failures", failures}, {"max_recovery_set", max_set}};
        if (structured(o))
            out << j.dump(2) << '\n';
        else
            out << "repairs=" << repairs << " failures=" << failures << " max_recovery_set=" << max_set << '\n';
        return failures == 0 ? kExitOk : kExitPrecondition;
    }
    if (!o.erase) throw std::invalid_argument("repair needs --erase (or --sweep)");
    const auto word = parse_word(f, o.word);
    if (word.size() != code.length())
        throw std::invalid_argument("word has " + std::to_string(word.size()) + " symbols, code length is " +
                                    std::to_string(code.length()));
    if (*o.erase < 1 || *o.erase > code.length()) throw std::invalid_argument("--erase is out of range");
    const std::size_t e = *o.erase - 1;
    std::vector<Symbol> plain(word.size(), 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i])
            plain[i] = *word[i];
        else if (i != e)
            throw std::invalid_argument("only the erased position may be marked '?'");
    }
    const RepairResult rr = repair_symbol(code, plain, e);
    j["inputs"]["erase"] = *o.erase;
    j["value"] = {{"position", *o.erase},
                  {"symbol", f.render(rr.symbol)},
                  {"recovery_set", [&] {
                       std::vector<std::size_t> v;
                       for (auto p : rr.recovery_set) v.push_back(p + 1);
                       return v;
                   }()}};
    if (structured(o))
        out << j.dump(2) << '\n';
    else
        out << "position=" << *o.erase << " symbol=" << f.render(rr.symbol)
            << " recovery_set=" << join_positions(rr.recovery_set) << '\n';
    return kExitOk;
}

inline int cmd_locality(const Options& o, std::ostream& out) {
    const GagLrcCode code = load_code(o);
    const auto sets = recovery_sets(code);
    std::size_t worst = 0;
    for (const auto& s : sets) worst = std::max(worst, s.size());
    if (!structured(o)) {
        out << "locality=" << worst << '\n';
        return kExitOk;
    }
    auto j = report_envelope("locality", "block-locality");
    j["inputs"] = {{"descriptor", o.descriptor}};
    ordered_json per = ordered_json::array();
    for (const auto& s : sets) {
        std::vector<std::size_t> v;
        for (auto p : s) v.push_back(p + 1);
        per.push_back(v);
    }
    j["value"] = {{"locality", worst}, {"recovery_sets", per}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline int cmd_family(const Options& o, std::ostream& out) {
    FamilyCode fam = build_optimal_q_family(o.q);
    const ParamReport rep = assess(fam.code, o.budget, fam.witness);
    const int loc = verify_locality(fam.code);
    if (!o.descriptor_out.empty()) {
        CodeDescriptor d;
        d.field = fam.code.field();
        d.places = fam.code.places();
        d.divisor_degree = fam.code.divisor_degree();
        InnerSpec rs;
        rs.n = 3;
        d.inner.assign(d.places.size(), rs);
        std::ofstream f(o.descriptor_out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write '" + o.descriptor_out + "'");
        f << to_json(d);
    }
    if (structured(o)) {
        auto j = report_envelope("family", "optimal-locality-2-family");
        j["inputs"] = {{"q", o.q}, {"budget", o.budget}};
        j["value"] = to_json(rep);
        j["value"]["verified_locality"] = loc;
        j["value"]["witness"] = render_vector(fam.code.field(), fam.witness);
        j["flags"] = rep.flags;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "n=" << rep.n << " k=" << rep.k << " d=";
    if (rep.d_actual)
        out << *rep.d_actual;
    else
        out << ">=" << rep.d_design;
    out << " r=" << loc << " defect=" << rep.defect;
    if (rep.pessimistic) out << " (pessimistic)";
    out << '\n';
    return kExitOk;
}

inline int cmd_table1(const Options& o, std::ostream& out) {
    const auto rows = projective_line_table(3, o.budget);
    if (structured(o)) {
        auto j = report_envelope("table1", "projective-line-f3");
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"k", r.k}, {"d", r.d}, {"defect", r.defect}});
        j["value"] = arr;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "n k d defect\n";
    for (const auto& r : rows) out << r.n << ' ' << r.k << ' ' << r.d << ' ' << r.defect << '\n';
    return kExitOk;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
}

inline std::uint64_t to_u64(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("malformed " + what + " '" + s + "'");
    return v;
}

inline int cmd_concat(const Options& o, std::ostream& out) {
    // --outer rs:Q:N:K   --inner parity | rs:N
    const auto op = split(o.outer, ':');
    if (op.size() != 4 || op[0] != "rs") throw std::invalid_argument("--outer must look like rs:Q:N:K");
    const Field fo = Field::of_order(to_u64(op[1], "outer field order"));
    const LinearCode outer = rs_code(fo, to_u64(op[2], "outer length"), to_u64(op[3], "outer dimension"));
    const Field fi = fo.prime_field();
    const std::size_t r = fo.degree();
    LinearCode inner;
    const auto ip = split(o.inner, ':');
    if (ip.size() == 1 && ip[0] == "parity") {
        inner = parity_check_code(fi, r);
    } else if (ip.size() == 2 && ip[0] == "rs") {
        inner = rs_code(fi, to_u64(ip[1], "inner length"), r);
    } else {
        throw std::invalid_argument("--inner must be 'parity' or rs:N");
    }
    LinearCode cc = build_concatenated(outer, inner);
    const int d_bound = *cc.distance_lower();
    const int loc = code_locality(inner);
    std::optional<int> d;
    try {
        d = min_distance_exhaustive(cc, o.budget);
    } catch (const BudgetExceeded&) {
    }
    if (structured(o)) {
        auto j = report_envelope("concat", "concatenated-construction");
        j["inputs"] = {{"outer", o.outer}, {"inner", o.inner}, {"budget", o.budget}};
        j["value"] = {{"n", cc.length()},
                      {"k", cc.dimension()},
                      {"d", d ? ordered_json(*d) : ordered_json(nullptr)},
                      {"d_bound", d_bound},
                      {"locality", loc}};
        if (!d) j["flags"].push_back("exhaustive_search_over_budget");
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "n=" << cc.length() << " k=" << cc.dimension() << " d=";
    if (d)
        out << *d;
    else
        out << ">=" << d_bound;
    out << " d_bound=" << d_bound << " locality=" << loc << '\n';
    return kExitOk;
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing ") + flag);
    return *v;
}

inline void emit_param_report(const Options& o, const std::string& name, const ParamReport& rep, ordered_json inputs,
                              std::ostream& out) {
    if (structured(o)) {
        auto j = report_envelope(name, name == "construction1" ? "concatenated-construction" : "generalized-ag-construction");
        j["inputs"] = std::move(inputs);
        j["value"] = to_json(rep);
        j["flags"] = rep.flags;
        out << j.dump(2) << '\n';
        return;
    }
    out << "n=" << rep.n << " k=" << rep.k << " r=" << rep.locality << " d_design=" << rep.d_design
        << " d_singleton=" << rep.d_singleton << " defect=" << rep.defect << " rate_bound=" << to_string(rep.rate_bound)
        << '\n';
}

inline int cmd_bounds(const Options& o, std::ostream& out) {
    const std::string& kind = o.kind;
    auto j = report_envelope(kind, "");
    std::string text;
    if (kind == "singleton") {
        const auto n = need(o.n, "--n"), k = need(o.k, "--k"), r = need(o.r, "--r");
        const auto dmax = singleton_lrc(n, k, r);
        j["tag"] = "lrc-singleton";
        j["inputs"] = {{"n", n}, {"k", k}, {"r", r}};
        j["value"] = {{"d_max", dmax}};
        text = "d_max=" + std::to_string(dmax);
        if (o.d) {
            const auto def = lrc_defect(n, k, *o.d, r);
            j["inputs"]["d"] = *o.d;
            j["value"]["defect"] = def;
            text += " defect=" + std::to_string(def);
            if (def == 0) j["flags"].push_back("optimal");
        }
    } else if (kind == "gv") {
        const auto q = static_cast<std::int64_t>(o.q), r = need(o.r, "--r");
        const double delta = to_double(parse_rational(o.delta));
        const GvResult g = gv_lrc_rate(q, r, delta);
        j["tag"] = "gv-lrc";
        j["inputs"] = {{"q", q}, {"r", r}, {"delta", o.delta}};
        j["value"] = {{"rate", g.value}, {"raw", g.raw}, {"argmin_s", g.argmin_s}};
        text = "rate>=" + fmt_double(g.value) + " s=" + fmt_double(g.argmin_s);
        if (g.clamped) {
            j["flags"].push_back("clamped_to_zero");
            text += " clamped raw=" + fmt_double(g.raw);
        }
    } else if (kind == "dv") {
        const auto q = static_cast<std::int64_t>(o.q), r = need(o.r, "--r");
        const DvResult dv = dv_order_r(q, r);
        j["tag"] = "drinfeld-vladut-order-r";
        j["inputs"] = {{"q", q}, {"r", r}};
        if (dv.exact) {
            j["value"] = rational_json(*dv.exact);
            text = "value=" + fmt_rational(*dv.exact);
        } else {
            j["value"] = {{"exact", nullptr}, {"approx", dv.value}};
            j["flags"].push_back("irrational");
            text = "value~" + fmt_double(dv.value);
        }
    } else if (kind == "gs") {
        const auto q = static_cast<std::int64_t>(o.q), l = need(o.level, "--level");
        const GsTowerParams gs = gs_tower_params(q, l);
        j["tag"] = "gs-tower";
        j["inputs"] = {{"q", q}, {"level", l}};
        j["value"] = {{"genus_upper", gs.genus_upper}, {"b1_lower", gs.b1_lower}, {"ratio_lower", to_string(gs.ratio_lower)}};
        text = "genus<=" + std::to_string(gs.genus_upper) + " b1>=" + std::to_string(gs.b1_lower) +
               " ratio>=" + to_string(gs.ratio_lower);
    } else if (kind == "asymptotic") {
        AsymptoticQuery query;
        query.q = static_cast<std::int64_t>(o.q);
        query.r = o.r.value_or(2);
        query.delta = parse_rational(o.delta);
        query.level = o.level;
        if (o.b) query.b = parse_rational(*o.b);
        if (o.br) query.b_r = parse_rational(*o.br);
        const AsymptoticReport rep = asymptotic_rates(query);
        j["tag"] = "asymptotic-rate-floors";
        j["inputs"] = {{"q", query.q}, {"r", query.r}, {"delta", o.delta}};
        ordered_json floors = ordered_json::array();
        std::ostringstream os;
        for (const auto& f : rep.floors) {
            ordered_json fj = {{"name", f.name}, {"applicable", f.applicable}};
            if (f.applicable) {
                fj["value"] = rational_json(f.value);
                os << f.name << '=' << fmt_rational(f.value);
            } else {
                fj["reason"] = f.reason;
                os << f.name << "=n/a (" << f.reason << ")";
            }
            fj["flags"] = f.flags;
            for (const auto& fl : f.flags) os << " [" << fl << "]";
            os << '\n';
            floors.push_back(fj);
        }
        j["value"] = {{"floors", floors}, {"b2_floor", rational_json(rep.b2_floor)}};
        if (rep.b2_at_level) {
            j["value"]["b2_at_level"] = rational_json(*rep.b2_at_level);
            os << "b2_at_level=" << fmt_rational(*rep.b2_at_level) << '\n';
        }
        os << "b2_floor=" << fmt_rational(rep.b2_floor);
        text = os.str();
    } else if (kind == "construction1") {
        const auto q = static_cast<std::int64_t>(o.q);
        const auto r = need(o.r, "--r"), s = need(o.s, "--s"), g = o.g.value_or(0), k0 = need(o.k0, "--k0");
        emit_param_report(o, kind, construction1_params(q, r, s, g, k0),
                          {{"q", q}, {"r", r}, {"s", s}, {"g", g}, {"k0", k0}}, out);
        return kExitOk;
    } else if (kind == "construction2") {
        const auto q = static_cast<std::int64_t>(o.q);
        const auto r = need(o.r, "--r"), s = need(o.s, "--s"), g = o.g.value_or(0), k = need(o.k, "--k");
        emit_param_report(o, kind, construction2_params(q, r, s, g, k),
                          {{"q", q}, {"r", r}, {"s", s}, {"g", g}, {"k", k}}, out);
        return kExitOk;
    } else {
        throw std::invalid_argument("unknown bound kind '" + kind + "'");
    }
    if (structured(o))
        out << j.dump(2) << '\n';
    else
        out << text << '\n';
    return kExitOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"gaglrc: locally recoverable codes from generalized AG codes over GF(q)(x)", "gaglrc"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", o.seed, "Seed for randomized repair sweeps");
    std::function<int(std::ostream&)> action;

    auto* build = app.add_subcommand("build", "Print the generator matrix (or a construction stage) of a descriptor");
    build->add_option("--descriptor", o.descriptor, "Code descriptor file")->required();
    build->add_option("--stage", o.stage, "G0 (residues), G1 (flattened), G_RS (first inner generator) or G")
        ->check(CLI::IsMember({"G0", "G1", "G_RS", "G"}));
    build->callback([&] { action = [&](std::ostream& os) { return detail::cmd_build(o, os); }; });

    auto* mindist = app.add_subcommand("mindist", "Exact minimum distance, or certified bounds with --claim");
    mindist->add_option("--descriptor", o.descriptor, "Code descriptor file")->required();
    mindist->add_option("--budget", o.budget, "Maximum q^k for exhaustive search");
    mindist->add_option("--claim", o.claim, "Certify d >= claim (2 or 3) from the parity-check matrix");
    mindist->add_option("--witness", o.witness, "Message whose codeword weight bounds d from above");
    mindist->callback([&] { action = [&](std::ostream& os) { return detail::cmd_mindist(o, os); }; });

    auto* repair = app.add_subcommand("repair", "Repair one erased symbol from its block");
    repair->add_option("--descriptor", o.descriptor, "Code descriptor file")->required();
    repair->add_option("--word", o.word, "Codeword, space-separated; the erased symbol may be '?'");
    repair->add_option("--erase", o.erase, "Erased position (1-indexed)");
    repair->add_option("--sweep", o.sweep, "Instead: repair every position of N random codewords");
    repair->callback([&] { action = [&](std::ostream& os) { return detail::cmd_repair(o, os); }; });

    auto* locality = app.add_subcommand("locality", "Certified locality from block-local recovery sets");
    locality->add_option("--descriptor", o.descriptor, "Code descriptor file")->required();
    locality->callback([&] { action = [&](std::ostream& os) { return detail::cmd_locality(o, os); }; });

    auto* family = app.add_subcommand("family", "Build and verify the optimal locality-2 code over GF(q)");
    family->add_option("--q", o.q, "Field order (prime power >= 3)")->required();
    family->add_option("--budget", o.budget, "Maximum q^k for exhaustive search");
    family->add_option("--descriptor-out", o.descriptor_out, "Also write the code descriptor to this file");
    family->callback([&] { action = [&](std::ostream& os) { return detail::cmd_family(o, os); }; });

    auto* table1 = app.add_subcommand(
        "table1", "Parameters of the n = 9 codes over GF(3)(x) (all degree-2 places, inner RS(3,2)); "
                  "rows with n >= 12 need curves of positive genus and are not generated");
    table1->add_option("--budget", o.budget, "Maximum q^k for exhaustive search");
    table1->callback([&] { action = [&](std::ostream& os) { return detail::cmd_table1(o, os); }; });

    auto* concat = app.add_subcommand("concat", "Concatenated code: outer RS over GF(p^r), inner code over GF(p)");
    concat->add_option("--outer", o.outer, "rs:Q:N:K")->required();
    concat->add_option("--inner", o.inner, "parity | rs:N")->required();
    concat->add_option("--budget", o.budget, "Maximum q^k for exhaustive search");
    concat->callback([&] { action = [&](std::ostream& os) { return detail::cmd_concat(o, os); }; });

    auto* bounds = app.add_subcommand("bounds", "Evaluate a bound");
    bounds->add_option("--kind", o.kind, "Bound to evaluate")
        ->required()
        ->check(CLI::IsMember({"singleton", "gv", "dv", "gs", "asymptotic", "construction1", "construction2"}));
    bounds->add_option("--n", o.n);
    bounds->add_option("--k", o.k);
    bounds->add_option("--r", o.r);
    bounds->add_option("--d", o.d);
    bounds->add_option("--q", o.q);
    bounds->add_option("--delta", o.delta, "Relative distance: integer, a/b or decimal");
    bounds->add_option("--level", o.level, "Tower level");
    bounds->add_option("--s", o.s);
    bounds->add_option("--g", o.g);
    bounds->add_option("--k0", o.k0);
    bounds->add_option("--b", o.b, "B_1/g lower bound of an outer sequence");
    bounds->add_option("--br", o.br, "B_r/(r g) lower bound of a degree-r sequence");
    bounds->callback([&] { action = [&](std::ostream& os) { return detail::cmd_bounds(o, os); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << '\n';
        return kExitPrecondition;
    }

    try {
        return action(out);
    } catch (const BudgetExceeded& e) {
        err << "error: budget: " << e.what() << '\n';
        return kExitBudget;
    } catch (const CertificationFailure& e) {
        err << "error: certification: " << e.what() << " (positions " << join_positions(e.positions()) << ")\n";
        return kExitPrecondition;
    } catch (const RecoveryImpossible& e) {
        err << "error: recovery: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        err << "error: precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::out_of_range& e) {
        err << "error: precondition: " << e.what() << '\n';
        return kExitPrecondition;
    }
}

}  // namespace gaglrc::cli

#endif  // GAGLRC_CLI_HPP

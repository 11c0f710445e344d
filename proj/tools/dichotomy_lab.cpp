// dichotomy-lab command line: generators, classification, games, and
// approximation over exact rationals. Every JSON output carries a version
// field and serializes deterministically.
//
// Exit codes: 0 success, 2 unreadable input, 3 invariant violation,
// 4 inconclusive under the search budget.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlab/approx.hpp"
#include "dlab/classify.hpp"
#include "dlab/convex.hpp"
#include "dlab/csv.hpp"
#include "dlab/error.hpp"
#include "dlab/generators.hpp"
#include "dlab/independence.hpp"
#include "dlab/order.hpp"
#include "dlab/ramsey.hpp"
#include "dlab/report_io.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace dlab;

json rat_json(const Rat& v) { return format_rational(v); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
}

void emit(const json& j, const std::string& out_path) { write_output(j.dump(2) + "\n", out_path); }

std::optional<Rat> parse_bound(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

EvalMatrix load_matrix(const std::string& path, const std::string& bound_text) {
    return parse_matrix_csv(read_file(path), parse_bound(bound_text));
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string cell = text.substr(start, comma - start);
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ParseError("bad index '" + cell + "'");
        }
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

ThresholdPair parse_thresholds(const std::string& text) {
    const std::vector<Rat> parts = parse_rational_list(text);
    if (parts.size() != 2) throw ParseError("thresholds must be 's,r'");
    return ThresholdPair(parts[0], parts[1]);
}

json stair_json(const StaircaseWitness& w) {
    json j;
    j["orientation"] = to_string(w.orientation);
    j["rows"] = w.rows;
    j["cols"] = w.cols;
    j["s"] = rat_json(w.thresholds.s);
    j["r"] = rat_json(w.thresholds.r);
    return j;
}

json shatter_json(const ShatterWitness& w) {
    json j;
    j["rows"] = w.rows;
    json pc = json::array();
    for (const auto& [pattern, col] : w.witness) pc.push_back(json::array({pattern, col}));
    j["pattern_columns"] = std::move(pc);
    j["s"] = rat_json(w.thresholds.s);
    j["r"] = rat_json(w.thresholds.r);
    return j;
}

json coef_json(const CoefVector& c) {
    json j;
    j["support"] = c.support;
    json w = json::array();
    for (const Rat& v : c.weights) w.push_back(rat_json(v));
    j["weights"] = std::move(w);
    j["convex"] = c.convex;
    return j;
}

json rat_array(const std::vector<Rat>& vs) {
    json a = json::array();
    for (const Rat& v : vs) a.push_back(rat_json(v));
    return a;
}

convex::SetFamily family_of(std::size_t ground, const std::vector<std::string>& member_specs) {
    convex::SetFamily f;
    f.ground = ground;
    for (const auto& spec : member_specs) {
        std::vector<std::size_t> mem = parse_index_list(spec);
        std::sort(mem.begin(), mem.end());
        f.members.push_back(std::move(mem));
    }
    convex::validate_family(f);
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dichotomy-lab: finite order/independence diagnostics with exact rational certificates"};
    app.require_subcommand(1);
    int code = 0;

    // JSON is the only report format; the flag exists so scripts can pin it.
    auto add_format = [](CLI::App* cmd) {
        cmd->add_option_function<std::string>(
               "--format", [](const std::string&) {}, "output format")
            ->check(CLI::IsMember({"json"}));
    };

    // ---- gen -----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a matrix family as CSV");
    auto gen_type = std::make_shared<std::string>();
    auto gen_args = std::make_shared<std::vector<std::size_t>>();
    auto gen_seed = std::make_shared<std::uint64_t>(0);
    auto gen_denom = std::make_shared<std::int64_t>(16);
    auto gen_out = std::make_shared<std::string>();
    gen->add_option("type", *gen_type, "linear-order | shatter | random | monotone-family")
        ->required()
        ->check(CLI::IsMember({"linear-order", "shatter", "random", "monotone-family"}));
    gen->add_option("args", *gen_args, "size arguments (n | d | n m)");
    gen->add_option("--seed", *gen_seed, "random seed");
    gen->add_option("--denom", *gen_denom, "random entry denominator");
    gen->add_option("--out", *gen_out, "output file (default stdout)");
    gen->callback([=]() {
        EvalMatrix m;
        const auto& a = *gen_args;
        auto need = [&](std::size_t k) {
            if (a.size() != k) throw InvalidInput("'" + *gen_type + "' expects " + std::to_string(k) + " size argument(s)");
        };
        if (*gen_type == "linear-order") {
            need(1);
            m = gen_linear_order(a[0]);
        } else if (*gen_type == "shatter") {
            need(1);
            m = gen_shatter(a[0]);
        } else if (*gen_type == "random") {
            need(2);
            m = gen_random(a[0], a[1], *gen_seed, *gen_denom);
        } else {
            need(2);
            m = gen_monotone_family(a[0], a[1]);
        }
        write_output(write_matrix_csv(m), *gen_out);
    });

    // ---- analyze ---------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "classify a matrix (stable / NIP at scale)");
    auto an_path = std::make_shared<std::string>();
    auto an_bound = std::make_shared<std::string>();
    auto an_thresholds = std::make_shared<std::vector<std::string>>();
    auto an_k_stable = std::make_shared<std::size_t>(4);
    auto an_d_nip = std::make_shared<std::size_t>(4);
    auto an_gap_min = std::make_shared<std::string>();
    auto an_budget = std::make_shared<std::uint64_t>(SearchBudget{}.node_limit);
    auto an_out = std::make_shared<std::string>();
    analyze->add_option("matrix", *an_path, "matrix CSV file")->required();
    analyze->add_option("--bound", *an_bound, "entry bound (default: max |entry|)");
    analyze->add_option("--thresholds", *an_thresholds, "explicit 's,r' pair (repeatable)");
    analyze->add_option("--k-max,--k-stable", *an_k_stable, "stability cutoff (max staircase length sought)");
    analyze->add_option("--d-max,--d-nip", *an_d_nip, "NIP cutoff (max shattering degree sought)");
    analyze->add_option("--gap-min", *an_gap_min, "minimum threshold gap for the scan");
    analyze->add_option("--budget", *an_budget, "search node budget");
    analyze->add_option("--out", *an_out, "output file (default stdout)");
    add_format(analyze);
    analyze->callback([=, &code]() {
        const EvalMatrix m = load_matrix(*an_path, *an_bound);
        classify::Params params;
        params.k_stable = *an_k_stable;
        params.d_nip = *an_d_nip;
        if (!an_gap_min->empty()) params.gap_min = parse_rational(*an_gap_min);
        for (const auto& spec : *an_thresholds) params.thresholds.push_back(parse_thresholds(spec));
        params.budget.node_limit = *an_budget;
        const classify::Report rep = classify::classify(m, params);
        write_output(report_io::report_to_json(rep, kVersion), *an_out);
        if (rep.stable_inconclusive || rep.nip_inconclusive) code = 4;
    });

    // ---- defect ----------------------------------------------------------
    auto* defect = app.add_subcommand("defect", "widest-gap staircase profile by length");
    auto de_path = std::make_shared<std::string>();
    auto de_bound = std::make_shared<std::string>();
    auto de_k_max = std::make_shared<std::size_t>(0);
    auto de_budget = std::make_shared<std::uint64_t>(SearchBudget{}.node_limit);
    auto de_out = std::make_shared<std::string>();
    defect->add_option("matrix", *de_path, "matrix CSV file")->required();
    defect->add_option("--bound", *de_bound, "entry bound (default: max |entry|)");
    defect->add_option("--k-max", *de_k_max, "maximum length (default min(rows, cols))");
    defect->add_option("--budget", *de_budget, "search node budget");
    defect->add_option("--out", *de_out, "output file (default stdout)");
    add_format(defect);
    defect->callback([=, &code]() {
        const EvalMatrix m = load_matrix(*de_path, *de_bound);
        const std::size_t k_max = *de_k_max ? *de_k_max : std::min(m.rows(), m.cols());
        const DefectProfile prof = defect_profile(m, k_max, SearchBudget{*de_budget});
        json j;
        j["version"] = kVersion;
        json entries = json::array();
        for (const auto& e : prof.entries) {
            json je;
            je["k"] = e.k;
            je["gap"] = rat_json(e.gap);
            je["witness"] = stair_json(e.witness);
            entries.push_back(std::move(je));
        }
        j["entries"] = std::move(entries);
        j["exhausted"] = prof.exhausted;
        j["nodes"] = prof.nodes;
        emit(j, *de_out);
        if (!prof.exhausted) code = 4;
    });

    // ---- probe -----------------------------------------------------------
    auto* probe = app.add_subcommand("probe", "convex-combination stability probe");
    auto pr_path = std::make_shared<std::string>();
    auto pr_bound = std::make_shared<std::string>();
    auto pr_thresholds = std::make_shared<std::string>();
    auto pr_samples = std::make_shared<std::size_t>(8);
    auto pr_seed = std::make_shared<std::uint64_t>(0);
    auto pr_k_max = std::make_shared<std::size_t>(0);
    auto pr_budget = std::make_shared<std::uint64_t>(SearchBudget{}.node_limit);
    auto pr_out = std::make_shared<std::string>();
    probe->add_option("matrix", *pr_path, "matrix CSV file")->required();
    probe->add_option("--thresholds", *pr_thresholds, "'s,r'")->required();
    probe->add_option("--bound", *pr_bound, "entry bound (default: max |entry|)");
    probe->add_option("--samples", *pr_samples, "number of convex combinations");
    probe->add_option("--seed", *pr_seed, "random seed");
    probe->add_option("--k-max", *pr_k_max, "rank cap (default min(rows, cols))");
    probe->add_option("--budget", *pr_budget, "search node budget");
    probe->add_option("--out", *pr_out, "output file (default stdout)");
    add_format(probe);
    probe->callback([=, &code]() {
        const EvalMatrix m = load_matrix(*pr_path, *pr_bound);
        const ThresholdPair t = parse_thresholds(*pr_thresholds);
        const std::size_t k_max = *pr_k_max ? *pr_k_max : std::min(m.rows(), m.cols());
        const convex::ProbeReport rep =
            convex::conv_stability_probe(m, t, *pr_samples, *pr_seed, k_max, SearchBudget{*pr_budget});
        json j;
        j["version"] = kVersion;
        j["base_rank"] = rep.base_rank;
        j["extended_rank"] = rep.extended_rank;
        j["extended"] = rep.extended;
        json combos = json::array();
        for (const auto& c : rep.appended) combos.push_back(coef_json(c));
        j["appended"] = std::move(combos);
        j["witness"] = rep.witness ? stair_json(*rep.witness) : json(nullptr);
        j["exhausted"] = rep.exhausted;
        j["seed"] = rep.seed;
        j["samples"] = rep.samples;
        emit(j, *pr_out);
        if (!rep.exhausted) code = 4;
    });

    // ---- ptak ------------------------------------------------------------
    auto* ptak = app.add_subcommand("ptak", "exact value of the mass game on a set family");
    auto pt_ground = std::make_shared<std::size_t>();
    auto pt_members = std::make_shared<std::vector<std::string>>();
    auto pt_out = std::make_shared<std::string>();
    ptak->add_option("--ground", *pt_ground, "ground set size")->required();
    ptak->add_option("--member", *pt_members, "member as 'i,j,k' (repeatable)");
    ptak->add_option("--out", *pt_out, "output file (default stdout)");
    add_format(ptak);
    ptak->callback([=]() {
        const convex::SetFamily f = family_of(*pt_ground, *pt_members);
        const convex::GameSolution s = convex::ptak_value(f);
        json j;
        j["version"] = kVersion;
        j["value"] = rat_json(s.value);
        j["mean"] = rat_array(s.mean);
        j["dual"] = rat_array(s.dual);
        json support = json::array();
        for (std::size_t i = 0; i < s.mean.size(); ++i)
            if (s.mean[i] != 0) support.push_back(i);
        j["mean_support"] = std::move(support);
        emit(j, *pt_out);
    });

    // ---- ptak-chain -------------------------------------------------------
    auto* chain = app.add_subcommand("ptak-chain", "search for a strictly increasing covering chain");
    auto ch_ground = std::make_shared<std::size_t>();
    auto ch_members = std::make_shared<std::vector<std::string>>();
    auto ch_length = std::make_shared<std::size_t>();
    auto ch_budget = std::make_shared<std::uint64_t>(SearchBudget{}.node_limit);
    auto ch_out = std::make_shared<std::string>();
    chain->add_option("--ground", *ch_ground, "ground set size")->required();
    chain->add_option("--member", *ch_members, "member as 'i,j,k' (repeatable)");
    chain->add_option("--length", *ch_length, "chain length")->required();
    chain->add_option("--budget", *ch_budget, "search node budget");
    chain->add_option("--out", *ch_out, "output file (default stdout)");
    add_format(chain);
    chain->callback([=, &code]() {
        const convex::SetFamily f = family_of(*ch_ground, *ch_members);
        const convex::PtakChainResult r = convex::ptak_chain_search(f, *ch_length, SearchBudget{*ch_budget});
        json j;
        j["version"] = kVersion;
        j["found"] = r.found;
        j["member_indices"] = r.chain.member_indices;
        j["chain_sets"] = r.chain.chain_sets;
        j["longest"] = r.longest;
        j["exhausted"] = r.exhausted;
        j["nodes"] = r.nodes;
        emit(j, *ch_out);
        if (!r.found && !r.exhausted) code = 4;
    });

    // ---- mazur -------------------------------------------------------------
    auto* mazur = app.add_subcommand("mazur", "best convex sup-distance approximation from a tail");
    auto mz_path = std::make_shared<std::string>();
    auto mz_bound = std::make_shared<std::string>();
    auto mz_target = std::make_shared<std::string>();
    auto mz_seq = std::make_shared<std::string>();
    auto mz_tail = std::make_shared<std::size_t>(0);
    auto mz_out = std::make_shared<std::string>();
    mazur->add_option("matrix", *mz_path, "matrix CSV file")->required();
    mazur->add_option("--target", *mz_target, "target vector 'v1,v2,..'")->required();
    mazur->add_option("--seq", *mz_seq, "row sequence 'i,j,..' (default all rows)");
    mazur->add_option("--tail", *mz_tail, "tail start within the sequence");
    mazur->add_option("--bound", *mz_bound, "entry bound (default: max |entry|)");
    mazur->add_option("--out", *mz_out, "output file (default stdout)");
    add_format(mazur);
    mazur->callback([=]() {
        const EvalMatrix m = load_matrix(*mz_path, *mz_bound);
        std::vector<std::size_t> seq;
        if (mz_seq->empty())
            for (std::size_t i = 0; i < m.rows(); ++i) seq.push_back(i);
        else
            seq = parse_index_list(*mz_seq);
        const convex::MazurResult r = convex::mazur_approx(m, seq, parse_rational_list(*mz_target), *mz_tail);
        json j;
        j["version"] = kVersion;
        j["coefficients"] = coef_json(r.coefficients);
        j["distance"] = rat_json(r.distance);
        emit(j, *mz_out);
    });

    // ---- gauge -------------------------------------------------------------
    auto* gauge = app.add_subcommand("gauge", "Minkowski gauge of the symmetric convex hull");
    auto ga_gens = std::make_shared<std::vector<std::string>>();
    auto ga_target = std::make_shared<std::string>();
    auto ga_out = std::make_shared<std::string>();
    gauge->add_option("--generator", *ga_gens, "generator 'v1,v2,..' (repeatable)");
    gauge->add_option("--target", *ga_target, "target vector")->required();
    gauge->add_option("--out", *ga_out, "output file (default stdout)");
    add_format(gauge);
    gauge->callback([=]() {
        std::vector<std::vector<Rat>> gens;
        for (const auto& spec : *ga_gens) gens.push_back(parse_rational_list(spec));
        const convex::GaugeResult r = convex::gauge_norm(gens, parse_rational_list(*ga_target));
        json j;
        j["version"] = kVersion;
        j["in_span"] = r.in_span;
        j["value"] = rat_json(r.value);
        j["coefficients"] = rat_array(r.coefficients);
        emit(j, *ga_out);
    });

    // ---- approx ------------------------------------------------------------
    auto* approx_cmd = app.add_subcommand("approx", "feature selection and monotone-table approximation");
    auto ap_path = std::make_shared<std::string>();
    auto ap_bound = std::make_shared<std::string>();
    auto ap_target = std::make_shared<std::string>();
    auto ap_rows = std::make_shared<std::string>();
    auto ap_eps = std::make_shared<std::string>();
    auto ap_cap = std::make_shared<std::size_t>(0);
    auto ap_out = std::make_shared<std::string>();
    approx_cmd->add_option("matrix", *ap_path, "matrix CSV file")->required();
    approx_cmd->add_option("--target", *ap_target, "target vector 'v1,v2,..'")->required();
    approx_cmd->add_option("--epsilon", *ap_eps, "approximation scale")->required();
    approx_cmd->add_option("--rows", *ap_rows, "candidate feature rows (default all)");
    approx_cmd->add_option("--cap", *ap_cap, "iteration cap (default #ordered column pairs)");
    approx_cmd->add_option("--out", *ap_out, "output file (default stdout)");
    add_format(approx_cmd);
    approx_cmd->add_option("--bound", *ap_bound, "entry bound (default: max |entry|)");
    approx_cmd->callback([=]() {
        const EvalMatrix m = load_matrix(*ap_path, *ap_bound);
        std::vector<std::size_t> rows;
        if (ap_rows->empty())
            for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(i);
        else
            rows = parse_index_list(*ap_rows);
        const approx::ApproxOutcome out =
            approx::approximate(m, rows, parse_rational_list(*ap_target), parse_rational(*ap_eps), *ap_cap);
        json j;
        j["version"] = kVersion;
        if (std::holds_alternative<approx::FeatureFailure>(out)) {
            const auto& f = std::get<approx::FeatureFailure>(out);
            j["failed"] = true;
            j["cap_hit"] = f.cap_hit;
            json pairs = json::array();
            for (const auto& [x, y] : f.pairs) pairs.push_back(json::array({x, y}));
            j["pairs"] = std::move(pairs);
            j["features"] = f.features;
            json pattern = json::array();
            for (const auto& row : f.pattern) pattern.push_back(rat_array(row));
            j["pattern"] = std::move(pattern);
            j["iterations"] = f.iterations;
        } else {
            const auto& r = std::get<approx::ApproxResult>(out);
            j["failed"] = false;
            j["features"] = r.selection.features;
            json pairs = json::array();
            for (const auto& [x, y] : r.selection.pairs) pairs.push_back(json::array({x, y}));
            j["pairs"] = std::move(pairs);
            j["iterations"] = r.selection.iterations;
            j["approximant"] = rat_array(r.approximant);
            j["err"] = rat_json(r.err);
            json observed = json::array();
            for (const auto& [vec, h] : r.table.observed) {
                json o;
                o["vector"] = rat_array(vec);
                o["h"] = rat_json(h);
                observed.push_back(std::move(o));
            }
            j["table"] = {{"observed", std::move(observed)},
                          {"floor", rat_json(r.table.floor_value)},
                          {"epsilon", rat_json(r.table.epsilon)}};
        }
        emit(j, *ap_out);
    });

    // ---- ramsey ------------------------------------------------------------
    auto* ramsey = app.add_subcommand("ramsey", "monochromatic subset extraction");
    auto ra_n = std::make_shared<std::size_t>();
    auto ra_m = std::make_shared<std::size_t>();
    auto ra_ones = std::make_shared<std::vector<std::string>>();
    auto ra_out = std::make_shared<std::string>();
    ramsey->add_option("--n", *ra_n, "vertex count (vertices are 1..n)")->required();
    ramsey->add_option("--m", *ra_m, "target homogeneous size")->required();
    ramsey->add_option("--one", *ra_ones, "pair 'i,j' colored 1 (repeatable; default all 0)");
    ramsey->add_option("--out", *ra_out, "output file (default stdout)");
    add_format(ramsey);
    ramsey->callback([=]() {
        PairColoring coloring(*ra_n);
        for (const auto& spec : *ra_ones) {
            const std::vector<std::size_t> pair = parse_index_list(spec);
            if (pair.size() != 2) throw ParseError("--one expects 'i,j'");
            coloring.set_color(pair[0], pair[1], 1);
        }
        const RamseyResult r = ramsey_pairs(coloring, *ra_m);
        json j;
        j["version"] = kVersion;
        j["success"] = r.success;
        j["subset"] = r.subset;
        j["color"] = r.color;
        emit(j, *ra_out);
    });

    // ---- cauchy ------------------------------------------------------------
    auto* cauchy = app.add_subcommand("cauchy", "pigeonhole epsilon-clustered row subsequence");
    auto ca_path = std::make_shared<std::string>();
    auto ca_bound = std::make_shared<std::string>();
    auto ca_eps = std::make_shared<std::string>();
    auto ca_out = std::make_shared<std::string>();
    cauchy->add_option("matrix", *ca_path, "matrix CSV file")->required();
    cauchy->add_option("--epsilon", *ca_eps, "cluster width")->required();
    cauchy->add_option("--bound", *ca_bound, "entry bound (default: max |entry|)");
    cauchy->add_option("--out", *ca_out, "output file (default stdout)");
    add_format(cauchy);
    cauchy->callback([=]() {
        const EvalMatrix m = load_matrix(*ca_path, *ca_bound);
        const CauchyResult r = cauchy_subsequence(m, parse_rational(*ca_eps));
        json j;
        j["version"] = kVersion;
        j["rows"] = r.rows;
        j["epsilon"] = rat_json(r.epsilon);
        emit(j, *ca_out);
    });

    // ---- dichotomy -----------------------------------------------------------
    auto* dich = app.add_subcommand("dichotomy", "clustered subsequence or shattered set, with certificates");
    auto di_path = std::make_shared<std::string>();
    auto di_bound = std::make_shared<std::string>();
    auto di_thresholds = std::make_shared<std::string>();
    auto di_eps = std::make_shared<std::string>();
    auto di_want_cauchy = std::make_shared<std::size_t>();
    auto di_want_indep = std::make_shared<std::size_t>();
    auto di_budget = std::make_shared<std::uint64_t>(SearchBudget{}.node_limit);
    auto di_out = std::make_shared<std::string>();
    dich->add_option("matrix", *di_path, "matrix CSV file")->required();
    dich->add_option("--thresholds", *di_thresholds, "'s,r'")->required();
    dich->add_option("--epsilon", *di_eps, "cluster width")->required();
    dich->add_option("--want-cauchy", *di_want_cauchy, "clustered subsequence length")->required();
    dich->add_option("--want-indep", *di_want_indep, "shattered set size")->required();
    dich->add_option("--budget", *di_budget, "search node budget");
    dich->add_option("--bound", *di_bound, "entry bound (default: max |entry|)");
    dich->add_option("--out", *di_out, "output file (default stdout)");
    add_format(dich);
    dich->callback([=, &code]() {
        const EvalMatrix m = load_matrix(*di_path, *di_bound);
        const DichotomyOutcome out =
            rosenthal_dichotomy(m, parse_thresholds(*di_thresholds), parse_rational(*di_eps),
                                *di_want_cauchy, *di_want_indep, SearchBudget{*di_budget});
        json j;
        j["version"] = kVersion;
        if (std::holds_alternative<CauchyBranch>(out)) {
            const auto& b = std::get<CauchyBranch>(out);
            j["outcome"] = "cauchy";
            j["rows"] = b.rows;
            j["epsilon"] = rat_json(b.epsilon);
        } else if (std::holds_alternative<IndependentBranch>(out)) {
            j["outcome"] = "independent";
            j["witness"] = shatter_json(std::get<IndependentBranch>(out).witness);
        } else {
            const auto& b = std::get<DichotomyInconclusive>(out);
            j["outcome"] = "inconclusive";
            j["cauchy_len"] = b.cauchy_len;
            j["indep_rank"] = b.indep_rank;
            j["indep_exhausted"] = b.indep_exhausted;
            j["nodes"] = b.nodes;
            code = 4;
        }
        emit(j, *di_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? 0 : 2;
    } catch (const dlab::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << "\n";
        return 2;
    } catch (const dlab::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return code;
}

#include "dlab/report_io.hpp"

#include <json.hpp>

#include "dlab/error.hpp"
#include "dlab/rational.hpp"

namespace dlab::report_io {

namespace {

using nlohmann::json;

json rat(const Rat& v) { return format_rational(v); }

Rat unrat(const json& j) {
    if (!j.is_string()) throw ParseError("expected a rational string");
    return parse_rational(j.get<std::string>());
}

EvalMatrix matrix_of(const classify::Report& r) {
    return validate_matrix(r.row_labels, r.col_labels, r.entries, r.bound);
}

void verify_witnesses(const classify::Report& r) {
    const EvalMatrix m = matrix_of(r);
    for (const auto& scan : r.scans) {
        if (scan.order_witness) {
            if (!check_staircase(m, *scan.order_witness).ok)
                throw std::logic_error("report carries an invalid staircase witness");
        }
        if (scan.indep_witness) {
            if (!check_shatter(m, *scan.indep_witness).ok)
                throw std::logic_error("report carries an invalid shatter witness");
        }
    }
}

json order_witness_json(const StaircaseWitness& w) {
    json j;
    j["orientation"] = to_string(w.orientation);
    j["rows"] = w.rows;
    j["cols"] = w.cols;
    j["s"] = rat(w.thresholds.s);
    j["r"] = rat(w.thresholds.r);
    return j;
}

json shatter_witness_json(const ShatterWitness& w) {
    json j;
    j["rows"] = w.rows;
    json pc = json::array();
    for (const auto& [pattern, col] : w.witness) pc.push_back(json::array({pattern, col}));
    j["pattern_columns"] = std::move(pc);
    j["s"] = rat(w.thresholds.s);
    j["r"] = rat(w.thresholds.r);
    return j;
}

Orientation orientation_of(const std::string& s) {
    if (s == "row-dominant") return Orientation::RowDominant;
    if (s == "col-dominant") return Orientation::ColDominant;
    throw ParseError("unknown orientation '" + s + "'");
}

ThresholdPair thresholds_of(const json& j) {
    try {
        return ThresholdPair(unrat(j.at("s")), unrat(j.at("r")));
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

StaircaseWitness order_witness_of(const json& j) {
    StaircaseWitness w;
    w.orientation = orientation_of(j.at("orientation").get<std::string>());
    w.rows = j.at("rows").get<std::vector<std::size_t>>();
    w.cols = j.at("cols").get<std::vector<std::size_t>>();
    w.thresholds = thresholds_of(j);
    return w;
}

ShatterWitness shatter_witness_of(const json& j) {
    ShatterWitness w;
    w.rows = j.at("rows").get<std::vector<std::size_t>>();
    for (const auto& pair : j.at("pattern_columns")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("bad pattern/column pair");
        w.witness[pair[0].get<std::uint32_t>()] = pair[1].get<std::size_t>();
    }
    w.thresholds = thresholds_of(j);
    return w;
}

}  // namespace

std::string report_to_json(const classify::Report& r, std::string_view version) {
    verify_witnesses(r);

    json j;
    j["version"] = std::string(version);
    j["matrix"]["row_labels"] = r.row_labels;
    j["matrix"]["col_labels"] = r.col_labels;
    j["matrix"]["rows"] = r.rows;
    j["matrix"]["cols"] = r.cols;
    j["matrix"]["bound"] = rat(r.bound);
    {
        json rows = json::array();
        for (const auto& row : r.entries) {
            json jr = json::array();
            for (const Rat& v : row) jr.push_back(rat(v));
            rows.push_back(std::move(jr));
        }
        j["matrix"]["entries"] = std::move(rows);
    }
    j["params"]["k_stable"] = r.k_stable;
    j["params"]["d_nip"] = r.d_nip;
    j["params"]["gap_min"] = rat(r.gap_min_used);
    j["params"]["node_limit"] = r.node_limit;

    json ranks = json::array();
    json witnesses = json::array();
    for (const auto& scan : r.scans) {
        json s;
        s["s"] = rat(scan.thresholds.s);
        s["r"] = rat(scan.thresholds.r);
        s["order_rank"] = scan.order_rank;
        s["order_exhausted"] = scan.order_exhausted;
        s["order_orientation"] = to_string(scan.order_orientation);
        s["indep_rank"] = scan.indep_rank;
        s["indep_rank_pos"] = scan.indep_rank_pos;
        s["indep_rank_neg"] = scan.indep_rank_neg;
        s["indep_negated_larger"] = scan.indep_negated_larger;
        s["indep_exhausted"] = scan.indep_exhausted;
        ranks.push_back(std::move(s));

        json w;
        w["order"] = scan.order_witness ? order_witness_json(*scan.order_witness) : json(nullptr);
        w["shatter"] = scan.indep_witness ? shatter_witness_json(*scan.indep_witness) : json(nullptr);
        witnesses.push_back(std::move(w));
    }
    j["ranks"] = std::move(ranks);
    j["witnesses"] = std::move(witnesses);

    j["verdicts"]["stable_at_scale"] = r.stable_at_scale;
    j["verdicts"]["nip_at_scale"] = r.nip_at_scale;
    j["budget_flags"]["stable_inconclusive"] = r.stable_inconclusive;
    j["budget_flags"]["nip_inconclusive"] = r.nip_inconclusive;
    j["banach_labels"]["reflexive_like"] = r.reflexive_like;
    j["banach_labels"]["rosenthal_like"] = r.rosenthal_like;
    j["banach_labels"]["wsc_like"] = r.wsc_like;

    return j.dump(2) + "\n";
}

ParsedReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what());
    }
    try {
        ParsedReport out;
        classify::Report& r = out.report;
        out.version = j.at("version").get<std::string>();
        const json& jm = j.at("matrix");
        r.row_labels = jm.at("row_labels").get<std::vector<std::string>>();
        r.col_labels = jm.at("col_labels").get<std::vector<std::string>>();
        r.rows = jm.at("rows").get<std::size_t>();
        r.cols = jm.at("cols").get<std::size_t>();
        r.bound = unrat(jm.at("bound"));
        for (const auto& row : jm.at("entries")) {
            std::vector<Rat> er;
            for (const auto& cell : row) er.push_back(unrat(cell));
            r.entries.push_back(std::move(er));
        }
        if (r.rows != r.entries.size()) throw ParseError("row count disagrees with entries");

        const json& jp = j.at("params");
        r.k_stable = jp.at("k_stable").get<std::size_t>();
        r.d_nip = jp.at("d_nip").get<std::size_t>();
        r.gap_min_used = unrat(jp.at("gap_min"));
        r.node_limit = jp.at("node_limit").get<std::uint64_t>();

        const json& jranks = j.at("ranks");
        const json& jwits = j.at("witnesses");
        if (jranks.size() != jwits.size()) throw ParseError("ranks/witnesses length mismatch");
        for (std::size_t i = 0; i < jranks.size(); ++i) {
            const json& s = jranks[i];
            classify::ThresholdScan scan{thresholds_of(s)};
            scan.order_rank = s.at("order_rank").get<std::size_t>();
            scan.order_exhausted = s.at("order_exhausted").get<bool>();
            scan.order_orientation = orientation_of(s.at("order_orientation").get<std::string>());
            scan.indep_rank = s.at("indep_rank").get<std::size_t>();
            scan.indep_rank_pos = s.at("indep_rank_pos").get<std::size_t>();
            scan.indep_rank_neg = s.at("indep_rank_neg").get<std::size_t>();
            scan.indep_negated_larger = s.at("indep_negated_larger").get<bool>();
            scan.indep_exhausted = s.at("indep_exhausted").get<bool>();
            const json& w = jwits[i];
            if (!w.at("order").is_null()) scan.order_witness = order_witness_of(w.at("order"));
            if (!w.at("shatter").is_null()) scan.indep_witness = shatter_witness_of(w.at("shatter"));
            r.scans.push_back(std::move(scan));
        }

        r.stable_at_scale = j.at("verdicts").at("stable_at_scale").get<bool>();
        r.nip_at_scale = j.at("verdicts").at("nip_at_scale").get<bool>();
        r.stable_inconclusive = j.at("budget_flags").at("stable_inconclusive").get<bool>();
        r.nip_inconclusive = j.at("budget_flags").at("nip_inconclusive").get<bool>();
        r.reflexive_like = j.at("banach_labels").at("reflexive_like").get<bool>();
        r.rosenthal_like = j.at("banach_labels").at("rosenthal_like").get<bool>();
        r.wsc_like = j.at("banach_labels").at("wsc_like").get<bool>();

        try {
            verify_witnesses(r);
        } catch (const std::logic_error& e) {
            throw ParseError(std::string("report fails verification: ") + e.what());
        } catch (const InvalidInput& e) {
            throw ParseError(std::string("report fails validation: ") + e.what());
        }
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what());
    }
}

}  // namespace dlab::report_io

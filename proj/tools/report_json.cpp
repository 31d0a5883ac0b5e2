#include "report_json.hpp"

namespace gdeck::cli {

namespace {

Json params_json(const GapParams& p) { return Json{{"s", p.s()}, {"k", p.k()}}; }

Json mode_json(const CountMode& m) {
    Json j{{"name", m.name()}};
    if (!m.is_exact()) j["primes"] = std::vector<std::uint64_t>(m.moduli().begin(), m.moduli().end());
    return j;
}

}  // namespace

Json to_json(const DeckSignature& sig) {
    Json j{{"schema", kSchema}, {"record", "signature"}};
    j["params"] = params_json(sig.params());
    j["mode"] = mode_json(sig.mode());
    j["source_length"] = sig.source_length();
    Json patterns = Json::array();
    for (std::size_t i = 0; i < sig.patterns(); ++i) patterns.push_back(pattern_string(i).str());
    j["patterns"] = std::move(patterns);
    if (sig.mode().is_exact()) {
        j["counts"] = std::vector<std::uint64_t>(sig.values().begin(), sig.values().end());
    } else {
        Json lanes = Json::array();
        for (std::size_t lane = 0; lane < sig.lanes(); ++lane) {
            auto v = sig.values().subspan(lane * sig.patterns(), sig.patterns());
            lanes.push_back(std::vector<std::uint64_t>(v.begin(), v.end()));
        }
        j["residues"] = std::move(lanes);
    }
    return j;
}

Json to_json(const Eq7Report& r) {
    return Json{{"schema", kSchema},      {"record", "eq7"},          {"params", params_json(r.params)},
                {"mode", mode_json(r.mode)}, {"plain_equal", r.plain_equal}, {"lr_equal", r.lr_equal},
                {"l_equal", r.l_equal},    {"r_equal", r.r_equal},     {"all", r.all()}};
}

Json to_json(const ConstructionPair& p) {
    return Json{{"schema", kSchema},
                {"record", "construction"},
                {"k", p.params.k()},
                {"s", p.params.s()},
                {"length", p.x.size()},
                {"claimed_property", std::string(to_string(p.claimed))},
                {"trimmed", p.trimmed},
                {"x", p.x.str()},
                {"y", p.y.str()}};
}

Json to_json(const CollisionReport& r) {
    Json j{{"schema", kSchema}, {"record", "collision"}, {"deck_kind", std::string(to_string(r.kind))}};
    if (r.kind == DeckKind::wildcard_u) {
        j["family"] = r.family;
    } else {
        j["params"] = Json{{"s", r.s}, {"k", r.k}};
    }
    j["scanned_lengths"] = Json{{"from", r.scanned_from}, {"to", r.scanned_to}};
    j["n"] = r.n ? Json(*r.n) : Json(nullptr);
    Json w = Json::array();
    for (const auto& [a, b] : r.witnesses) w.push_back(Json::array({a, b}));
    j["witnesses"] = std::move(w);
    j["confusable_pairs"] = r.confusable_pairs;
    j["classes"] = r.classes;
    return j;
}

Json to_json(const Lemma3Report& r) {
    Json hyp{{"xy_eq7", to_json(r.xy_eq7)}, {"pq_equivalent", r.pq_equivalent}, {"degenerate", r.degenerate}};
    Json concl{{"distinct", r.distinct},       {"deck_equal", r.h_eq7.plain_equal}, {"left_equal", r.h_eq7.l_equal},
               {"right_equal", r.h_eq7.r_equal}, {"both_equal", r.h_eq7.lr_equal}, {"mode", mode_json(r.h_eq7.mode)}};
    return Json{{"schema", kSchema},
                {"record", "lemma3"},
                {"hypotheses", std::move(hyp)},
                {"hypotheses_hold", r.hypotheses_hold()},
                {"conclusions", std::move(concl)},
                {"conclusions_hold", r.conclusions_hold()},
                {"ends_agree", r.ends_agree},
                {"hp", r.hp.str()},
                {"hq", r.hq.str()}};
}

Json to_json(const BoundReport& r) {
    Json j{{"schema", kSchema}, {"record", "bound"}, {"formula_id", std::string(to_string(r.formula))}, {"k", r.k}};
    if (r.s) j["s"] = r.s;
    if (r.k1) {
        j["k1"] = r.k1;
        j["k2"] = r.k2;
    }
    j["value"] = r.value;
    j["real_value"] = r.real_value;
    j["rounding"] = r.rounding;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace gdeck::cli

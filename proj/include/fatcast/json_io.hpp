#pragma once

#include <json.hpp>

#include "fatcast/bounds.hpp"
#include "fatcast/casting.hpp"
#include "fatcast/fatness.hpp"
#include "fatcast/genlab.hpp"
#include "fatcast/two_cast.hpp"

namespace fatcast {

using nlohmann::json;

inline json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

inline json to_json(const FatnessReport& r) {
    return {{"center", to_json(r.center)},
            {"r_inner", r.r_inner},
            {"r_outer", r.r_outer},
            {"ratio", r.ratio},
            {"certified", r.certified}};
}

inline json to_json(const CastVerdict& v) {
    return {{"facet", v.facet},
            {"castable_weak", v.castable_weak},
            {"castable_strong", v.castable_strong},
            {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
            {"thickness", v.thickness},
            {"area", v.area},
            {"lemma2_ok", v.lemma2_ok}};
}

inline json to_json(const std::vector<CastVerdict>& list) {
    json arr = json::array();
    for (const auto& v : list) arr.push_back(to_json(v));
    return arr;
}

inline json to_json(const GeneralPositionReport& g) {
    return {{"coplanarity_margin", g.coplanarity_margin},
            {"facet_triple_margin", g.facet_triple_margin},
            {"exhaustive", g.exhaustive},
            {"tolerance", g.tolerance},
            {"pass", g.pass}};
}

inline json to_json(const Plane& p) {
    return {{"normal", to_json(p.normal)}, {"offset", p.offset}};
}

inline const char* strategy_name(CutStrategy s) {
    switch (s) {
        case CutStrategy::VertexTriple: return "vertex-triple";
        case CutStrategy::FacetParallel: return "facet-parallel";
        case CutStrategy::Random: return "random";
        case CutStrategy::Mixed: return "mixed";
    }
    return "";
}

inline const char* provenance_name(PlaneProvenance p) {
    switch (p) {
        case PlaneProvenance::VertexTriple: return "vertex-triple";
        case PlaneProvenance::FacetParallel: return "facet-parallel";
        case PlaneProvenance::Random: return "random";
    }
    return "";
}

inline json to_json(const CutVerdict& v) {
    return {{"plane", to_json(v.cut.plane)},
            {"volume_large", v.cut.volume_large},
            {"volume_small", v.cut.volume_small},
            {"section_vertices", v.cut.section.size()},
            {"two_castable", v.two_castable},
            {"both_through_C", v.both_through_C},
            {"verdicts_large", to_json(v.verdicts_large)},
            {"verdicts_small", to_json(v.verdicts_small)}};
}

inline json to_json(const SearchResult& r, const std::string& input) {
    json hist = json::object();
    for (const auto& [unmarked, count] : r.unmarked_histogram) {
        hist[std::to_string(unmarked)] = count;
    }
    return {{"input", input},
            {"budget", r.budget},
            {"seed", r.seed},
            {"strategies", strategy_name(r.strategy)},
            {"candidates", r.candidates},
            {"cuts_tested", r.cuts_tested},
            {"cuts_skipped", r.cuts_skipped},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
            {"witness_index", r.witness_index},
            {"unmarked_histogram", hist},
            {"runtime_ms", r.runtime_ms}};
}

inline json to_json(const CaseBound& b) {
    json j{{"case", case_name(b.id)},
           {"relation", b.relation},
           {"root", b.root},
           {"residual", b.trace.residual},
           {"reference", b.reference},
           {"matches_reference", b.matches_reference},
           {"method", b.trace.method},
           {"iterations", b.trace.iterations}};
    if (b.id == CaseId::IIbNeg || b.id == CaseId::Theorem) {
        j["variant"] = variant_name(b.variant);
        j["z0"] = b.z0;
    }
    return j;
}

inline const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::SphereHull: return "sphere-hull";
        case GenKind::Platonic: return "platonic";
        case GenKind::Prism: return "prism";
        case GenKind::Perturbed: return "perturbed";
    }
    return "";
}

inline json to_json(const GenSpec& s) {
    json j{{"kind", gen_kind_name(s.kind)}, {"seed", s.seed}, {"epsilon", s.epsilon}};
    if (s.n > 0) j["n"] = s.n;
    if (s.target_ratio > 0) j["target_ratio"] = s.target_ratio;
    if (!s.name.empty()) j["name"] = s.name;
    return j;
}

}  // namespace fatcast

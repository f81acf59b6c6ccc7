#ifndef CMREG_REPORT_JSON_HPP
#define CMREG_REPORT_JSON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbert.hpp"
#include "io.hpp"
#include "regularity.hpp"
#include "version.hpp"

namespace cmreg {

using ordered_json = nlohmann::ordered_json;

/// Everything one CLI invocation reports. `reports.front()` supplies the headline numbers.
struct ReportDocument {
    InputDocument input;
    /// "c", "gin", "oracle" or "all".
    std::string method;
    std::vector<RegularityReport> reports;
    std::optional<bool> methods_agree;
    std::vector<std::string> notes;
    bool include_betti = false;
    std::optional<std::map<std::string, double>> timings_ms;
};

namespace detail {

inline ordered_json to_json(const ExtendedInt& v) {
    if (v.is_finite()) return v.value();
    return v.to_string();
}

inline ordered_json to_json(const std::vector<ExtendedInt>& vs) {
    ordered_json a = ordered_json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline ordered_json to_json(const MonomialIdeal& J) {
    ordered_json a = ordered_json::array();
    for (const auto& g : J.generators()) {
        ordered_json m;
        m["exponents"] = g.exponents();
        m["monomial"] = to_string(g, J.ring()->names());
        a.push_back(std::move(m));
    }
    return a;
}

inline ordered_json to_json(const BettiTable& table) {
    ordered_json a = ordered_json::array();
    for (const auto& [key, rank] : table.entries()) {
        ordered_json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["rank"] = rank;
        a.push_back(std::move(e));
    }
    return a;
}

inline ordered_json to_json(const ScalarMatrix& g) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Invariant block of one report; empty optionals are omitted.
inline void write_invariants(ordered_json& out, const RegularityReport& r, bool include_betti) {
    out["method"] = to_string(r.method);
    out["t"] = r.t;
    out["dim_quotient"] = r.dim_quotient;
    if (!r.c.values.empty()) out["c"] = to_json(r.c.values);
    out["reg_t_quotient"] = to_json(r.reg_t_quotient);
    out["reg_t_ideal"] = to_json(r.reg_t_ideal());
    out["astar_t_quotient"] = to_json(r.astar_t_quotient);
    out["astar_t_ideal"] = to_json(r.astar_t_ideal());
    if (r.reg_quotient) out["reg_quotient"] = *r.reg_quotient;
    if (auto v = r.reg_ideal()) out["reg_ideal"] = *v;
    if (r.astar_quotient) out["astar_quotient"] = *r.astar_quotient;
    if (auto v = r.astar_ideal()) out["astar_ideal"] = *v;
    out["reg_profile"] = to_json(r.reg_profile);
    out["astar_profile"] = to_json(r.astar_profile);
    if (r.method == Method::c_invariants) {
        out["coordinates"] = r.coordinates ? "generic" : "original";
        if (r.coordinates) out["coordinate_change"] = to_json(*r.coordinates);
        out["coordinate_attempts"] = r.coordinate_attempts;
    }
    if (r.monomial_ideal) {
        const char* key = r.method == Method::c_invariants ? "initial_ideal"
                          : r.method == Method::gin        ? "gin"
                                                           : "monomial_ideal";
        out[key] = to_json(*r.monomial_ideal);
        out["hilbert_numerator"] = hilbert_numerator(*r.monomial_ideal).coeffs();
    }
    if (r.method == Method::gin) out["gin_draws"] = r.gin_draws;
    if (r.seed) out["seed"] = *r.seed;
    if (include_betti && r.betti) out["betti"] = to_json(*r.betti);
}

}  // namespace detail

/// Machine-readable report. Key order is fixed; +-inf are the strings "+inf" / "-inf".
inline std::string emit_json(const ReportDocument& doc) {
    ordered_json out;
    out["schema_version"] = schema_version;
    out["tool"] = "cmreg";
    out["tool_version"] = tool_version;
    ordered_json ring;
    ring["variables"] = doc.input.ring->names();
    ring["field"] = doc.input.ring->field().name();
    out["ring"] = std::move(ring);
    ordered_json ideal = ordered_json::array();
    for (const auto& f : doc.input.generators) ideal.push_back(f.to_string());
    out["ideal"] = std::move(ideal);
    out["requested_method"] = doc.method;

    if (!doc.reports.empty()) {
        ordered_json headline;
        detail::write_invariants(headline, doc.reports.front(), doc.include_betti);
        for (auto it = headline.begin(); it != headline.end(); ++it) out[it.key()] = it.value();
    }
    if (doc.include_betti && !out.contains("betti")) {
        for (const auto& r : doc.reports) {
            if (r.betti) {
                out["betti"] = detail::to_json(*r.betti);
                break;
            }
        }
    }
    if (doc.reports.size() > 1) {
        ordered_json methods;
        for (const auto& r : doc.reports) {
            ordered_json m;
            detail::write_invariants(m, r, false);
            methods[to_string(r.method)] = std::move(m);
        }
        out["methods"] = std::move(methods);
    }
    if (doc.methods_agree) out["methods_agree"] = *doc.methods_agree;
    if (!doc.notes.empty()) out["notes"] = doc.notes;
    if (doc.timings_ms) out["timings_ms"] = *doc.timings_ms;
    return out.dump(2) + "\n";
}

}  // namespace cmreg

#endif

#ifndef CMREG_CLI_HPP
#define CMREG_CLI_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "betti.hpp"
#include "io.hpp"
#include "regularity.hpp"
#include "report_json.hpp"

namespace cmreg {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_math_failure = 1, exit_input_error = 2 };

struct ComputeRequest {
    std::string input_text;
    std::optional<std::size_t> t;
    /// c | gin | oracle | all
    std::string method = "c";
    bool generic = false;
    std::uint64_t seed = 1;
    long bound = 1000;
    bool json = false;
    bool betti = false;
    bool timings = false;
};

namespace detail {

inline bool is_monomial_input(const InputDocument& doc) {
    for (const auto& f : doc.generators) {
        if (f.size() > 1) return false;
    }
    return true;
}

inline std::string join(const std::vector<ExtendedInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

inline std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    const auto& ring = *doc.input.ring;
    out << "ring: " << ring.field().name() << "[";
    for (std::size_t i = 0; i < ring.nvars(); ++i) out << (i ? ", " : "") << ring.name(i);
    out << "]\n";
    for (const auto& r : doc.reports) {
        out << "\n[" << to_string(r.method) << "]\n";
        if (r.method == Method::c_invariants) {
            out << "coordinates: " << (r.coordinates ? "generic" : "original") << " (attempts: "
                << r.coordinate_attempts << ")\n";
            if (r.monomial_ideal) out << "in(I) = " << r.monomial_ideal->to_string() << "\n";
        } else if (r.method == Method::gin && r.gin) {
            out << "Gin(I) = " << r.gin->to_string() << " (draws: " << r.gin_draws << ")\n";
        } else if (r.monomial_ideal) {
            out << "J = " << r.monomial_ideal->to_string() << "\n";
        }
        out << "dim R/I = " << r.dim_quotient << "\n";
        if (!r.c.values.empty()) out << "c = " << join(r.c.values) << "\n";
        out << "reg_" << r.t << "(R/I) = " << r.reg_t_quotient.to_string() << "    reg_" << r.t
            << "(I) = " << r.reg_t_ideal().to_string() << "\n";
        out << "a*_" << r.t << "(R/I) = " << r.astar_t_quotient.to_string() << "\n";
        if (r.reg_quotient) out << "reg(R/I) = " << *r.reg_quotient << "    reg(I) = " << *r.reg_ideal() << "\n";
        if (r.astar_quotient) out << "a*(R/I) = " << *r.astar_quotient << "\n";
        if (doc.include_betti && r.betti) {
            out << "betti (i, j: rank):";
            for (const auto& [key, rank] : r.betti->entries()) {
                out << " (" << key.first << "," << key.second << ": " << rank << ")";
            }
            out << "\n";
        }
        if (r.seed) out << "seed: " << *r.seed << "\n";
    }
    if (doc.methods_agree) out << "\nmethods agree: " << (*doc.methods_agree ? "yes" : "NO") << "\n";
    for (const auto& n : doc.notes) out << "note: " << n << "\n";
    return out.str();
}

/// Human-readable list of profile differences between two reports; empty when they agree.
inline std::vector<std::string> diff_reports(const RegularityReport& a, const RegularityReport& b) {
    std::vector<std::string> diffs;
    const std::string tag = to_string(a.method) + " vs " + to_string(b.method) + ": ";
    for (std::size_t s = 0; s < a.reg_profile.size() && s < b.reg_profile.size(); ++s) {
        if (a.reg_profile[s] != b.reg_profile[s]) {
            diffs.push_back(tag + "reg_" + std::to_string(s) + "(R/I) " + a.reg_profile[s].to_string() +
                            " != " + b.reg_profile[s].to_string());
        }
        if (a.astar_profile[s] != b.astar_profile[s]) {
            diffs.push_back(tag + "a*_" + std::to_string(s) + "(R/I) " + a.astar_profile[s].to_string() +
                            " != " + b.astar_profile[s].to_string());
        }
    }
    if (a.dim_quotient != b.dim_quotient) {
        diffs.push_back(tag + "dim " + std::to_string(a.dim_quotient) + " != " + std::to_string(b.dim_quotient));
    }
    return diffs;
}

}  // namespace detail

/// Runs one `compute` invocation. Writes the report to `out`, diagnostics to `err`.
inline int compute(const ComputeRequest& req, std::ostream& out, std::ostream& err) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    std::map<std::string, double> timings;
    auto lap = [&](const std::string& key, clock::time_point since) {
        timings[key] = std::chrono::duration<double, std::milli>(clock::now() - since).count();
    };

    if (req.method != "c" && req.method != "gin" && req.method != "oracle" && req.method != "all") {
        err << "error: unknown method '" << req.method << "' (expected c, gin, oracle or all)\n";
        return exit_input_error;
    }

    InputDocument input;
    try {
        input = parse_input(req.input_text);
    } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    }
    const std::size_t n = input.ring->nvars();
    if (req.t && *req.t > n) {
        err << "input error: --t must lie in 0.." << n << "\n";
        return exit_input_error;
    }
    const bool char_zero = input.ring->field().is_rationals();
    if (req.method == "gin" && !char_zero) {
        err << "input error: the gin method requires characteristic 0 (field is " << input.ring->field().name()
            << ")\n";
        return exit_input_error;
    }

    ReportDocument doc;
    doc.input = input;
    doc.method = req.method;
    doc.include_betti = req.betti;

    RegularityOptions opt;
    opt.t = req.t;
    opt.use_generic = req.generic;
    opt.seed = req.seed;
    opt.bound = req.bound;

    const IdealPresentation I = input.ideal();
    const bool monomial_input = detail::is_monomial_input(input);

    try {
        if (req.method == "c" || req.method == "all") {
            const auto t0 = clock::now();
            doc.reports.push_back(full_invariants(I, opt));
            lap("c", t0);
        }
        if (req.method == "gin" || (req.method == "all" && char_zero)) {
            const auto t0 = clock::now();
            doc.reports.push_back(invariants_via_gin(I, opt));
            lap("gin", t0);
        } else if (req.method == "all") {
            doc.notes.push_back("gin method skipped: it requires characteristic 0");
        }
        if (req.method == "oracle" || req.method == "all") {
            const auto t0 = clock::now();
            MonomialIdeal J = MonomialIdeal::zero(input.ring);
            if (req.method == "all") {
                // the c-method's in(I), in the coordinates it used; its resolution has the invariants of R/I
                J = *doc.reports.front().monomial_ideal;
                if (!monomial_input || doc.reports.front().coordinates) {
                    doc.notes.push_back("oracle applied to in(I) in the coordinates used by the c-method");
                }
            } else if (monomial_input) {
                std::vector<Monomial> gens;
                for (const auto& f : input.generators) {
                    if (!f.is_zero()) gens.push_back(f.leading_monomial());
                }
                J = MonomialIdeal::minimalize(input.ring, std::move(gens));
            } else {
                J = initial_ideal_of(I);
                doc.notes.push_back("input is not monomial: oracle values describe R/in(I), not R/I");
            }
            try {
                doc.reports.push_back(invariants_via_betti(J, req.t, input.ring->field()));
            } catch (const OracleScopeError& e) {
                if (req.method != "all") throw;
                doc.notes.push_back(std::string("oracle skipped: ") + e.what());
            }
            lap("oracle", t0);
        }
    } catch (const FilterRegularityFailure& e) {
        err << "regularity failure: " << e.what() << " (failing index i = " << e.index()
            << "); rerun with --generic to retry in random coordinates\n";
        return exit_math_failure;
    } catch (const GinFailure& e) {
        err << "gin failure: " << e.what() << "; candidates:";
        for (const auto& c : e.candidates()) err << " " << c.to_string();
        err << "\n";
        return exit_math_failure;
    } catch (const OracleScopeError& e) {
        err << "oracle scope exceeded: " << e.what() << "\n";
        return exit_math_failure;
    } catch (const UnitIdealError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const CharacteristicError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const NonHomogeneousError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input_error;
    }

    if (req.betti && !doc.reports.front().betti) {
        RegularityReport& head = doc.reports.front();
        try {
            head.betti = betti_table(*head.monomial_ideal, input.ring->field());
        } catch (const OracleScopeError& e) {
            doc.notes.push_back(std::string("betti table skipped: ") + e.what());
        }
    }

    std::vector<std::string> diffs;
    if (req.method == "all") {
        for (std::size_t k = 1; k < doc.reports.size(); ++k) {
            auto d = detail::diff_reports(doc.reports.front(), doc.reports[k]);
            diffs.insert(diffs.end(), d.begin(), d.end());
        }
        doc.methods_agree = diffs.empty();
    }
    if (req.timings) {
        lap("total", started);
        doc.timings_ms = timings;
    }

    out << (req.json ? emit_json(doc) : detail::render_text(doc));
    if (!diffs.empty()) {
        err << "methods disagree:\n";
        for (const auto& d : diffs) err << "  " << d << "\n";
        return exit_math_failure;
    }
    return exit_ok;
}

}  // namespace cmreg

#endif

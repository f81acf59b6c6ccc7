#ifndef CMREG_REGULARITY_HPP
#define CMREG_REGULARITY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "betti.hpp"
#include "extended_int.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "linear_change.hpp"
#include "monomial_ideal.hpp"

namespace cmreg {

/// c_0, ..., c_t: top degrees a(J~_i / J_i) of the substitution quotients of J = in(I).
struct CInvariants {
    std::vector<ExtendedInt> values;

    /// Smallest index in [0, upto] holding +inf.
    std::optional<std::size_t> first_infinite(std::size_t upto) const {
        for (std::size_t i = 0; i <= upto && i < values.size(); ++i) {
            if (values[i].is_pos_inf()) return i;
        }
        return std::nullopt;
    }

    friend bool operator==(const CInvariants&, const CInvariants&) = default;
};

/// Some c_i is +inf: x_n, ..., x_{n-i} is not filter-regular in these coordinates.
class FilterRegularityFailure : public std::runtime_error {
public:
    explicit FilterRegularityFailure(std::size_t index)
        : std::runtime_error("filter-regularity fails: c_" + std::to_string(index) + " = +inf"), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class UnitIdealError : public std::invalid_argument {
public:
    UnitIdealError() : std::invalid_argument("the ideal is the whole ring; regularity is undefined") {}
};

class CharacteristicError : public std::domain_error {
public:
    explicit CharacteristicError(const std::string& what)
        : std::domain_error(what + " requires a field of characteristic 0") {}
};

/// No two agreeing Borel-fixed draws within the draw cap.
class GinFailure : public std::runtime_error {
public:
    GinFailure(std::string what, std::vector<MonomialIdeal> candidates)
        : std::runtime_error(std::move(what)), candidates_(std::move(candidates)) {}
    const std::vector<MonomialIdeal>& candidates() const { return candidates_; }

private:
    std::vector<MonomialIdeal> candidates_;
};

/// c_i for i = 0..t of a monomial ideal. For i = n (no variable left to set to 1) the quotient
/// is k / J_n, so c_n = 0 for a proper ideal and -inf for the unit ideal.
inline CInvariants c_invariants_of(const MonomialIdeal& J, std::size_t t) {
    const std::size_t n = J.nvars();
    if (t > n) throw std::out_of_range("c_invariants: t must be at most n");
    CInvariants c;
    for (std::size_t i = 0; i <= t; ++i) {
        if (i == n) {
            c.values.push_back(J.is_unit() ? ExtendedInt::neg_inf() : ExtendedInt(0));
            break;
        }
        const MonomialIdeal Ji = set_vars_zero(J, i);
        c.values.push_back(quotient_top_degree(Ji, set_var_one(Ji)));
    }
    return c;
}

inline MonomialIdeal initial_ideal_of(const IdealPresentation& I) {
    return initial_ideal(I.ring, reduced_groebner_basis(I, MonomialOrder::degrevlex));
}

/// c-invariants of I via J = in(I) under degrevlex.
inline CInvariants c_invariants(const IdealPresentation& I, std::size_t t) {
    return c_invariants_of(initial_ideal_of(I), t);
}

/// Quotient-level values; the ideal-level ones follow from reg_t(I) = reg_t(R/I) + 1 and
/// a*_t(I) = a*_t(R/I).
struct PartialInvariants {
    ExtendedInt reg_t_quotient;
    ExtendedInt astar_t_quotient;
    ExtendedInt reg_t_ideal() const { return reg_t_quotient + 1; }
    ExtendedInt astar_t_ideal() const { return astar_t_quotient; }
    friend bool operator==(const PartialInvariants&, const PartialInvariants&) = default;
};

/// reg_t(R/I) = max c_i, a*_t(R/I) = max (c_i - i), over i = 0..t. Requires every c_i finite.
inline PartialInvariants partial_from_c(const CInvariants& c, std::size_t t) {
    if (t >= c.values.size()) throw std::out_of_range("partial_from_c: not enough c-invariants");
    if (auto bad = c.first_infinite(t)) throw FilterRegularityFailure(*bad);
    PartialInvariants p{ExtendedInt::neg_inf(), ExtendedInt::neg_inf()};
    for (std::size_t i = 0; i <= t; ++i) {
        p.reg_t_quotient = max(p.reg_t_quotient, c.values[i]);
        p.astar_t_quotient = max(p.astar_t_quotient, c.values[i] - static_cast<std::int64_t>(i));
    }
    return p;
}

inline PartialInvariants partial_invariants(const IdealPresentation& I, std::size_t t) {
    return partial_from_c(c_invariants(I, t), t);
}

enum class Method { c_invariants, gin, betti_oracle };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::c_invariants: return "c";
        case Method::gin: return "gin";
        case Method::betti_oracle: return "oracle";
    }
    return "?";
}

struct RegularityOptions {
    /// Requested partial index; defaults to dim R/I.
    std::optional<std::size_t> t;
    /// Retry in random coordinates when filter-regularity fails.
    bool use_generic = false;
    std::uint64_t seed = 1;
    long bound = 1000;
    std::size_t retry_cap = 8;
    std::size_t draw_cap = 8;
};

struct RegularityReport {
    Method method = Method::c_invariants;
    std::size_t nvars = 0;
    std::size_t t = 0;
    /// Empty for the oracle.
    CInvariants c;
    ExtendedInt reg_t_quotient;
    ExtendedInt astar_t_quotient;
    std::optional<std::int64_t> reg_quotient;
    std::optional<std::int64_t> astar_quotient;
    long dim_quotient = 0;
    /// Monomial ideal the numbers were read from: in(I) in the coordinates used, Gin(I), or the oracle input.
    std::optional<MonomialIdeal> monomial_ideal;
    std::optional<MonomialIdeal> gin;
    std::optional<std::uint64_t> seed;
    /// Coordinate change applied to I, when not the identity.
    std::optional<ScalarMatrix> coordinates;
    std::size_t coordinate_attempts = 1;
    std::size_t gin_draws = 0;
    /// reg_t(R/I) and a*_t(R/I) for t = 0..n.
    std::vector<ExtendedInt> reg_profile;
    std::vector<ExtendedInt> astar_profile;
    std::optional<BettiTable> betti;

    ExtendedInt reg_t_ideal() const { return reg_t_quotient + 1; }
    ExtendedInt astar_t_ideal() const { return astar_t_quotient; }
    std::optional<std::int64_t> reg_ideal() const {
        if (!reg_quotient) return std::nullopt;
        return *reg_quotient + 1;
    }
    std::optional<std::int64_t> astar_ideal() const { return astar_quotient; }
};

namespace detail {

inline ScalarMatrix random_invertible(std::mt19937_64& rng, std::size_t n, const Field& k, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    for (;;) {
        ScalarMatrix g(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = Scalar::from_int(k, entry(rng));
        if (g.invertible()) return g;
    }
}

inline IdealPresentation change_coordinates(const IdealPresentation& I, const ScalarMatrix& g) {
    IdealPresentation out{I.ring, {}};
    for (const auto& f : I.generators) out.generators.push_back(apply_linear_change(f, g));
    return out;
}

inline void require_characteristic_zero(const IdealPresentation& I, const std::string& what) {
    if (!I.ring->field().is_rationals()) throw CharacteristicError(what);
}

inline std::size_t clamp_t(const RegularityOptions& opt, long dim, std::size_t n) {
    const std::size_t t = opt.t.value_or(static_cast<std::size_t>(std::max<long>(dim, 0)));
    if (t > n) throw std::out_of_range("t must lie in 0..n");
    return t;
}

}  // namespace detail

/// Full invariants by the substitution method. reg and a* are taken at t = dim R/I, where
/// local cohomology stops. On +inf among c_0..c_dim, retries in random coordinates if allowed.
inline RegularityReport full_invariants(const IdealPresentation& I, const RegularityOptions& opt = {}) {
    I.check_homogeneous();
    const std::size_t n = I.ring->nvars();
    std::mt19937_64 rng(opt.seed);

    std::optional<std::size_t> last_failure;
    for (std::size_t attempt = 0; attempt <= (opt.use_generic ? opt.retry_cap : 0); ++attempt) {
        std::optional<ScalarMatrix> g;
        IdealPresentation work = I;
        if (attempt > 0) {
            g = detail::random_invertible(rng, n, I.ring->field(), opt.bound);
            work = detail::change_coordinates(I, *g);
        }
        const MonomialIdeal J = initial_ideal_of(work);
        if (J.is_unit()) throw UnitIdealError();
        const long dim = krull_dimension(J);
        const std::size_t t = detail::clamp_t(opt, dim, n);
        const auto d = static_cast<std::size_t>(dim);
        const CInvariants c = c_invariants_of(J, std::max(t, d));

        if (auto bad = c.first_infinite(d)) {
            last_failure = bad;
            if (!opt.use_generic) throw FilterRegularityFailure(*bad);
            continue;
        }

        RegularityReport rep;
        rep.method = Method::c_invariants;
        rep.nvars = n;
        rep.t = t;
        rep.c = c;
        rep.dim_quotient = dim;
        rep.monomial_ideal = J;
        rep.coordinates = g;
        rep.coordinate_attempts = attempt + 1;
        if (opt.use_generic) rep.seed = opt.seed;

        // beyond dim the maxima no longer change
        for (std::size_t s = 0; s <= n; ++s) {
            const PartialInvariants p = partial_from_c(c, std::min(s, d));
            rep.reg_profile.push_back(p.reg_t_quotient);
            rep.astar_profile.push_back(p.astar_t_quotient);
        }
        rep.reg_t_quotient = rep.reg_profile[t];
        rep.astar_t_quotient = rep.astar_profile[t];
        rep.reg_quotient = rep.reg_profile[n].value();
        rep.astar_quotient = rep.astar_profile[n].value();
        return rep;
    }
    throw FilterRegularityFailure(last_failure.value_or(0));
}

struct GinResult {
    MonomialIdeal gin;
    std::size_t draws_agreed = 0;
    std::size_t draws_total = 0;
    bool borel_certified = false;
    std::uint64_t matrices_seed = 0;
};

/// Monte-Carlo Gin under degrevlex: in(g I) for random integer g with entries in [-bound, bound],
/// accepted once two draws agree and the result is Borel-fixed.
inline GinResult generic_initial_ideal(const IdealPresentation& I, std::uint64_t seed, long bound = 1000,
                                       std::size_t draw_cap = 8) {
    detail::require_characteristic_zero(I, "the generic initial ideal");
    I.check_homogeneous();
    std::mt19937_64 rng(seed);
    std::vector<MonomialIdeal> seen;
    for (std::size_t draw = 1; draw <= draw_cap; ++draw) {
        const ScalarMatrix g = detail::random_invertible(rng, I.ring->nvars(), I.ring->field(), bound);
        MonomialIdeal J = initial_ideal_of(detail::change_coordinates(I, g));
        const auto agreeing = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), J));
        if (agreeing > 0 && is_borel_fixed(J)) {
            return GinResult{std::move(J), agreeing + 1, draw, true, seed};
        }
        seen.push_back(std::move(J));
    }
    throw GinFailure("no two agreeing Borel-fixed draws in " + std::to_string(draw_cap) + " attempts",
                     std::move(seen));
}

/// reg_t(R/I) and a*_t(R/I) read off Min(Gin):
///   reg_t(I) = max{ deg x^A : m(x^A) >= n - t },
///   a*_t(I)  = max{ deg x^A + m(x^A) : m(x^A) >= n - t } - n - 1.
/// For the zero ideal at t = n this is R itself: reg 0, a* = -n.
inline PartialInvariants partial_from_gin(const MonomialIdeal& gin, std::size_t t) {
    const std::size_t n = gin.nvars();
    const auto nn = static_cast<std::int64_t>(n);
    ExtendedInt top_deg = ExtendedInt::neg_inf();
    ExtendedInt top_sum = ExtendedInt::neg_inf();
    for (const auto& g : gin.generators()) {
        const std::size_t m = m_index(g);
        if (m + t < n) continue;
        top_deg = max(top_deg, ExtendedInt(g.degree()));
        top_sum = max(top_sum, ExtendedInt(static_cast<std::int64_t>(g.degree() + m)));
    }
    PartialInvariants p{top_deg - 1, top_sum - nn - 1};
    if (t == n && !gin.is_unit()) {
        p.reg_t_quotient = max(p.reg_t_quotient, ExtendedInt(0));
        p.astar_t_quotient = max(p.astar_t_quotient, ExtendedInt(-nn));
    }
    return p;
}

/// c_i = max{ deg x^A : x^A in Min(J), m(x^A) = n - i } - 1 for a Borel-fixed J.
inline CInvariants c_invariants_of_borel(const MonomialIdeal& J, std::size_t t) {
    const std::size_t n = J.nvars();
    if (t > n) throw std::out_of_range("c_invariants: t must be at most n");
    CInvariants c;
    for (std::size_t i = 0; i <= t; ++i) {
        if (i == n) {
            c.values.push_back(J.is_unit() ? ExtendedInt::neg_inf() : ExtendedInt(0));
            break;
        }
        ExtendedInt top = ExtendedInt::neg_inf();
        for (const auto& g : J.generators()) {
            if (m_index(g) == n - i) top = max(top, ExtendedInt(g.degree()));
        }
        c.values.push_back(top - 1);
    }
    return c;
}

inline RegularityReport invariants_via_gin(const IdealPresentation& I, const RegularityOptions& opt = {}) {
    const GinResult gr = generic_initial_ideal(I, opt.seed, opt.bound, opt.draw_cap);
    if (gr.gin.is_unit()) throw UnitIdealError();
    const std::size_t n = I.ring->nvars();
    const long dim = krull_dimension(gr.gin);

    RegularityReport rep;
    rep.method = Method::gin;
    rep.nvars = n;
    rep.t = detail::clamp_t(opt, dim, n);
    rep.c = c_invariants_of_borel(gr.gin, rep.t);
    rep.dim_quotient = dim;
    rep.monomial_ideal = gr.gin;
    rep.gin = gr.gin;
    rep.seed = opt.seed;
    rep.gin_draws = gr.draws_total;
    for (std::size_t s = 0; s <= n; ++s) {
        const PartialInvariants p = partial_from_gin(gr.gin, s);
        rep.reg_profile.push_back(p.reg_t_quotient);
        rep.astar_profile.push_back(p.astar_t_quotient);
    }
    rep.reg_t_quotient = rep.reg_profile[rep.t];
    rep.astar_t_quotient = rep.astar_profile[rep.t];
    rep.reg_quotient = rep.reg_profile[n].value();
    rep.astar_quotient = rep.astar_profile[n].value();
    return rep;
}

/// Resolution read-offs for a monomial ideal J (values describe S/J).
inline RegularityReport invariants_via_betti(const MonomialIdeal& J, std::optional<std::size_t> t,
                                             const Field& k = Field::rationals()) {
    if (J.is_unit()) throw UnitIdealError();
    const std::size_t n = J.nvars();
    BettiTable table = betti_table(J, k);
    const long dim = krull_dimension(J);

    RegularityReport rep;
    rep.method = Method::betti_oracle;
    rep.nvars = n;
    rep.t = t.value_or(static_cast<std::size_t>(dim));
    if (rep.t > n) throw std::out_of_range("t must lie in 0..n");
    rep.dim_quotient = dim;
    rep.monomial_ideal = J;
    for (std::size_t s = 0; s <= n; ++s) {
        const BettiInvariants b = invariants_from_betti(table, n, s);
        rep.reg_profile.push_back(b.reg_t);
        rep.astar_profile.push_back(b.astar_t);
    }
    const BettiInvariants full = invariants_from_betti(table, n, n);
    rep.reg_t_quotient = rep.reg_profile[rep.t];
    rep.astar_t_quotient = rep.astar_profile[rep.t];
    rep.reg_quotient = full.reg.value();
    rep.astar_quotient = full.astar.value();
    rep.betti = std::move(table);
    return rep;
}

/// Convenience: a monomial ideal as an ideal presentation over its ring.
inline IdealPresentation as_presentation(const MonomialIdeal& J) {
    IdealPresentation I{J.ring(), {}};
    for (const auto& g : J.generators()) I.generators.push_back(Polynomial::monomial(J.ring(), g));
    return I;
}

}  // namespace cmreg

#endif

#ifndef CMREG_GROEBNER_HPP
#define CMREG_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace cmreg {

/// Raised when a generator is not homogeneous; carries two distinct term degrees.
class NonHomogeneousError : public std::invalid_argument {
public:
    NonHomogeneousError(std::size_t index, std::uint32_t d1, std::uint32_t d2)
        : std::invalid_argument("generator " + std::to_string(index + 1) + " is not homogeneous (terms of degree " +
                                std::to_string(d1) + " and " + std::to_string(d2) + ")"),
          index_(index),
          d1_(d1),
          d2_(d2) {}

    std::size_t index() const { return index_; }
    std::uint32_t first_degree() const { return d1_; }
    std::uint32_t second_degree() const { return d2_; }

private:
    std::size_t index_;
    std::uint32_t d1_;
    std::uint32_t d2_;
};

/// A homogeneous ideal given by a (possibly redundant) list of generators.
struct IdealPresentation {
    RingPtr ring;
    std::vector<Polynomial> generators;

    /// Throws NonHomogeneousError on the first offending generator.
    void check_homogeneous() const {
        for (std::size_t k = 0; k < generators.size(); ++k) {
            const auto& f = generators[k];
            require_same_ring(ring, f.ring());
            for (const auto& t : f.terms()) {
                if (t.mono.degree() != f.terms().front().mono.degree()) {
                    throw NonHomogeneousError(k, f.terms().front().mono.degree(), t.mono.degree());
                }
            }
        }
    }
};

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::degrevlex;
    /// Monic, sorted by descending leading monomial.
    std::vector<Polynomial> elements;

    friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

namespace detail {

inline const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& basis) {
    for (const Polynomial* g : basis) {
        if (divides(g->leading_monomial(), m)) return g;
    }
    return nullptr;
}

inline Polynomial normal_form_impl(const Polynomial& f, const std::vector<const Polynomial*>& basis) {
    Polynomial rest = f;
    std::vector<Term> done;
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        const Polynomial* g = find_reducer(lt.mono, basis);
        if (g == nullptr) {
            done.push_back(lt);
            rest = rest.tail();
            continue;
        }
        const Scalar c = -(lt.coeff / g->leading_coefficient());
        const Monomial m = quotient(lt.mono, g->leading_monomial());
        rest = rest.add_scaled(*g, &c, &m);
    }
    return Polynomial::from_terms(f.ring(), std::move(done), f.order());
}

}  // namespace detail

/// Remainder of f on division by `basis`: the order-largest reducible term is reduced first,
/// basis elements are tried in list order. No term of the result is divisible by a leading
/// monomial of the basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::vector<const Polynomial*> ptrs;
    for (const auto& g : basis) {
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero basis element");
        if (g.order() != f.order()) throw std::invalid_argument("normal_form: monomial order mismatch");
        ptrs.push_back(&g);
    }
    return detail::normal_form_impl(f, ptrs);
}

/// (L / lt(f)) f - (L / lt(g)) g with L = lcm of the leading monomials.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of a zero polynomial");
    const Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    const Monomial mf = quotient(L, f.leading_monomial());
    const Monomial mg = quotient(L, g.leading_monomial());
    const Scalar cf = f.leading_coefficient().inverse();
    const Scalar cg = -g.leading_coefficient().inverse();
    return f.times_term(cf, mf).add_scaled(g, &cg, &mg);
}

namespace detail {

/// Buchberger completion with the normal selection strategy and both Buchberger criteria.
/// Input: nonzero polynomials in one order. Output: a (non-reduced) Groebner basis.
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> gens) {
    std::vector<Polynomial> G;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add_element = [&](Polynomial h) {
        const std::size_t k = G.size();
        G.push_back(h.monic());
        for (std::size_t i = 0; i < k; ++i) pending.emplace(i, k);
    };

    auto chain_criterion = [&](std::size_t i, std::size_t j, const Monomial& L) {
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == i || k == j) continue;
            if (!divides(G[k].leading_monomial(), L)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (pending.count(key(i, k)) == 0 && pending.count(key(j, k)) == 0) return true;
        }
        return false;
    };

    std::vector<const Polynomial*> ptrs;
    auto refresh = [&] {
        ptrs.clear();
        for (const auto& g : G) ptrs.push_back(&g);
    };

    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), a.order()) < 0;
    });
    for (auto& f : gens) {
        refresh();
        Polynomial r = normal_form_impl(f, ptrs);
        if (!r.is_zero()) add_element(std::move(r));
    }

    while (!pending.empty()) {
        // normal strategy: smallest lcm first, ties by order then index
        auto best = pending.begin();
        Monomial best_lcm = lcm(G[best->first].leading_monomial(), G[best->second].leading_monomial());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial L = lcm(G[it->first].leading_monomial(), G[it->second].leading_monomial());
            if (compare(L, best_lcm, G.front().order()) < 0) {
                best = it;
                best_lcm = std::move(L);
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        if (coprime(G[i].leading_monomial(), G[j].leading_monomial())) continue;
        if (chain_criterion(i, j, best_lcm)) continue;

        refresh();
        Polynomial r = normal_form_impl(s_polynomial(G[i], G[j]), ptrs);
        if (!r.is_zero()) add_element(std::move(r));
    }
    return G;
}

/// Minimal + fully inter-reduced, monic, sorted by descending leading monomial.
inline std::vector<Polynomial> inter_reduce(const std::vector<Polynomial>& G) {
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < G.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < G.size() && !drop; ++b) {
            if (a == b) continue;
            const auto& la = G[a].leading_monomial();
            const auto& lb = G[b].leading_monomial();
            // equal leads: keep the first occurrence
            if (divides(lb, la) && (la != lb || b < a)) drop = true;
        }
        if (!drop) minimal.push_back(G[a]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<const Polynomial*> others;
        for (std::size_t b = 0; b < minimal.size(); ++b) {
            if (a != b) others.push_back(&minimal[b]);
        }
        reduced.push_back(normal_form_impl(minimal[a], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), a.order()) > 0;
    });
    return reduced;
}

}  // namespace detail

/// The unique reduced monic Groebner basis of a homogeneous ideal.
inline GroebnerBasis reduced_groebner_basis(const IdealPresentation& I, MonomialOrder ord = MonomialOrder::degrevlex) {
    I.check_homogeneous();
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators) {
        if (!f.is_zero()) gens.push_back(f.with_order(ord));
    }
    GroebnerBasis gb;
    gb.order = ord;
    if (gens.empty()) return gb;
    gb.elements = detail::inter_reduce(detail::buchberger(std::move(gens)));
    return gb;
}

/// Monomial ideal of leading monomials; for a reduced basis these are the minimal generators.
inline MonomialIdeal initial_ideal(const RingPtr& ring, const GroebnerBasis& gb) {
    std::vector<Monomial> leads;
    for (const auto& g : gb.elements) leads.push_back(g.leading_monomial());
    return MonomialIdeal::minimalize(ring, std::move(leads));
}

}  // namespace cmreg

#endif

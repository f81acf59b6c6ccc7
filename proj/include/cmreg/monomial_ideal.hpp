#ifndef CMREG_MONOMIAL_IDEAL_HPP
#define CMREG_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "ring.hpp"

namespace cmreg {

/// Monomial ideal held by its minimal generators, sorted descending in degrevlex.
/// The unit ideal is {1}; the zero ideal has no generators.
class MonomialIdeal {
public:
    /// Divisibility-minimal generating set of (gens).
    static MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
        for (const auto& g : gens) {
            if (g.nvars() != ring->nvars()) throw std::invalid_argument("generator has the wrong number of variables");
        }
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a < b;
        });
        std::vector<Monomial> kept;
        for (auto& g : gens) {
            bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
            if (!redundant) kept.push_back(std::move(g));
        }
        std::sort(kept.begin(), kept.end(), DescendingIn{MonomialOrder::degrevlex});
        return MonomialIdeal(std::move(ring), std::move(kept));
    }

    static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

    static MonomialIdeal unit(RingPtr ring) {
        Monomial one(ring->nvars());
        return MonomialIdeal(std::move(ring), {std::move(one)});
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_->nvars(); }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
    }

    /// Every generator of `other` lies in this ideal.
    bool contains(const MonomialIdeal& other) const {
        return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
    }

    /// Largest generator degree; -1 for the zero ideal.
    long max_generator_degree() const {
        long d = -1;
        for (const auto& g : gens_) d = std::max<long>(d, g.degree());
        return d;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars() == b.nvars() && a.gens_ == b.gens_;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i != 0) out += ", ";
            out += cmreg::to_string(gens_[i], ring_->names());
        }
        return out + ")";
    }

private:
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {}

    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// J_i: substitute x_n = ... = x_{n-i+1} = 0. The result lives in k[x_1, ..., x_{n-i}].
inline MonomialIdeal set_vars_zero(const MonomialIdeal& J, std::size_t i) {
    const std::size_t n = J.nvars();
    if (i >= n) throw std::out_of_range("set_vars_zero: need 0 <= i <= n-1");
    if (i == 0) return J;
    std::vector<Monomial> kept;
    for (const auto& g : J.generators()) {
        bool hit = false;
        for (std::size_t v = n - i; v < n; ++v) hit = hit || g[v] != 0;
        if (hit) continue;
        kept.emplace_back(std::vector<std::uint32_t>(g.exponents().begin(), g.exponents().end() - i));
    }
    return MonomialIdeal::minimalize(J.ring()->truncated(n - i), std::move(kept));
}

/// J~: substitute 1 for the last variable of the ring, same ring. May give the unit ideal.
inline MonomialIdeal set_var_one(const MonomialIdeal& J) {
    const std::size_t last = J.nvars() - 1;
    std::vector<Monomial> gens = J.generators();
    for (auto& g : gens) g.set(last, 0);
    return MonomialIdeal::minimalize(J.ring(), std::move(gens));
}

/// Characteristic-zero Borel test: for every minimal generator x^A, every j with a_j > 0 and
/// every i < j, x^A * x_i / x_j lies in J. Closure under these single exchanges implies the
/// exchanges by any q <= a_j.
inline bool is_borel_fixed(const MonomialIdeal& J) {
    if (!J.ring()->field().is_rationals()) {
        throw std::domain_error("the Borel-fixed criterion used here needs characteristic 0");
    }
    for (const auto& g : J.generators()) {
        for (std::size_t j = 1; j < g.nvars(); ++j) {
            if (g[j] == 0) continue;
            for (std::size_t i = 0; i < j; ++i) {
                Monomial moved = g;
                moved.set(j, g[j] - 1);
                moved.set(i, g[i] + 1);
                if (!J.contains(moved)) return false;
            }
        }
    }
    return true;
}

}  // namespace cmreg

#endif

#ifndef CMREG_POLYNOMIAL_HPP
#define CMREG_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "ring.hpp"
#include "scalar.hpp"

namespace cmreg {

struct Term {
    Scalar coeff;
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms in strictly descending order under `order()`.
/// The zero polynomial has no terms.
class Polynomial {
public:
    Polynomial(RingPtr ring, MonomialOrder ord = MonomialOrder::degrevlex) : ring_(std::move(ring)), ord_(ord) {}

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder ord = MonomialOrder::degrevlex) {
        Polynomial p(std::move(ring), ord);
        for (const auto& t : terms) {
            if (t.mono.nvars() != p.ring_->nvars()) throw std::invalid_argument("monomial dimension mismatch");
        }
        std::sort(terms.begin(), terms.end(),
                  [ord](const Term& a, const Term& b) { return compare(a.mono, b.mono, ord) > 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            } else if (!t.coeff.is_zero()) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static Polynomial monomial(RingPtr ring, Monomial m, MonomialOrder ord = MonomialOrder::degrevlex) {
        Scalar one = Scalar::one(ring->field());
        return term(std::move(ring), std::move(one), std::move(m), ord);
    }

    static Polynomial term(RingPtr ring, Scalar c, Monomial m, MonomialOrder ord = MonomialOrder::degrevlex) {
        Polynomial p(std::move(ring), ord);
        if (m.nvars() != p.ring_->nvars()) throw std::invalid_argument("monomial dimension mismatch");
        if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    static Polynomial constant(RingPtr ring, Scalar c, MonomialOrder ord = MonomialOrder::degrevlex) {
        Monomial one(ring->nvars());
        return term(std::move(ring), std::move(c), std::move(one), ord);
    }

    /// x_i (0-based).
    static Polynomial variable(RingPtr ring, std::size_t i, MonomialOrder ord = MonomialOrder::degrevlex) {
        Monomial m = Monomial::variable(ring->nvars(), i);
        return monomial(std::move(ring), std::move(m), ord);
    }

    const RingPtr& ring() const { return ring_; }
    MonomialOrder order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const {
        if (is_zero()) throw std::domain_error("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coefficient() const { return leading_term().coeff; }

    /// Everything but the leading term.
    Polynomial tail() const {
        Polynomial r(ring_, ord_);
        if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    /// Same polynomial, terms re-sorted for another order.
    Polynomial with_order(MonomialOrder ord) const {
        if (ord == ord_) return *this;
        return from_terms(ring_, terms_, ord);
    }

    /// Common degree of all terms if homogeneous. The zero polynomial is homogeneous of every
    /// degree; it reports degree 0.
    std::optional<std::uint32_t> homogeneous_degree() const {
        if (is_zero()) return 0u;
        const auto d = terms_.front().mono.degree();
        for (const auto& t : terms_) {
            if (t.mono.degree() != d) return std::nullopt;
        }
        return d;
    }
    bool is_homogeneous() const { return homogeneous_degree().has_value(); }

    /// Total degree; -1 for zero.
    long degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
        return d;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.add_scaled(g, nullptr, nullptr); }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
        Scalar minus_one = -Scalar::one(f.ring_->field());
        return f.add_scaled(g, &minus_one, nullptr);
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_compatible(g);
        Polynomial acc(f.ring_, f.ord_);
        for (const auto& t : g.terms_) acc = acc.add_scaled(f, &t.coeff, &t.mono);
        return acc;
    }

    Polynomial scaled(const Scalar& c) const {
        Polynomial r(ring_, ord_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono});
        return r;
    }

    /// c * m * this.
    Polynomial times_term(const Scalar& c, const Monomial& m) const {
        Polynomial r(ring_, ord_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
        return r;
    }

    /// Divides by the leading coefficient.
    Polynomial monic() const {
        if (is_zero() || leading_coefficient().is_one()) return *this;
        return scaled(leading_coefficient().inverse());
    }

    /// this + c * m * g, with c = 1 and m = 1 when null.
    Polynomial add_scaled(const Polynomial& g, const Scalar* c, const Monomial* m) const {
        check_compatible(g);
        Polynomial r(ring_, ord_);
        r.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        auto g_term = [&](std::size_t k) {
            Term t = g.terms_[k];
            if (c != nullptr) t.coeff *= *c;
            if (m != nullptr) t.mono = t.mono * *m;
            return t;
        };
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
                continue;
            }
            Term gt = g_term(j);
            if (i == terms_.size()) {
                if (!gt.coeff.is_zero()) r.terms_.push_back(std::move(gt));
                ++j;
                continue;
            }
            const auto cmp = compare(terms_[i].mono, gt.mono, ord_);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                if (!gt.coeff.is_zero()) r.terms_.push_back(std::move(gt));
                ++j;
            } else {
                Scalar s = terms_[i].coeff + gt.coeff;
                if (!s.is_zero()) r.terms_.push_back({std::move(s), std::move(gt.mono)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return same_ring(f.ring_, g.ring_) && f.ord_ == g.ord_ && f.terms_ == g.terms_;
    }

    /// Rendering in the input grammar, e.g. "x1*x2 - 3/2*x3^2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            const auto& t = terms_[k];
            std::string c = t.coeff.to_string();
            bool negative = t.coeff.is_rational() && sgn(t.coeff.rational()) < 0;
            if (negative) c.erase(0, 1);
            if (k == 0) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            if (t.mono.is_one()) {
                out += c;
            } else {
                if (c != "1") out += c + '*';
                out += cmreg::to_string(t.mono, ring_->names());
            }
        }
        return out;
    }

private:
    void check_compatible(const Polynomial& g) const {
        require_same_ring(ring_, g.ring_);
        if (ord_ != g.ord_) throw std::invalid_argument("monomial order mismatch");
    }

    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<Term> terms_;
};

}  // namespace cmreg

#endif

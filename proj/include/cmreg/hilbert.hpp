#ifndef CMREG_HILBERT_HPP
#define CMREG_HILBERT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "extended_int.hpp"
#include "monomial_ideal.hpp"

namespace cmreg {

/// Integer polynomial in t, used as the numerator N(t) of HS(S/J) = N(t) / (1 - t)^n.
class HilbertNumerator {
public:
    HilbertNumerator() = default;
    explicit HilbertNumerator(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    static HilbertNumerator one() { return HilbertNumerator({1}); }

    /// 1 - t^d.
    static HilbertNumerator one_minus_t_pow(std::size_t d) {
        std::vector<std::int64_t> c(d + 1, 0);
        c[0] += 1;
        c[d] -= 1;
        return HilbertNumerator(std::move(c));
    }

    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for zero.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::int64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

    std::int64_t value_at_one() const {
        std::int64_t s = 0;
        for (auto v : c_) s = add(s, v);
        return s;
    }

    friend HilbertNumerator operator+(const HilbertNumerator& a, const HilbertNumerator& b) {
        std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = add(a[k], b[k]);
        return HilbertNumerator(std::move(c));
    }

    friend HilbertNumerator operator-(const HilbertNumerator& a, const HilbertNumerator& b) {
        std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = add(a[k], -b[k]);
        return HilbertNumerator(std::move(c));
    }

    friend HilbertNumerator operator*(const HilbertNumerator& a, const HilbertNumerator& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = add(c[i + j], mul(a.c_[i], b.c_[j]));
        return HilbertNumerator(std::move(c));
    }

    /// t^k * this.
    HilbertNumerator shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<std::int64_t> c(k, 0);
        c.insert(c.end(), c_.begin(), c_.end());
        return HilbertNumerator(std::move(c));
    }

    /// Exact division by (1 - t) into `quotient`; false when (1 - t) does not divide.
    bool divide_by_one_minus_t(HilbertNumerator& quotient) const {
        if (is_zero()) {
            quotient = {};
            return true;
        }
        if (value_at_one() != 0) return false;
        std::vector<std::int64_t> q(c_.size() - 1, 0);
        std::int64_t run = 0;
        for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
            run = add(run, c_[k]);
            q[k] = run;
        }
        quotient = HilbertNumerator(std::move(q));
        return true;
    }

    /// Largest k with (1 - t)^k dividing this (nonzero).
    std::size_t one_minus_t_multiplicity() const {
        if (is_zero()) throw std::domain_error("multiplicity of the zero numerator");
        std::size_t k = 0;
        HilbertNumerator cur = *this;
        HilbertNumerator next;
        while (cur.divide_by_one_minus_t(next)) {
            cur = next;
            ++k;
        }
        return k;
    }

    /// Coefficients 0..max_degree of this / (1 - t)^n.
    std::vector<std::int64_t> series(std::size_t n, std::size_t max_degree) const {
        std::vector<std::int64_t> s(max_degree + 1, 0);
        for (std::size_t k = 0; k <= max_degree; ++k) s[k] = (*this)[k];
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 1; k <= max_degree; ++k) s[k] = add(s[k], s[k - 1]);
        }
        return s;
    }

    friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            std::int64_t a = c_[k];
            if (!out.empty()) out += a < 0 ? " - " : " + ";
            else if (a < 0) out += "-";
            a = a < 0 ? -a : a;
            if (k == 0 || a != 1) out += std::to_string(a);
            if (k >= 1) out += a != 1 ? "*t" : "t";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert numerator coefficient overflow");
        return r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert numerator coefficient overflow");
        return r;
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::int64_t> c_;
};

/// Chooses the pivot variable from per-variable generator counts; must return an index whose
/// count is at least 2.
using PivotRule = std::function<std::size_t(const std::vector<std::size_t>& counts)>;

/// Most frequent variable, lowest index on ties.
inline std::size_t most_frequent_pivot(const std::vector<std::size_t>& counts) {
    return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

namespace detail {

inline std::vector<Monomial> minimal_gens(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        if (std::none_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); })) {
            kept.push_back(std::move(g));
        }
    }
    return kept;
}

class NumeratorRecursion {
public:
    explicit NumeratorRecursion(const PivotRule& rule) : rule_(rule) {}

    // gens is minimal and sorted by minimal_gens
    HilbertNumerator run(const std::vector<Monomial>& gens) {
        if (gens.empty()) return HilbertNumerator::one();
        if (gens.front().is_one()) return {};
        if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

        const std::size_t n = gens.front().nvars();
        std::vector<std::size_t> counts(n, 0);
        for (const auto& g : gens)
            for (std::size_t v = 0; v < n; ++v) counts[v] += g[v] != 0 ? 1 : 0;

        HilbertNumerator result;
        if (*std::max_element(counts.begin(), counts.end()) <= 1) {
            // pairwise coprime generators form a regular sequence
            result = HilbertNumerator::one();
            for (const auto& g : gens) result = result * HilbertNumerator::one_minus_t_pow(g.degree());
        } else {
            const std::size_t p = rule_(counts);
            if (p >= n || counts[p] < 2) throw std::logic_error("pivot rule returned an invalid variable");
            const Monomial pivot = Monomial::variable(n, p);

            std::vector<Monomial> plus{pivot};
            std::vector<Monomial> colon;
            for (const auto& g : gens) {
                if (g[p] == 0) {
                    plus.push_back(g);
                    colon.push_back(g);
                } else {
                    Monomial h = g;
                    h.set(p, g[p] - 1);
                    colon.push_back(std::move(h));
                }
            }
            // N(J) = N(J + (p)) + t * N(J : p)
            result = run(minimal_gens(std::move(plus))) + run(minimal_gens(std::move(colon))).shifted(1);
        }
        memo_.emplace(gens, result);
        return result;
    }

private:
    const PivotRule& rule_;
    std::map<std::vector<Monomial>, HilbertNumerator> memo_;
};

}  // namespace detail

/// N(t) with HS(S/J) = N(t) / (1 - t)^n, by pivot recursion with a per-call memo.
inline HilbertNumerator hilbert_numerator(const MonomialIdeal& J, const PivotRule& rule = most_frequent_pivot) {
    detail::NumeratorRecursion rec(rule);
    return rec.run(detail::minimal_gens(J.generators()));
}

/// a(J_sup / J_sub): top degree of the quotient module; -inf when zero, +inf when not of finite length.
inline ExtendedInt quotient_top_degree(const MonomialIdeal& J_sub, const MonomialIdeal& J_sup) {
    if (J_sub.nvars() != J_sup.nvars()) throw std::invalid_argument("quotient_top_degree: ring mismatch");
    if (!J_sup.contains(J_sub)) throw std::invalid_argument("quotient_top_degree: J_sub is not contained in J_sup");
    HilbertNumerator diff = hilbert_numerator(J_sub) - hilbert_numerator(J_sup);
    if (diff.is_zero()) return ExtendedInt::neg_inf();
    HilbertNumerator q;
    for (std::size_t k = 0; k < J_sub.nvars(); ++k) {
        if (!diff.divide_by_one_minus_t(q)) return ExtendedInt::pos_inf();
        diff = q;
    }
    for (auto c : diff.coeffs()) {
        if (c < 0) throw std::logic_error("quotient Hilbert series has a negative coefficient");
    }
    return ExtendedInt(diff.degree());
}

/// dim S/J; -1 for the unit ideal (the zero ring).
inline long krull_dimension(const MonomialIdeal& J) {
    if (J.is_unit()) return -1;
    const HilbertNumerator N = hilbert_numerator(J);
    return static_cast<long>(J.nvars()) - static_cast<long>(N.one_minus_t_multiplicity());
}

/// Hilbert polynomial of S/J evaluated at m: with d = dim S/J and N = (1-t)^{n-d} Q,
/// p(m) = sum_k Q_k * binom(m - k + d - 1, d - 1), binomials read as polynomials in m.
inline mpz_class hilbert_polynomial_value(const HilbertNumerator& N, std::size_t n, long m) {
    if (N.is_zero()) return 0;
    const std::size_t mult = N.one_minus_t_multiplicity();
    const long d = static_cast<long>(n) - static_cast<long>(mult);
    if (d <= 0) return 0;
    HilbertNumerator Q = N;
    HilbertNumerator tmp;
    for (std::size_t r = 0; r < mult; ++r) {
        Q.divide_by_one_minus_t(tmp);
        Q = tmp;
    }
    mpz_class fact = 1;
    for (long j = 2; j <= d - 1; ++j) fact *= j;
    mpz_class total = 0;
    for (std::size_t k = 0; k < Q.coeffs().size(); ++k) {
        // binom(x, d-1) = x (x-1) ... (x-d+2) / (d-1)! with x = m - k + d - 1
        const long x = m - static_cast<long>(k) + d - 1;
        mpz_class prod = 1;
        for (long j = 0; j < d - 1; ++j) prod *= (x - j);
        total += mpz_class(static_cast<long>(Q[k])) * (prod / fact);
    }
    return total;
}

}  // namespace cmreg

#endif

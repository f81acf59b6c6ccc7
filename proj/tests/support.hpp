// Test-only helpers: brute-force oracles that share no code with the library's
// algorithms, and seeded generators for random fixtures.
#ifndef CMREG_TESTS_SUPPORT_HPP
#define CMREG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmreg/cmreg.hpp"

namespace cmreg::testing {

inline RingPtr ring(std::size_t n, Field k = Field::rationals()) { return RingContext::standard(n, k); }

inline Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

inline MonomialIdeal ideal(const RingPtr& r, std::vector<std::vector<std::uint32_t>> gens) {
    std::vector<Monomial> ms;
    for (auto& e : gens) ms.emplace_back(std::move(e));
    return MonomialIdeal::minimalize(r, std::move(ms));
}

inline Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

inline IdealPresentation presentation(const RingPtr& r, const std::vector<std::string>& gens) {
    IdealPresentation I{r, {}};
    for (const auto& g : gens) I.generators.push_back(poly(r, g));
    return I;
}

/// The worked example: a curve in P^3 with in(I) = (x1x2, x2^3, x1^2x3, x1^3).
inline IdealPresentation golden_ideal() {
    return presentation(ring(4), {"x1*x2 - x3*x4", "x1*x3^2 - x2^3", "x1^2*x3 - x2^2*x4", "x1^3 - x2*x4^2"});
}

inline const char* golden_input_text() {
    return "ring: x1 x2 x3 x4\n"
           "field: QQ\n"
           "ideal:\n"
           "x1*x2 - x3*x4\n"
           "x1*x3^2 - x2^3\n"
           "x1^2*x3 - x2^2*x4\n"
           "x1^3 - x2*x4^2\n";
}

// ---------------------------------------------------------------- enumeration

/// All exponent vectors of total degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == n) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t k = left + 1; k-- > 0;) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n == 0) return out;
    rec(0, d);
    return out;
}

inline bool divides_naive(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline bool in_ideal_naive(const std::vector<Monomial>& gens, const Monomial& m) {
    for (const auto& g : gens) {
        if (divides_naive(g, m)) return true;
    }
    return false;
}

/// Hilbert function of S/J in degrees 0..D by counting standard monomials.
inline std::vector<long> standard_monomial_counts(const MonomialIdeal& J, std::uint32_t D) {
    std::vector<long> h;
    for (std::uint32_t d = 0; d <= D; ++d) {
        long count = 0;
        for (const auto& m : monomials_of_degree(J.nvars(), d)) count += in_ideal_naive(J.generators(), m) ? 0 : 1;
        h.push_back(count);
    }
    return h;
}

/// Coefficients of N(t) / (1 - t)^n up to degree D, by convolution with binomials.
inline std::vector<mpz_class> series_of(const HilbertNumerator& N, std::size_t n, std::uint32_t D) {
    std::vector<mpz_class> out(D + 1, 0);
    for (std::uint32_t d = 0; d <= D; ++d) {
        for (long k = 0; k <= N.degree() && k <= static_cast<long>(d); ++k) {
            mpz_class binom;
            // coefficient of t^(d-k) in 1/(1-t)^n is C(d-k+n-1, n-1)
            mpz_bin_uiui(binom.get_mpz_t(), d - k + n - 1, n - 1);
            out[d] += N[static_cast<std::size_t>(k)] * binom;
        }
    }
    return out;
}

/// max{deg m : m in J_sup \ J_sub, deg m <= D}; -inf when no such monomial exists.
inline ExtendedInt quotient_top_degree_naive(const MonomialIdeal& sub, const MonomialIdeal& sup, std::uint32_t D) {
    ExtendedInt best = ExtendedInt::neg_inf();
    for (std::uint32_t d = 0; d <= D; ++d) {
        for (const auto& m : monomials_of_degree(sub.nvars(), d)) {
            if (in_ideal_naive(sup.generators(), m) && !in_ideal_naive(sub.generators(), m)) best = ExtendedInt(d);
        }
    }
    return best;
}

/// Borel-fixedness with every power: x^A x_i^q / x_j^q in J for all i < j and 1 <= q <= A_j.
inline bool borel_fixed_exhaustive(const MonomialIdeal& J) {
    for (const auto& g : J.generators()) {
        for (std::size_t j = 0; j < g.nvars(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                for (std::uint32_t q = 1; q <= g[j]; ++q) {
                    auto e = g.exponents();
                    e[j] -= q;
                    e[i] += q;
                    if (!in_ideal_naive(J.generators(), Monomial(e))) return false;
                }
            }
        }
    }
    return true;
}

/// Rank of a rational matrix by plain Gaussian elimination over mpq.
inline std::size_t rank_mpq(std::vector<std::vector<mpq_class>> a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// dim_k (R/I)_d from the span of { m * f : f a generator, deg m = d - deg f } (QQ only).
inline long hilbert_function_macaulay(const IdealPresentation& I, std::uint32_t d) {
    const std::size_t n = I.ring->nvars();
    const auto basis = monomials_of_degree(n, d);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& f : I.generators) {
        if (f.is_zero()) continue;
        const long df = f.degree();
        if (df > static_cast<long>(d)) continue;
        for (const auto& m : monomials_of_degree(n, d - static_cast<std::uint32_t>(df))) {
            std::vector<mpq_class> row(basis.size(), 0);
            for (const auto& t : f.terms()) {
                const Monomial prod = t.mono * m;
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if (basis[k] == prod) {
                        row[k] = t.coeff.rational();
                        break;
                    }
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return static_cast<long>(basis.size()) - static_cast<long>(rank_mpq(std::move(rows)));
}

/// Largest degree in a minimal homogeneous generating set: generators are scanned by degree and
/// kept only when not already in the ideal of those kept so far.
inline long minimal_generator_degree(const IdealPresentation& I) {
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators)
        if (!f.is_zero()) gens.push_back(f);
    std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    IdealPresentation kept{I.ring, {}};
    long top = -1;
    for (const auto& f : gens) {
        if (!kept.generators.empty() && normal_form(f, reduced_groebner_basis(kept).elements).is_zero()) continue;
        kept.generators.push_back(f);
        top = std::max(top, f.degree());
    }
    return top;
}

// ---------------------------------------------------------------- fixtures

struct MonomialIdealShape {
    std::size_t max_vars = 4;
    std::uint32_t max_degree = 4;
    std::size_t max_generators = 5;
};

/// Random proper nonzero monomial ideal; n in [2, max_vars].
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const MonomialIdealShape& shape = {}) {
    std::uniform_int_distribution<std::size_t> nvars(2, shape.max_vars);
    std::uniform_int_distribution<std::size_t> ngens(1, shape.max_generators);
    std::uniform_int_distribution<std::uint32_t> degree(1, shape.max_degree);
    const std::size_t n = nvars(rng);
    const auto r = ring(n);
    std::vector<Monomial> gens;
    const std::size_t k = ngens(rng);
    for (std::size_t g = 0; g < k; ++g) {
        std::vector<std::uint32_t> e(n, 0);
        const std::uint32_t d = degree(rng);
        std::uniform_int_distribution<std::size_t> var(0, n - 1);
        for (std::uint32_t s = 0; s < d; ++s) ++e[var(rng)];
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::minimalize(r, std::move(gens));
}

struct HomogeneousIdealShape {
    std::size_t max_vars = 4;
    long max_degree = 3;
    std::size_t max_generators = 4;
    long coefficient_bound = 5;
    std::size_t max_terms = 4;
};

/// Random homogeneous ideal over QQ with small integer coefficients; n in [2, max_vars].
inline IdealPresentation random_homogeneous_ideal(std::mt19937_64& rng, const HomogeneousIdealShape& shape = {}) {
    std::uniform_int_distribution<std::size_t> nvars(2, shape.max_vars);
    std::uniform_int_distribution<std::size_t> ngens(1, shape.max_generators);
    std::uniform_int_distribution<long> degree(1, shape.max_degree);
    std::uniform_int_distribution<long> coeff(-shape.coefficient_bound, shape.coefficient_bound);
    std::uniform_int_distribution<std::size_t> nterms(1, shape.max_terms);
    const std::size_t n = nvars(rng);
    const auto r = ring(n);
    const Field k = r->field();
    IdealPresentation I{r, {}};
    const std::size_t count = ngens(rng);
    while (I.generators.size() < count) {
        const auto d = static_cast<std::uint32_t>(degree(rng));
        const auto pool = monomials_of_degree(n, d);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::vector<Term> terms;
        const std::size_t t = nterms(rng);
        for (std::size_t s = 0; s < t; ++s) terms.push_back(Term{Scalar::from_int(k, coeff(rng)), pool[pick(rng)]});
        Polynomial f = Polynomial::from_terms(r, std::move(terms));
        if (!f.is_zero()) I.generators.push_back(std::move(f));
    }
    return I;
}

/// A dense form of degree d: every monomial of degree d with a nonzero random coefficient.
inline Polynomial random_dense_form(std::mt19937_64& rng, const RingPtr& r, std::uint32_t d) {
    std::uniform_int_distribution<long> coeff(1, 9);
    std::bernoulli_distribution sign(0.5);
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(r->nvars(), d)) {
        const long c = coeff(rng);
        terms.push_back(Term{Scalar::from_int(r->field(), sign(rng) ? c : -c), m});
    }
    return Polynomial::from_terms(r, std::move(terms));
}

/// Borel-fixed ideals used as Gin fixtures.
inline std::vector<MonomialIdeal> borel_fixed_fixtures() {
    return {
        ideal(ring(2), {{2, 0}, {1, 1}, {0, 2}}),
        ideal(ring(2), {{2, 0}, {1, 1}, {0, 3}}),
        ideal(ring(2), {{1, 0}}),
        ideal(ring(3), {{1, 0, 0}, {0, 1, 0}}),
        ideal(ring(3), {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}),
        ideal(ring(3), {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}}),
        ideal(ring(3), {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}}),
        ideal(ring(3), {{1, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 3}}),
        ideal(ring(4), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}}),
        ideal(ring(4), {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}}),
    };
}

/// Alternating sum of a Betti table: sum (-1)^i beta_ij t^j.
inline std::vector<long> euler_characteristic(const BettiTable& table) {
    std::vector<long> out;
    for (const auto& [key, rank] : table.entries()) {
        if (out.size() <= key.second) out.resize(key.second + 1, 0);
        out[key.second] += (key.first % 2 == 0 ? 1 : -1) * static_cast<long>(rank);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace cmreg::testing

#endif

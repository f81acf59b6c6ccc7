#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace cmreg;
using namespace cmreg::testing;

namespace {

std::vector<Monomial> leads(const GroebnerBasis& gb) {
    std::vector<Monomial> out;
    for (const auto& g : gb.elements) out.push_back(g.leading_monomial());
    return out;
}

void expect_reduced(const GroebnerBasis& gb) {
    for (std::size_t a = 0; a < gb.elements.size(); ++a) {
        EXPECT_TRUE(gb.elements[a].leading_coefficient().is_one());
        for (std::size_t b = 0; b < gb.elements.size(); ++b) {
            if (a == b) continue;
            for (const auto& t : gb.elements[a].terms()) {
                EXPECT_FALSE(divides(gb.elements[b].leading_monomial(), t.mono));
            }
        }
    }
}

}  // namespace

TEST(NormalForm, Basics) {
    auto r = ring(2);
    EXPECT_TRUE(normal_form(poly(r, "x1^2"), {poly(r, "x1")}).is_zero());
    const Polynomial f = poly(r, "x1^2 + x2");
    EXPECT_EQ(normal_form(f, {}), f);
    // x1^2 + x2 modulo x1 - x2 leaves x2^2 + x2... not homogeneous, but division does not care
    EXPECT_EQ(normal_form(f, {poly(r, "x1 - x2")}), poly(r, "x2^2 + x2"));
}

TEST(NormalForm, GoldenExampleRemainderIsReduced) {
    const IdealPresentation I = golden_ideal();
    const GroebnerBasis gb = reduced_groebner_basis(I);
    const Polynomial r = normal_form(poly(I.ring, "x2^3"), gb.elements);
    // x2^3 is a leading monomial of the basis, so it reduces to a combination of standard monomials
    for (const auto& t : r.terms()) {
        for (const auto& g : gb.elements) EXPECT_FALSE(divides(g.leading_monomial(), t.mono));
    }
    EXPECT_EQ(r, poly(I.ring, "x1*x3^2"));
}

TEST(SPolynomial, Examples) {
    auto r = ring(4);
    const Polynomial f = poly(r, "x1*x2 - x3*x4");
    EXPECT_TRUE(s_polynomial(f, f).is_zero());
    EXPECT_TRUE(s_polynomial(poly(r, "x1"), poly(r, "x2")).is_zero());
    EXPECT_EQ(s_polynomial(f, poly(r, "x1^3 - x2*x4^2")), poly(r, "x2^2*x4^2 - x1^2*x3*x4"));
    EXPECT_THROW(s_polynomial(f, Polynomial(r, MonomialOrder::degrevlex)), std::invalid_argument);
}

TEST(ReducedGroebnerBasis, Examples) {
    auto r1 = ring(1);
    const GroebnerBasis p = reduced_groebner_basis(presentation(r1, {"x1^3"}));
    ASSERT_EQ(p.elements.size(), 1u);
    EXPECT_EQ(p.elements[0], poly(r1, "x1^3"));

    auto r3 = ring(3);
    const GroebnerBasis lin = reduced_groebner_basis(presentation(r3, {"x1 - x2", "x2 - x3"}));
    ASSERT_EQ(lin.elements.size(), 2u);
    EXPECT_EQ(lin.elements[0], poly(r3, "x1 - x3"));
    EXPECT_EQ(lin.elements[1], poly(r3, "x2 - x3"));
    EXPECT_EQ(initial_ideal(r3, lin), ideal(r3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST(ReducedGroebnerBasis, GoldenExample) {
    const IdealPresentation I = golden_ideal();
    const GroebnerBasis gb = reduced_groebner_basis(I);
    expect_reduced(gb);
    EXPECT_EQ(initial_ideal(I.ring, gb), ideal(I.ring, {{1, 1, 0, 0}, {0, 3, 0, 0}, {2, 0, 1, 0}, {3, 0, 0, 0}}));
}

TEST(ReducedGroebnerBasis, RejectsNonHomogeneous) {
    auto r = ring(2);
    EXPECT_THROW(reduced_groebner_basis(presentation(r, {"x1 + x2^2"})), NonHomogeneousError);
}

TEST(ReducedGroebnerBasis, OtherOrders) {
    auto r = ring(3);
    const IdealPresentation I = presentation(r, {"x1*x3 - x2^2"});
    EXPECT_EQ(leads(reduced_groebner_basis(I, MonomialOrder::degrevlex)).front(), mono({0, 2, 0}));
    EXPECT_EQ(leads(reduced_groebner_basis(I, MonomialOrder::lex)).front(), mono({1, 0, 1}));
}

TEST(ReducedGroebnerBasis, RandomIdealProperties) {
    std::mt19937_64 rng(2024);
    HomogeneousIdealShape shape;
    shape.max_vars = 3;
    for (int k = 0; k < 40; ++k) {
        const IdealPresentation I = random_homogeneous_ideal(rng, shape);
        const GroebnerBasis gb = reduced_groebner_basis(I);
        expect_reduced(gb);
        // generators reduce to zero
        for (const auto& f : I.generators) EXPECT_TRUE(normal_form(f, gb.elements).is_zero());
        // Buchberger criterion
        for (std::size_t a = 0; a < gb.elements.size(); ++a)
            for (std::size_t b = a + 1; b < gb.elements.size(); ++b)
                EXPECT_TRUE(normal_form(s_polynomial(gb.elements[a], gb.elements[b]), gb.elements).is_zero());
        // basis elements lie in the ideal: each reduces to zero modulo a GB of the input plus itself
        IdealPresentation both = I;
        for (const auto& g : gb.elements) both.generators.push_back(g);
        EXPECT_EQ(reduced_groebner_basis(both).elements, gb.elements);
        // permutation invariance
        IdealPresentation shuffled = I;
        std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
        std::reverse(shuffled.generators.begin(), shuffled.generators.end());
        EXPECT_EQ(reduced_groebner_basis(shuffled).elements, gb.elements);
    }
}

TEST(ReducedGroebnerBasis, HilbertFunctionMatchesInitialIdeal) {
    std::mt19937_64 rng(99);
    HomogeneousIdealShape shape;
    shape.max_vars = 3;
    for (int k = 0; k < 25; ++k) {
        const IdealPresentation I = random_homogeneous_ideal(rng, shape);
        const MonomialIdeal J = initial_ideal(I.ring, reduced_groebner_basis(I));
        long maxdeg = 0;
        for (const auto& f : I.generators) maxdeg = std::max(maxdeg, f.degree());
        const auto D = static_cast<std::uint32_t>(maxdeg + 3);
        const auto counts = standard_monomial_counts(J, D);
        for (std::uint32_t d = 0; d <= D; ++d) EXPECT_EQ(hilbert_function_macaulay(I, d), counts[d]) << "degree " << d;
    }
}

TEST(ReducedGroebnerBasis, PrimeField) {
    auto r = ring(2, Field::prime(5));
    // over GF(5), 5*x1*x2 vanishes
    const GroebnerBasis gb = reduced_groebner_basis(presentation(r, {"x1^2 + 5*x1*x2", "3*x2^2"}));
    ASSERT_EQ(gb.elements.size(), 2u);
    EXPECT_EQ(gb.elements[0], poly(r, "x1^2"));
    EXPECT_EQ(gb.elements[1], poly(r, "x2^2"));
}

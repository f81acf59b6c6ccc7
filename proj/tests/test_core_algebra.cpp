#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace cmreg;
using namespace cmreg::testing;

namespace {

int sign(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

}  // namespace

TEST(Scalar, RationalsStayInLowestTerms) {
    const Field q = Field::rationals();
    Scalar a = Scalar::from_fraction(q, 6, 8);
    EXPECT_EQ(a.rational(), mpq_class(3, 4));
    a *= Scalar::from_fraction(q, 4, 3);
    EXPECT_TRUE(a.is_one());
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int k = 0; k < 200; ++k) {
        long n1 = d(rng), d1 = d(rng), n2 = d(rng), d2 = d(rng);
        if (d1 == 0 || d2 == 0) continue;
        Scalar x = Scalar::from_fraction(q, n1, d1);
        Scalar y = Scalar::from_fraction(q, n2, d2);
        for (const Scalar& r : {x + y, x - y, x * y}) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.rational().get_num_mpz_t(), r.rational().get_den_mpz_t());
            EXPECT_EQ(g, 1);
            EXPECT_GT(r.rational().get_den(), 0);
        }
    }
}

TEST(Scalar, PrimeFieldArithmetic) {
    const Field k = Field::prime(7);
    Scalar a = Scalar::from_int(k, 10);
    EXPECT_EQ(a.residue().value, 3u);
    EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_TRUE((Scalar::from_int(k, -1) + Scalar::one(k)).is_zero());
    EXPECT_EQ(Scalar::from_int(k, -1).to_string(), "6");
}

TEST(Scalar, Errors) {
    EXPECT_THROW(Field::prime(8), std::invalid_argument);
    EXPECT_THROW(Scalar::from_fraction(Field::rationals(), 1, 0), std::domain_error);
    EXPECT_THROW(Scalar::zero(Field::rationals()).inverse(), std::domain_error);
    EXPECT_THROW(Scalar::one(Field::rationals()) + Scalar::one(Field::prime(5)), std::invalid_argument);
}

TEST(Ring, Validation) {
    EXPECT_THROW(RingContext({}, Field::rationals()), std::invalid_argument);
    EXPECT_THROW(RingContext({"x", "x"}, Field::rationals()), std::invalid_argument);
    auto r = ring(3);
    EXPECT_EQ(r->name(2), "x3");
    EXPECT_EQ(r->truncated(2)->nvars(), 2u);
}

TEST(MonomialOrder, DegrevlexWorkedExample) {
    EXPECT_EQ(sign(compare(mono({1, 1, 0, 0}), mono({0, 0, 1, 1}), MonomialOrder::degrevlex)), 1);
    EXPECT_EQ(sign(compare(mono({1, 0, 2, 0}), mono({0, 3, 0, 0}), MonomialOrder::degrevlex)), -1);
    EXPECT_EQ(sign(compare(mono({2, 1, 0}), mono({2, 1, 0}), MonomialOrder::degrevlex)), 0);
}

TEST(MonomialOrder, DegrevlexVersusOthers) {
    // x1*x3 vs x2^2: degrevlex prefers x2^2, lex and deglex prefer x1*x3
    const Monomial a = mono({1, 0, 1}), b = mono({0, 2, 0});
    EXPECT_EQ(sign(compare(a, b, MonomialOrder::degrevlex)), -1);
    EXPECT_EQ(sign(compare(a, b, MonomialOrder::deglex)), 1);
    EXPECT_EQ(sign(compare(a, b, MonomialOrder::lex)), 1);
    EXPECT_EQ(sign(compare(mono({1, 0, 0}), mono({0, 3, 0}), MonomialOrder::lex)), 1);
    EXPECT_EQ(sign(compare(mono({1, 0, 0}), mono({0, 3, 0}), MonomialOrder::degrevlex)), -1);
}

TEST(MonomialOrder, MultiplicativeAndDegreeRefining) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> e(0, 3);
    auto random_mono = [&] { return mono({e(rng), e(rng), e(rng), e(rng)}); };
    for (auto ord : {MonomialOrder::degrevlex, MonomialOrder::deglex, MonomialOrder::lex}) {
        for (int k = 0; k < 500; ++k) {
            const Monomial a = random_mono(), b = random_mono(), c = random_mono();
            const auto ab = compare(a, b, ord);
            EXPECT_EQ(sign(compare(a * c, b * c, ord)), sign(ab));
            EXPECT_EQ(sign(compare(b, a, ord)), -sign(ab));
            if (ord != MonomialOrder::lex && a.degree() > b.degree()) EXPECT_EQ(sign(ab), 1);
        }
    }
}

TEST(MonomialOps, DivisibilityLcmQuotient) {
    EXPECT_TRUE(divides(mono({1, 1}), mono({2, 1})));
    EXPECT_EQ(quotient(mono({2, 1}), mono({1, 1})), mono({1, 0}));
    EXPECT_EQ(lcm(mono({1, 1}), mono({0, 3})), mono({1, 3}));
    EXPECT_FALSE(divides(mono({0, 0, 1}), mono({1, 1, 0})));
    EXPECT_THROW(quotient(mono({1, 1, 0}), mono({0, 0, 1})), std::domain_error);
    EXPECT_THROW(divides(mono({1}), mono({1, 1})), std::invalid_argument);
    EXPECT_EQ(m_index(mono({2, 0, 1, 0})), 3u);
    EXPECT_EQ(m_index(mono({3, 0, 0, 0})), 1u);
    EXPECT_EQ(m_index(mono({0, 3, 0, 0})), 2u);
    EXPECT_EQ(m_index(mono({0, 0})), 0u);
}

TEST(Polynomial, Arithmetic) {
    auto r = ring(2);
    const Polynomial f = poly(r, "x1 + x2");
    const Polynomial g = poly(r, "x1 - x2");
    EXPECT_EQ(f * g, poly(r, "x1^2 - x2^2"));
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_EQ(Polynomial::constant(r, Scalar::one(r->field())) * f, f);
    EXPECT_EQ((f * g).to_string(), "x1^2 - x2^2");
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
    auto r = ring(3);
    std::mt19937_64 rng(3);
    HomogeneousIdealShape shape;
    shape.max_vars = 3;
    auto random_poly = [&] {
        const auto pool = monomials_of_degree(3, std::uniform_int_distribution<std::uint32_t>(0, 2)(rng));
        std::vector<Term> terms;
        std::uniform_int_distribution<long> c(-4, 4);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int k = 0; k < 3; ++k) terms.push_back(Term{Scalar::from_int(r->field(), c(rng)), pool[pick(rng)]});
        return Polynomial::from_terms(r, std::move(terms));
    };
    for (int k = 0; k < 60; ++k) {
        const Polynomial a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(Polynomial, LeadingTerm) {
    auto r = ring(4);
    const Polynomial f = poly(r, "x1*x2 - x3*x4");
    EXPECT_EQ(f.leading_monomial(), mono({1, 1, 0, 0}));
    EXPECT_TRUE(f.leading_coefficient().is_one());
    EXPECT_EQ(poly(r, "x1^3 - x2*x4^2").leading_monomial(), mono({3, 0, 0, 0}));
    EXPECT_EQ(poly(r, "x1*x3^2 - x2^3").leading_monomial(), mono({0, 3, 0, 0}));
    const Polynomial five = poly(r, "5");
    EXPECT_EQ(five.leading_monomial(), Monomial(4));
    EXPECT_EQ(five.leading_coefficient(), Scalar::from_int(r->field(), 5));
    EXPECT_THROW(Polynomial(r, MonomialOrder::degrevlex).leading_term(), std::domain_error);
}

TEST(Polynomial, Homogeneity) {
    auto r = ring(4);
    EXPECT_EQ(poly(r, "x1*x2 - x3*x4").homogeneous_degree(), 2);
    EXPECT_FALSE(poly(r, "x1 + x2^2").is_homogeneous());
    EXPECT_TRUE(Polynomial(r, MonomialOrder::degrevlex).is_homogeneous());
}

TEST(LinearChange, WorkedExamples) {
    auto r = ring(2);
    const Field q = r->field();
    const Polynomial f = poly(r, "x1^2 + 3*x1*x2");
    EXPECT_EQ(apply_linear_change(f, ScalarMatrix::identity(2, q)), f);
    EXPECT_EQ(apply_linear_change(poly(r, "x1^2"), ScalarMatrix::from_ints({{0, 1}, {1, 0}}, q)), poly(r, "x2^2"));
    EXPECT_EQ(apply_linear_change(poly(r, "x1^2"), ScalarMatrix::from_ints({{1, 1}, {0, 1}}, q)),
              poly(r, "x1^2 + 2*x1*x2 + x2^2"));
    EXPECT_EQ(apply_linear_change(poly(r, "x2"), ScalarMatrix::from_ints({{1, 1}, {0, 1}}, q)), poly(r, "x2"));
    EXPECT_THROW(apply_linear_change(f, ScalarMatrix::from_ints({{1, 2}, {2, 4}}, q)), std::domain_error);
}

TEST(LinearChange, GroupAction) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> e(-3, 3);
    for (std::size_t n : {2u, 3u}) {
        auto r = ring(n);
        const Field q = r->field();
        auto random_matrix = [&] {
            for (;;) {
                std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
                for (auto& row : rows)
                    for (auto& v : row) v = e(rng);
                ScalarMatrix g = ScalarMatrix::from_ints(rows, q);
                if (g.invertible()) return g;
            }
        };
        for (int k = 0; k < 10; ++k) {
            const ScalarMatrix g = random_matrix(), h = random_matrix();
            const Polynomial f = random_dense_form(rng, r, 2);
            EXPECT_EQ(apply_linear_change(apply_linear_change(f, g), h), apply_linear_change(f, g * h));
            EXPECT_TRUE(apply_linear_change(f, g).is_homogeneous());
        }
    }
}

TEST(ExtendedInt, Conventions) {
    const ExtendedInt ninf = ExtendedInt::neg_inf(), pinf = ExtendedInt::pos_inf();
    EXPECT_LT(ninf, ExtendedInt(-1000000));
    EXPECT_GT(pinf, ExtendedInt(1000000));
    EXPECT_EQ(ninf + 5, ninf);
    EXPECT_EQ(max(ninf, ExtendedInt(3)), ExtendedInt(3));
    EXPECT_EQ(ninf.to_string(), "-inf");
    EXPECT_THROW(ninf.value(), std::logic_error);
    EXPECT_THROW(ninf + pinf, std::domain_error);
}

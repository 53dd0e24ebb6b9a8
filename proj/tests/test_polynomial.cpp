#include <gtest/gtest.h>

#include <map>
#include <random>

#include "qeuler/polynomial.hpp"
#include "test_util.hpp"

namespace qeuler {
namespace {

using test::P;

// Independent reference: term-by-term product through a sparse map.
std::map<std::size_t, BigInteger> naive_product(const QPolynomial& a, const QPolynomial& b) {
    std::map<std::size_t, BigInteger> out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool normalized(const QPolynomial& p) { return p.coeffs().empty() || p.coeffs().back() != 0; }

TEST(Polynomial, Constructors) {
    EXPECT_EQ(QPolynomial::one().coeffs(), std::vector<BigInteger>{1});
    EXPECT_EQ(QPolynomial::monomial(1, 3), P({0, 0, 0, 1}));
    EXPECT_TRUE(QPolynomial::monomial(0, 5).is_zero());
    EXPECT_TRUE(QPolynomial::monomial(0, 5).coeffs().empty());
    EXPECT_TRUE(QPolynomial::zero().is_zero());
    EXPECT_TRUE(P({0, 0, 0}).is_zero());
    EXPECT_EQ(P({1, 2, 0, 0}).coeffs().size(), 2u);
}

TEST(Polynomial, ZeroHasNoDegree) {
    EXPECT_THROW(QPolynomial::zero().degree(), std::domain_error);
    EXPECT_EQ(P({0, 0, 4}).degree(), 2u);
    EXPECT_EQ(P({0, 0, 4}).low_degree(), 2u);
}

TEST(Polynomial, AddSubMul) {
    EXPECT_EQ(add(P({0, 1, 1}), P({1})), P({1, 1, 1}));
    EXPECT_EQ(mul(P({1, 1}), P({1, 1})), P({1, 2, 1}));
    EXPECT_EQ(mul(P({0, 1, 1}), P({0, 0, 1, 1, 1})), P({0, 0, 0, 1, 2, 2, 1}));
    EXPECT_TRUE(sub(P({3, 1}), P({3, 1})).is_zero());
    EXPECT_TRUE(mul(P({1, 2}), QPolynomial::zero()).is_zero());
}

TEST(Polynomial, HandConvolutionMatchesNaiveProduct) {
    const auto a = P({0, 1, 1});
    const auto b = P({0, 0, 1, 1, 1});
    const auto oracle = naive_product(a, b);
    const std::map<std::size_t, BigInteger> expected{{3, 1}, {4, 2}, {5, 2}, {6, 1}};
    EXPECT_EQ(oracle, expected);
    const auto prod = mul(a, b);
    for (const auto& [d, c] : expected) EXPECT_EQ(prod.coeff(d), c);
}

TEST(Polynomial, ExactDivision) {
    // E_{5|3}(q)/q divided by [3].
    auto q = div_exact(P({1, 2, 2, 2, 1, 1}), P({1, 1, 1}));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, P({1, 1, 0, 1}));
    EXPECT_EQ(mul(*q, P({1, 1, 1})), P({1, 2, 2, 2, 1, 1}));

    EXPECT_EQ(div_exact(P({1, 1}), P({1, 1})), std::optional(QPolynomial::one()));
    EXPECT_FALSE(div_exact(P({1, 0, 1}), P({1, 1})));

    auto r = divmod(P({1, 0, 1}), P({1, 1}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->quotient, P({-1, 1}));
    EXPECT_EQ(r->remainder, P({2}));
}

TEST(Polynomial, DivisionEdgeCases) {
    EXPECT_THROW(div_exact(P({1}), QPolynomial::zero()), std::invalid_argument);
    EXPECT_EQ(div_exact(QPolynomial::zero(), P({1, 1})), std::optional(QPolynomial::zero()));
    EXPECT_FALSE(div_exact(P({1}), P({1, 1})));
    // Non-unit leading coefficient: integral when it divides, absent otherwise.
    EXPECT_EQ(div_exact(P({2, 4}), P({1, 2})), std::optional(P({2})));
    EXPECT_FALSE(div_exact(P({1, 1}), P({0, 2})));
    EXPECT_FALSE(divmod(P({1, 1}), P({0, 2})));
}

TEST(Polynomial, EvalInt) {
    EXPECT_EQ(eval_int(P({1, 2, 2, 2, 1, 1}), 1), 9);
    EXPECT_EQ(eval_int(QPolynomial::zero(), 7), 0);
    EXPECT_EQ(eval_int(P({0, 1, 1}), 2), 6);
}

TEST(Polynomial, Brackets) {
    EXPECT_EQ(q_bracket(3, 1), P({1, 1, 1}));
    EXPECT_EQ(q_bracket(1, 5), P({1}));
    EXPECT_EQ(q_bracket(2, 3), P({1, 0, 0, 1}));
    EXPECT_THROW(q_bracket(0, 1), std::invalid_argument);
    EXPECT_EQ(bracket_product(7, 0), QPolynomial::one());
    EXPECT_EQ(bracket_product(2, 2), P({1, 1, 1, 1}));
    EXPECT_EQ(bracket_product(3, 1), P({1, 1, 1}));
}

TEST(Polynomial, Rendering) {
    EXPECT_EQ(to_string(QPolynomial::zero()), "0");
    EXPECT_EQ(to_string(P({1, 0, 2, 0, 0, 1})), "1 + 2*q^2 + q^5");
    EXPECT_EQ(to_string(P({0, 1, 2, 2, 2, 1, 1})), "q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6");
    EXPECT_EQ(to_string(P({1})), "1");
    EXPECT_EQ(to_string(P({-1, 0, -3, 1})), "-1 - 3*q^2 + q^3");
    EXPECT_EQ(to_string(P({0, -1})), "-q");
    EXPECT_EQ(join_coeffs(P({0, 1, 2})), "0;1;2");
    EXPECT_EQ(join_coeffs(QPolynomial::zero()), "");
}

TEST(Polynomial, TemplatedOnScalar) {
    using P64 = Polynomial<long long>;
    const P64 a{1, 1};
    EXPECT_EQ(mul(a, a), (P64{1, 2, 1}));
    EXPECT_EQ(div_exact(P64{1, 2, 1}, a), std::optional(a));
    EXPECT_EQ(eval(P64{0, 1, 1}, 2LL), 6);
    EXPECT_EQ(to_string(P64{1, 0, 2}), "1 + 2*q^2");
}

TEST(Polynomial, BigCoefficients) {
    const auto big = QPolynomial::monomial(BigInteger("123456789012345678901234567890"), 2);
    const auto sq = mul(big, big);
    EXPECT_EQ(sq.coeff(4), BigInteger("15241578753238836750495351562536198787501905199875019052100"));
    EXPECT_EQ(div_exact(sq, big), std::optional(big));
}

class PolynomialProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{20261015};
};

TEST_F(PolynomialProperties, RingAxioms) {
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = test::random_poly(rng, 12), b = test::random_poly(rng, 12), c = test::random_poly(rng, 12);
        ASSERT_EQ(add(a, b), add(b, a));
        ASSERT_EQ(mul(a, b), mul(b, a));
        ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
        ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
        ASSERT_TRUE(normalized(add(a, b)) && normalized(sub(a, b)) && normalized(mul(a, b)));
        ASSERT_EQ(sub(add(a, b), b), a);
    }
}

TEST_F(PolynomialProperties, ProductMatchesNaive) {
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = test::random_poly(rng, 12), b = test::random_poly(rng, 12);
        const auto prod = mul(a, b);
        const auto oracle = naive_product(a, b);
        std::size_t nonzero = 0;
        for (const auto& c : prod.coeffs()) nonzero += (c != 0);
        ASSERT_EQ(nonzero, oracle.size());
        for (const auto& [d, c] : oracle) ASSERT_EQ(prod.coeff(d), c);
    }
}

TEST_F(PolynomialProperties, DegreeAndEvaluationAreMultiplicative) {
    std::uniform_int_distribution<long> point(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = test::random_nonzero_poly(rng, 12), b = test::random_nonzero_poly(rng, 12);
        const auto ab = mul(a, b);
        ASSERT_EQ(ab.degree(), a.degree() + b.degree());
        const BigInteger x = point(rng);
        ASSERT_EQ(eval_int(ab, x), eval_int(a, x) * eval_int(b, x));
    }
}

TEST_F(PolynomialProperties, DivisionRoundTripAndCompleteness) {
    for (int trial = 0; trial < 300; ++trial) {
        const auto b = test::random_nonzero_poly(rng, 12);
        const auto c = test::random_poly(rng, 12);
        const auto a = mul(b, c);
        auto q = div_exact(a, b);
        ASSERT_TRUE(q) << to_string(a) << " / " << to_string(b);
        ASSERT_EQ(*q, c);

        // Arbitrary pairs: any returned quotient must reconstruct exactly.
        const auto x = test::random_poly(rng, 12);
        if (auto q2 = div_exact(x, b)) ASSERT_EQ(mul(b, *q2), x);
    }
}

}  // namespace
}  // namespace qeuler

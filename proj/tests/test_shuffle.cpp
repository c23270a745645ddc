#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace shufgebra;

namespace {

const RationalField Q;

Polynomial<Rational> P(const char* text) { return parse_polynomial<Rational>(text, Q); }

ShuffleElement<Rational> E(const char* text, std::vector<unsigned> k)
{
    return ShuffleElement<Rational>(Grading(std::move(k)), P(text), Q);
}

ShuffleElement<Rational> gen(unsigned n, unsigned color, unsigned r) { return psi_generator(n, color, r, Q); }

} // namespace

TEST(Zeta, Factors)
{
    EXPECT_EQ(zeta(1, 1).cartan, 2);
    EXPECT_EQ(zeta(1, 2).cartan, -1);
    EXPECT_EQ(zeta(1, 3).cartan, 0);
    EXPECT_TRUE(zeta(1, 3).is_trivial());
    EXPECT_EQ(zeta(1, 1).to_string(), "(z+1)/z");
    EXPECT_EQ(zeta(1, 2).to_string(), "(z-1/2)/z");
    EXPECT_EQ(zeta(1, 3).to_string(), "1");
}

TEST(Shuffles, Counts)
{
    EXPECT_EQ(enumerate_shuffles(Grading({1}), Grading({1})).size(), 2U);
    EXPECT_EQ(enumerate_shuffles(Grading({2}), Grading({1})).size(), 3U);
    EXPECT_EQ(enumerate_shuffles(Grading({1, 1}), Grading({1, 0})).size(), 2U);
    EXPECT_EQ(enumerate_shuffles(Grading({2, 1}), Grading({2, 2})).size(), 6U * 3U);
}

TEST(ShuffleElement, RejectsBadInput)
{
    EXPECT_THROW(E("x[1,1]-x[1,2]", {2}), invalid_input);
    EXPECT_THROW(E("x[1,3]", {2}), invalid_input);
    EXPECT_THROW(E("x[2,1]", {1}), invalid_input);
    EXPECT_THROW(shuffle_mul(gen(2, 1, 0), gen(3, 1, 0)), invalid_input);
    const PrimeField f3(3), f5(5);
    EXPECT_THROW(shuffle_mul(psi_generator(2, 1, 0, f3), psi_generator(2, 1, 0, f5)), field_mismatch);
}

TEST(ShuffleProduct, Examples)
{
    EXPECT_EQ(to_string(shuffle_mul(gen(2, 1, 0), gen(2, 1, 0)).numerator()), "2");
    EXPECT_EQ(shuffle_mul(gen(2, 1, 1), gen(2, 1, 0)).numerator(), P("x[1,1]+x[1,2]+1"));
    auto F = shuffle_mul(gen(3, 1, 0), gen(3, 2, 0));
    EXPECT_EQ(F.numerator(), P("x[1,1]-x[2,1]-1/2"));
    EXPECT_EQ(F.grading(), Grading({1, 1}));
}

TEST(ShuffleProduct, MatchesPointwiseSymmetrization)
{
    std::mt19937_64 rng(17);
    const std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> shapes{
        {{1, 0}, {0, 1}}, {{1, 1}, {1, 0}}, {{2, 0}, {1, 1}}, {{1, 1}, {1, 1}}, {{0, 2}, {1, 1}},
        {{1, 1, 0}, {0, 1, 1}}, {{2, 1}, {1, 2}}};
    for (const auto& [k, l] : shapes) {
        const unsigned n = static_cast<unsigned>(k.size()) + 1;
        // Random products of generator images in the two gradings.
        auto build = [&](const std::vector<unsigned>& g) {
            auto acc = ShuffleElement<Rational>::unit(n, Q);
            for (unsigned c = 1; c <= g.size(); ++c)
                for (unsigned t = 0; t < g[c - 1]; ++t)
                    acc = shuffle_mul(acc, gen(n, c, static_cast<unsigned>(rng() % 3)));
            return acc;
        };
        auto F = build(k), G = build(l);
        auto FG = shuffle_mul(F, G);
        const auto total = FG.grading().counts();
        for (int trial = 0; trial < 3; ++trial) {
            auto at = oracle::random_point(total, rng);
            EXPECT_EQ(oracle::evaluate(FG.numerator(), at) / oracle::canonical_denominator(total, at),
                      oracle::shuffle_value(F, G, at))
                << "k=" << F.grading().to_string() << " l=" << G.grading().to_string();
        }
    }
}

TEST(ShuffleProduct, ClearingRouteAgrees)
{
    std::mt19937_64 rng(23);
    const PrimeField f5(5);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 2);
        auto pick = [&](auto field) {
            auto acc = ShuffleElement<typename decltype(field)::value_type>::unit(n, field);
            const unsigned factors = 1 + static_cast<unsigned>(rng() % 3);
            for (unsigned s = 0; s < factors; ++s)
                acc = shuffle_mul(acc, psi_generator(n, 1 + static_cast<unsigned>(rng() % (n - 1)),
                                                     static_cast<unsigned>(rng() % 3), field));
            return acc;
        };
        auto F = pick(Q), G = pick(Q);
        EXPECT_EQ(shuffle_mul(F, G), shuffle_mul_by_clearing(F, G));
        auto Fp = pick(f5), Gp = pick(f5);
        EXPECT_EQ(shuffle_mul(Fp, Gp), shuffle_mul_by_clearing(Fp, Gp));
    }
}

TEST(ShuffleProduct, ThreadCountDoesNotChangeClearingRoute)
{
    auto F = shuffle_mul(gen(3, 1, 1), gen(3, 2, 0)), G = shuffle_mul(gen(3, 1, 2), gen(3, 1, 0));
    auto sequential = [&] {
        setenv("SHUFGEBRA_THREADS", "1", 1);
        auto r = shuffle_mul_by_clearing(F, G);
        setenv("SHUFGEBRA_THREADS", "4", 1);
        return r;
    }();
    EXPECT_EQ(shuffle_mul_by_clearing(F, G), sequential);
    unsetenv("SHUFGEBRA_THREADS");
}

TEST(ShuffleProduct, AssociativeAndGraded)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        auto pick = [&] {
            const unsigned c = 1 + static_cast<unsigned>(rng() % 2);
            return gen(3, c, static_cast<unsigned>(rng() % 3));
        };
        auto A = pick(), B = pick(), C = pick();
        auto AB = shuffle_mul(A, B);
        EXPECT_EQ(AB.grading(), A.grading() + B.grading());
        EXPECT_TRUE(is_symmetric(AB.numerator(), AB.grading().counts()));
        EXPECT_EQ(shuffle_mul(AB, C), shuffle_mul(A, shuffle_mul(B, C)));
    }
}

TEST(ShuffleProduct, UnitAndZero)
{
    auto F = shuffle_mul(gen(3, 1, 2), gen(3, 2, 1));
    auto one = ShuffleElement<Rational>::unit(3, Q);
    EXPECT_EQ(shuffle_mul(one, F), F);
    EXPECT_EQ(shuffle_mul(F, one), F);
    EXPECT_TRUE(shuffle_mul(ShuffleElement<Rational>::zero(Grading({1, 0}), Q), F).is_zero());
}

TEST(Generators, Images)
{
    EXPECT_EQ(gen(3, 1, 0).grading(), Grading({1, 0}));
    EXPECT_EQ(to_string(gen(3, 1, 0).numerator()), "1");
    EXPECT_EQ(gen(3, 2, 3).numerator(), P("x[2,1]^3"));
    EXPECT_EQ(to_string(psi_generator(3, 1, 0, PrimeField(3)).numerator()), "1");
}

TEST(Generators, KthPower)
{
    for (unsigned r = 0; r <= 3; ++r) {
        auto acc = ShuffleElement<Rational>::unit(2, Q);
        long factorial = 1;
        for (unsigned k = 1; k <= 5; ++k) {
            acc = shuffle_mul(acc, gen(2, 1, r));
            factorial *= k;
            Polynomial<Rational> expected{Rational(factorial)};
            for (unsigned s = 1; s <= k; ++s)
                expected *= Polynomial<Rational>::term(Monomial::of(Variable::x(1, s), r), Rational(1));
            EXPECT_EQ(acc.numerator(), expected) << "k=" << k << " r=" << r;
        }
    }
}

TEST(RootVectors, ClosedForm)
{
    EXPECT_EQ(psi_root_vector(3, {1, 2}, 1, Q).numerator(), P("-x[1,1]"));
    EXPECT_EQ(psi_root_vector(2, {1, 1}, 5, Q).numerator(), P("x[1,1]^5"));
    auto built = bracket(gen(3, 1, 1), gen(3, 2, 0));
    EXPECT_EQ(built.numerator(), P("-x[1,1]"));
    EXPECT_EQ(built, psi_root_vector(3, {1, 2}, 1, Q));
}

TEST(RootVectors, BracketBuiltMatchesClosedForm)
{
    for (unsigned n = 2; n <= 4; ++n)
        for (const Root& beta : positive_roots(n))
            for (unsigned r = 0; r <= 2; ++r)
                EXPECT_EQ(bracket_root_vector(n, beta, r, Q), psi_root_vector(n, beta, r, Q))
                    << beta.to_string() << " r=" << r;
}

TEST(Bracket, Examples)
{
    auto F = shuffle_mul(gen(3, 1, 1), gen(3, 2, 2));
    EXPECT_TRUE(bracket(F, F).is_zero());
    EXPECT_TRUE(bracket(gen(4, 1, 0), gen(4, 3, 0)).is_zero());
}

TEST(PbwMonomials, Images)
{
    EXPECT_EQ(psi_pbw_monomial(PBWExponent(2, {{{{1, 1}, 1}, 2}}), Q).numerator(), P("2*x[1,1]*x[1,2]"));
    EXPECT_EQ(psi_pbw_monomial(PBWExponent(3, {{{{1, 1}, 1}, 1}, {{{2, 2}, 0}, 1}}), Q).numerator(),
              P("x[1,1]*(x[1,1]-x[2,1]-1/2)"));
    // Factors multiply with r descending.
    EXPECT_EQ(psi_pbw_monomial(PBWExponent(2, {{{{1, 1}, 0}, 1}, {{{1, 1}, 2}, 1}}), Q),
              shuffle_mul(gen(2, 1, 2), gen(2, 1, 0)));
}

TEST(DividedPowers, Images)
{
    EXPECT_EQ(divided_power_image(3, 1, 2, 3, Q).numerator(), P("(x[1,1]*x[1,2]*x[1,3])^2"));
    EXPECT_EQ(divided_power_image(3, 2, 4, 1, Q), gen(3, 2, 4));
    auto unit = divided_power_image(3, 1, 1, 0, Q);
    EXPECT_TRUE(unit.grading().is_zero());
    EXPECT_EQ(to_string(unit.numerator()), "1");
}

TEST(DividedPowers, ProductsAreHalfIntegral)
{
    for (unsigned c1 = 1; c1 <= 2; ++c1)
        for (unsigned c2 = 1; c2 <= 2; ++c2)
            for (unsigned t = 1; t <= 2; ++t)
                for (unsigned r = 0; r <= 2; ++r) {
                    auto F = shuffle_mul(divided_power_image(3, c1, r, t, Q), divided_power_image(3, c2, 2 - r, 3 - t, Q));
                    EXPECT_TRUE(coeffs_in_half_integers(F.numerator()));
                }
}

TEST(Wheel, Examples)
{
    EXPECT_FALSE(check_wheel(E("1", {2, 1})));
    EXPECT_TRUE(check_wheel(shuffle_mul(shuffle_mul(gen(3, 1, 0), gen(3, 1, 0)), gen(3, 2, 0))));
    EXPECT_TRUE(check_wheel(E("x[1,1]^2+x[2,1]", {1, 1})));
}

TEST(Wheel, ProductsOfGeneratorsPass)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        auto acc = ShuffleElement<Rational>::unit(3, Q);
        const unsigned factors = 2 + static_cast<unsigned>(rng() % 3);
        for (unsigned s = 0; s < factors; ++s)
            acc = shuffle_mul(acc, gen(3, 1 + static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 3)));
        EXPECT_TRUE(check_wheel(acc)) << to_string(acc.numerator());
    }
}

TEST(Relations, HoldOverQAndFp)
{
    EXPECT_TRUE(verify_relations(2, Q, 2).passed());
    EXPECT_TRUE(verify_relations(3, PrimeField(5), 2).passed());
    auto rep = verify_relations(4, Q, 1);
    EXPECT_TRUE(rep.passed());
    bool commuting = false;
    for (const auto& r : rep.records)
        commuting = commuting || r.statement == "serre-commute";
    EXPECT_TRUE(commuting);
}

TEST(PCenter, PthPowersVanish)
{
    const PrimeField f3(3);
    for (unsigned r = 0; r <= 2; ++r) {
        EXPECT_TRUE(shuffle_power(psi_generator(3, 1, r, f3), 3).is_zero());
        for (const Root& beta : positive_roots(3))
            EXPECT_TRUE(shuffle_power(psi_root_vector(3, beta, r, f3), 3).is_zero());
    }
    // Below p the power survives.
    EXPECT_FALSE(shuffle_power(psi_generator(3, 1, 1, f3), 2).is_zero());
}

#include <random>

#include <gtest/gtest.h>

#include <shufgebra.hpp>

using namespace shufgebra;

namespace {

const RationalField Q;
const PrimeField F3(3);

Polynomial<Rational> P(const char* text) { return parse_polynomial<Rational>(text, Q); }
Polynomial<ModP> P3(const char* text) { return parse_polynomial<ModP>(text, F3); }

template <class K>
std::map<Partition, K> single(const Partition& lambda, K c)
{
    return {{lambda, c}};
}

// Product of generator images in one color, k = parts.size() variables.
Polynomial<ModP> generator_product(const std::vector<unsigned>& exps)
{
    auto acc = ShuffleElement<ModP>::unit(2, F3);
    for (unsigned r : exps)
        acc = shuffle_mul(acc, psi_generator(2, 1, r, F3));
    return acc.numerator();
}

} // namespace

TEST(MLambda, Examples)
{
    EXPECT_EQ(to_string(m_lambda(Partition({0, 0}), Q)), "1");
    EXPECT_EQ(m_lambda(Partition({1, 0}), Q), P("x[1,1]+x[1,2]"));
    EXPECT_EQ(m_lambda(Partition({2, 1}), Q), P("x[1,1]^2*x[1,2]+x[1,1]*x[1,2]^2"));
}

TEST(HallLittlewood, Examples)
{
    EXPECT_EQ(hl_p(Partition({1, 0}), Q), P("x[1,1]+x[1,2]+1"));
    EXPECT_EQ(hl_p(Partition({2, 1}), Q), P("x[1,1]^2*x[1,2]+x[1,1]*x[1,2]^2+x[1,1]*x[1,2]"));
    EXPECT_EQ(hl_p(Partition({1, 1}), Q), P("x[1,1]*x[1,2]"));
}

TEST(HallLittlewood, UnitriangularIntegralAndSizeDecreasing)
{
    for (unsigned k = 1; k <= 4; ++k)
        for (const auto& lambda : partitions_up_to(k, 5)) {
            auto expansion = expand_m(hl_p(lambda, Q), k);
            ASSERT_TRUE(expansion.contains(lambda)) << lambda.to_string();
            EXPECT_EQ(expansion.at(lambda), Rational(1));
            for (const auto& [mu, c] : expansion) {
                EXPECT_TRUE(c.is_integer()) << lambda.to_string();
                if (mu != lambda) {
                    EXPECT_LT(mu.size(), lambda.size()) << lambda.to_string() << " " << mu.to_string();
                }
            }
        }
}

TEST(HallLittlewood, PthPowerOfAGeneratorVanishes)
{
    for (unsigned r = 0; r <= 3; ++r)
        EXPECT_TRUE(generator_product({r, r, r}).is_zero()) << r;
}

TEST(Expansions, Examples)
{
    EXPECT_EQ(expand_m(hl_p(Partition({2, 1}), Q), 2),
              (std::map<Partition, Rational>{{Partition({2, 1}), Rational(1)}, {Partition({1, 1}), Rational(1)}}));
    EXPECT_TRUE(expand_m(Polynomial<Rational>{}, 2).empty());
    EXPECT_EQ(expand_hl(m_lambda(Partition({2, 1}), Q), 2, Q),
              (std::map<Partition, Rational>{{Partition({2, 1}), Rational(1)}, {Partition({1, 1}), Rational(-1)}}));
    EXPECT_EQ(expand_hl(P("x[1,1]+x[1,2]+1"), 2, Q), single(Partition({1, 0}), Rational(1)));
    EXPECT_THROW(expand_m(P("x[1,1]"), 2), invalid_input);
    EXPECT_THROW(expand_hl(P("x[1,1]-x[1,2]"), 2, Q), invalid_input);
}

TEST(Expansions, RoundTrips)
{
    for (unsigned k = 1; k <= 4; ++k)
        for (const auto& lambda : partitions_up_to(k, 4)) {
            EXPECT_EQ(expand_m(m_lambda(lambda, Q), k), single(lambda, Rational(1)));
            EXPECT_EQ(expand_hl(hl_p(lambda, Q), k, Q), single(lambda, Rational(1)));
            EXPECT_EQ(expand_hl(hl_p(lambda, F3), k, F3), single(lambda, F3(1)));
        }
}

TEST(Expansions, ReconstructInput)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial<Rational> f;
        for (const auto& lambda : partitions_up_to(3, 3))
            f += m_lambda(lambda, Q) * Rational(static_cast<long>(rng() % 7) - 3);
        Polynomial<Rational> back;
        for (const auto& [lambda, c] : expand_hl(f, 3, Q))
            back += hl_p(lambda, Q) * c;
        EXPECT_EQ(back, f);
    }
}

TEST(IsInJ, Examples)
{
    EXPECT_TRUE(is_in_J(P3("1"), 2, F3));
    EXPECT_TRUE(is_in_J(P3("x[1,1]^2"), 2, F3));
    EXPECT_FALSE(is_in_J(P3("1"), 3, F3));
    EXPECT_TRUE(is_in_J(hl_p(Partition({2, 1, 0}), F3), 3, F3));
}

TEST(IsInJ, AgreesWithDirectSubstitution)
{
    // Substitution through point evaluation at every t in F_3 and x_4 in F_3.
    for (const auto& lambda : partitions_up_to(4, 3)) {
        auto f = hl_p(lambda, F3) + m_lambda(lambda, F3);
        bool zero_everywhere = true;
        for (long t = 0; t < 3; ++t)
            for (long x4 = 0; x4 < 3; ++x4) {
                Substitution<ModP> at{{rank1_var(1), Polynomial<ModP>(F3(t))},
                                      {rank1_var(2), Polynomial<ModP>(F3(t - 1))},
                                      {rank1_var(3), Polynomial<ModP>(F3(t - 2))},
                                      {rank1_var(4), Polynomial<ModP>(F3(x4))}};
                zero_everywhere = zero_everywhere && substitute(f, at).is_zero();
            }
        // Nonzero polynomials of low degree can still vanish on all of F_3,
        // so only one direction is forced.
        if (is_in_J(f, 4, F3)) {
            EXPECT_TRUE(zero_everywhere) << lambda.to_string();
        }
    }
}

TEST(ExpressRestricted, Examples)
{
    auto ok = express_p_restricted(hl_p(Partition({2, 1, 0}), F3), 3, F3);
    EXPECT_TRUE(ok.in_image());
    EXPECT_EQ(ok.coefficients, single(Partition({2, 1, 0}), F3(1)));

    auto bad = express_p_restricted(hl_p(Partition({1, 1, 1}), F3), 3, F3);
    EXPECT_FALSE(bad.in_image());
    EXPECT_EQ(*bad.witness, Partition({1, 1, 1}));

    auto zero = express_p_restricted(Polynomial<ModP>{}, 3, F3);
    EXPECT_TRUE(zero.in_image());
    EXPECT_TRUE(zero.coefficients.empty());
}

TEST(ExpressRestricted, MembershipMatchesWheelCondition)
{
    std::mt19937_64 rng(17);
    for (unsigned k = 1; k <= 5; ++k) {
        std::vector<Polynomial<ModP>> sample;
        for (const auto& lambda : partitions_up_to(k, 3))
            sample.push_back(m_lambda(lambda, F3));
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<unsigned> exps(k);
            for (auto& e : exps)
                e = static_cast<unsigned>(rng() % 3);
            sample.push_back(generator_product(exps));
        }
        for (const auto& f : sample)
            EXPECT_EQ(is_in_J(f, k, F3), express_p_restricted(f, k, F3).in_image()) << k << " " << to_string(f);
    }
}

TEST(RhoTau, Examples)
{
    EXPECT_EQ(rho(P("x[1,1]+x[1,2]"), 2), P("x[1,1]"));
    EXPECT_TRUE(rho(P("x[1,1]*x[1,2]"), 2).is_zero());
    EXPECT_EQ(rho(P("x[1,1]+x[1,2]+1"), 2), P("x[1,1]+1"));

    EXPECT_EQ(tau(P3("1"), 3, F3), P3("1"));
    EXPECT_TRUE(tau(P3("x[1,1]*x[1,2]*x[1,3]"), 3, F3).is_zero());
    EXPECT_THROW(tau(P3("1"), 2, F3), invalid_input);
}

TEST(RhoTau, TauKillsJ)
{
    for (unsigned k1 = 3; k1 <= 5; ++k1)
        for (const auto& lambda : partitions_up_to(k1, 4)) {
            auto f = hl_p(lambda, F3);
            if (is_in_J(f, k1, F3)) {
                EXPECT_TRUE(tau(f, k1, F3).is_zero()) << lambda.to_string();
            }
        }
}

TEST(RhoTau, RhoMapsJToJ)
{
    for (unsigned k1 = 4; k1 <= 5; ++k1)
        for (const auto& lambda : partitions_up_to(k1, 4)) {
            auto f = hl_p(lambda, F3);
            if (is_in_J(f, k1, F3)) {
                EXPECT_TRUE(is_in_J(rho(f, k1), k1 - 1, F3)) << lambda.to_string();
            }
        }
}

TEST(DimCheck, Examples)
{
    // Every partition of length 2 and size <= 2: (0,0), (1,0), (2,0), (1,1).
    EXPECT_EQ(dim_check(2, 2, F3), (DimCount{4, 4}));
    EXPECT_EQ(dim_check(3, 1, F3), (DimCount{1, 1}));
    EXPECT_EQ(dim_check(3, 0, F3), (DimCount{0, 0}));
}

TEST(DimCheck, MatchesRestrictedCount)
{
    for (unsigned k = 3; k <= 4; ++k)
        for (unsigned D = 0; D <= 5; ++D) {
            auto got = dim_check(k, D, F3);
            EXPECT_EQ(got.dimension, got.restricted) << k << " " << D;
        }
}

TEST(Basis, SymmetricNumeratorBasisSize)
{
    // 1, x[1,1], x[2,1]; then 1, m(1,0), m(2,0), m(1,1).
    EXPECT_EQ(symmetric_numerator_basis(Grading({1, 1}), 1, F3).size(), 3U);
    EXPECT_EQ(symmetric_numerator_basis(Grading({2}), 2, F3).size(), 4U);
}

TEST(Basis, PbwImagesSpanTheWheelSubspace)
{
    auto res = pbw_basis_check(Grading({1, 1}), 3, F3);
    EXPECT_EQ(res.exponents.size(), 10U);
    EXPECT_EQ(res.rank, 10U);
    EXPECT_EQ(res.w_tilde_dim, 10U);
    EXPECT_TRUE(res.all_in_w_tilde);
    EXPECT_TRUE(res.spans());

    auto trivial = pbw_basis_check(Grading::zero(3), 2, F3);
    EXPECT_EQ(trivial.exponents.size(), 1U);
    EXPECT_TRUE(trivial.spans());
}

TEST(Basis, RankOneAgreesWithDimCheck)
{
    for (unsigned D = 0; D <= 4; ++D) {
        auto res = pbw_basis_check(Grading({3}), D, F3);
        EXPECT_TRUE(res.spans()) << D;
        EXPECT_EQ(res.w_tilde_dim, dim_check(3, D, F3).dimension) << D;
    }
}

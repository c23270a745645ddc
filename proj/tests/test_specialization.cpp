#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace shufgebra;

namespace {

const RationalField Q;
const PrimeField F3(3);

Polynomial<Rational> P(const char* text) { return parse_polynomial<Rational>(text, Q); }

ShuffleElement<Rational> gen(unsigned n, unsigned color, unsigned r) { return psi_generator(n, color, r, Q); }

KostantPartition kp(const char* text, unsigned n) { return parse_kostant_partition(text, n); }

} // namespace

TEST(Phi, Examples)
{
    for (unsigned r = 0; r <= 2; ++r)
        for (unsigned s = 0; s <= 2; ++s)
            EXPECT_TRUE(phi(kp("{[1,2]:1}", 3), shuffle_mul(gen(3, 1, r), gen(3, 2, s))).is_zero());
    EXPECT_EQ(phi(kp("{[1,1]:1, [2,2]:1}", 3), shuffle_mul(gen(3, 1, 1), gen(3, 2, 0))),
              P("(w[1,1,1]-1/2)*(w[1,1,1]-w[2,2,1])"));
    EXPECT_TRUE(phi(kp("{[1,1]:2}", 3), gen(3, 1, 1)).is_zero());
}

TEST(Phi, SplitInvariance)
{
    std::mt19937_64 rng(5);
    auto F = shuffle_mul(shuffle_mul(gen(3, 1, 1), gen(3, 2, 0)), shuffle_mul(gen(3, 1, 2), gen(3, 2, 1)));
    for (const auto& d : enumerate_kp(F.grading()))
        for (int trial = 0; trial < 4; ++trial) {
            auto split = canonical_split(d);
            // Permute the indices handed out within each color.
            for (unsigned color = 1; color <= 2; ++color) {
                std::vector<unsigned> idx;
                for (const auto& e : split)
                    if (e.ell == color)
                        idx.push_back(e.index);
                std::shuffle(idx.begin(), idx.end(), rng);
                std::size_t k = 0;
                for (auto& e : split)
                    if (e.ell == color)
                        e.index = idx[k++];
            }
            EXPECT_EQ(phi_with_split(F, d, split), phi(d, F)) << d.to_string();
        }
}

TEST(Phi, LinearAndSymmetric)
{
    auto F = shuffle_mul(shuffle_mul(gen(3, 1, 2), gen(3, 1, 0)), gen(3, 2, 1));
    auto G = shuffle_mul(shuffle_mul(gen(3, 2, 0), gen(3, 1, 1)), gen(3, 1, 1));
    const Rational a(3, 2), b(-5);
    for (const auto& d : enumerate_kp(F.grading())) {
        EXPECT_EQ(phi(d, a * F + b * G), phi(d, F) * a + phi(d, G) * b);
        EXPECT_TRUE(is_specialized_symmetric(phi(d, F), d));
        EXPECT_TRUE(is_specialized_symmetric(xi(d, F), d));
    }
}

TEST(GFactors, Examples)
{
    EXPECT_EQ(to_string(g_beta({1, 1}, 3, Q)), "1");
    EXPECT_EQ(g_beta({1, 2}, 2, Q), P("(w[1,2,1]-w[1,2,2]+1)*(w[1,2,2]-w[1,2,1]+1)"));
    EXPECT_EQ(to_string(g_beta({1, 2}, 1, Q)), "1");
    EXPECT_EQ(g_cross({1, 1}, {2, 2}, 1, 1, Q), P("w[1,1,1]-w[2,2,1]"));
    EXPECT_EQ(g_cross({1, 1}, {1, 2}, 1, 1, Q), P("w[1,1,1]-w[1,2,1]+1"));
    EXPECT_EQ(to_string(g_cross({1, 1}, {3, 3}, 1, 1, Q)), "1");
    EXPECT_THROW(g_cross({2, 2}, {1, 1}, 1, 1, Q), invalid_input);
}

TEST(PTilde, Examples)
{
    EXPECT_EQ(p_tilde(Partition({3}), {2, 3}, Q), P("(w[2,3,1]-1)^3"));
    EXPECT_EQ(p_tilde(Partition({1, 0}), {1, 1}, Q), P("w[1,1,1]+w[1,1,2]"));
    EXPECT_EQ(to_string(p_tilde(Partition({0, 0}), {1, 1}, Q)), "2");
}

TEST(PTilde, ShiftedRankOneImage)
{
    // For beta = [1,1], P~_lambda is the rank-one shuffle image of the
    // ordered product, shifted by x -> w - 1/2.
    for (const auto& lambda : partitions_up_to(3, 3)) {
        auto acc = ShuffleElement<Rational>::unit(2, Q);
        for (unsigned part : lambda.parts())
            acc = shuffle_mul(acc, gen(2, 1, part));
        Substitution<Rational> sigma;
        for (unsigned s = 1; s <= lambda.length(); ++s)
            sigma.emplace(Variable::x(1, s), P("-1/2") + Polynomial<Rational>::var(Variable::w(1, 1, s), Rational(1)));
        EXPECT_EQ(p_tilde(lambda, {1, 1}, Q), substitute(acc.numerator(), sigma)) << lambda.to_string();
    }
}

TEST(Xi, Examples)
{
    auto F = shuffle_mul(gen(3, 1, 1), gen(3, 2, 0));
    const auto d = kp("{[1,1]:1, [2,2]:1}", 3);
    EXPECT_EQ(xi(d, F), phi(d, F));

    auto root = psi_root_vector(3, {1, 2}, 0, Q);
    auto sq = shuffle_mul(root, root);
    auto reduced = xi(kp("{[1,2]:2}", 3), sq);
    EXPECT_FALSE(reduced.is_zero());
    EXPECT_EQ(reduced.degree(), 0);
    EXPECT_TRUE(xi(kp("{[1,1]:1}", 3), F).is_zero());
}

TEST(WheelP, Examples)
{
    const auto d3 = parse_kostant_partition("{[1,1]:3}", 2);
    const ShuffleElement<ModP> one(Grading({3}), Polynomial<ModP>(F3(1)), F3);
    EXPECT_FALSE(check_wheel_p_spec(d3, one));
    EXPECT_FALSE(is_in_w_tilde(one));
    for (unsigned r1 = 0; r1 <= 2; ++r1)
        for (unsigned r2 = 0; r2 <= 2; ++r2)
            for (unsigned r3 = 0; r3 <= 2; ++r3) {
                auto F = shuffle_mul(shuffle_mul(psi_generator(2, 1, r1, F3), psi_generator(2, 1, r2, F3)),
                                     psi_generator(2, 1, r3, F3));
                EXPECT_TRUE(check_wheel_p_spec(d3, F));
            }
    // d_beta < p everywhere: vacuous.
    const ShuffleElement<ModP> two(Grading({2}), Polynomial<ModP>(F3(1)), F3);
    EXPECT_TRUE(check_wheel_p_spec(parse_kostant_partition("{[1,1]:2}", 2), two));
}

TEST(WheelP, ImagesLieInWTilde)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        auto acc = ShuffleElement<ModP>::unit(3, F3);
        for (unsigned s = 0; s < 4; ++s)
            acc = shuffle_mul(acc, psi_generator(3, 1 + static_cast<unsigned>(rng() % 2),
                                                 static_cast<unsigned>(rng() % 3), F3));
        EXPECT_TRUE(is_in_w_tilde(acc)) << to_string(acc.numerator());
    }
}

TEST(Vanishing, Examples)
{
    for (unsigned r = 0; r <= 2; ++r) {
        PBWExponent h(3, {{{{1, 1}, r}, 1}, {{{2, 2}, 2 - r}, 1}});
        auto rep = verify_vanishing(h, Q);
        EXPECT_EQ(rep.records.size(), 1U);
        EXPECT_TRUE(rep.passed());
    }
    EXPECT_TRUE(verify_vanishing(PBWExponent(3, {{{{1, 2}, 1}, 1}}), Q).records.empty());

    PBWExponent h(3, {{{{1, 1}, 1}, 1}, {{{1, 1}, 0}, 1}, {{{2, 2}, 0}, 1}});
    std::size_t smaller = 0;
    for (const auto& d : enumerate_kp(h.gr()))
        smaller += d < h.deg();
    auto rep = verify_vanishing(h, Q);
    EXPECT_EQ(rep.records.size(), smaller);
    EXPECT_TRUE(rep.passed());
}

TEST(Factorization, Examples)
{
    auto res = factorization_check(PBWExponent(3, {{{{1, 1}, 1}, 1}, {{{2, 2}, 0}, 1}}), Q);
    EXPECT_EQ(res.lhs, P("(w[1,1,1]-1/2)*(w[1,1,1]-w[2,2,1])"));
    EXPECT_EQ(res.rhs, res.lhs);
    ASSERT_TRUE(res.scalar);
    EXPECT_EQ(*res.scalar, Rational(1));

    auto root = factorization_check(PBWExponent(3, {{{{1, 2}, 0}, 1}}), Q);
    EXPECT_EQ(to_string(root.lhs), "-1");
    ASSERT_TRUE(root.scalar);
    EXPECT_EQ(*root.scalar, Rational(-1));
    EXPECT_TRUE(root.matches);
}

TEST(Factorization, RankOneIsTheKthPowerLemma)
{
    for (unsigned r = 0; r <= 2; ++r)
        for (unsigned k = 1; k <= 4; ++k) {
            auto res = factorization_check(PBWExponent(2, {{{{1, 1}, r}, k}}), Q);
            // phi of k! (x_1 ... x_k)^r at x_s = w_s - 1/2.
            Polynomial<Rational> expected(Rational(1));
            long factorial = 1;
            for (unsigned s = 1; s <= k; ++s) {
                factorial *= s;
                expected *= (Polynomial<Rational>::var(Variable::w(1, 1, s), Rational(1)) + P("-1/2")).pow(r == 0 ? 1 : r);
            }
            if (r == 0)
                expected = Polynomial<Rational>(Rational(1));
            EXPECT_EQ(res.lhs, expected * Rational(factorial));
            EXPECT_TRUE(res.matches);
        }
}

TEST(Factorization, DeskScaleRange)
{
    for (const auto& k : std::vector<std::vector<unsigned>>{{1, 1}, {2, 1}, {2, 2}})
        for (const auto& h : enumerate_pbw(Grading(k), 3, 3U)) {
            EXPECT_TRUE(verify_factorization(h, Q).passed()) << h.to_string();
            EXPECT_TRUE(verify_factorization(h, F3).passed()) << h.to_string();
            EXPECT_TRUE(verify_vanishing(h, Q).passed()) << h.to_string();
        }
}

TEST(Specialization, DividedPowerProductsAreHalfIntegral)
{
    auto F = shuffle_mul(divided_power_image(3, 1, 1, 2, Q), divided_power_image(3, 2, 2, 2, Q));
    for (const auto& d : enumerate_kp(F.grading()))
        EXPECT_TRUE(coeffs_in_half_integers(phi(d, F))) << d.to_string();
}

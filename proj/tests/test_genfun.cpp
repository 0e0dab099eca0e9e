#include "tetra/genfun.hpp"

#include "tetra/identities.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tetra;

namespace {

const GaussianInt I = GaussianInt::i();
const GPoly Q4 = tetranacci_denominator();
const GPoly Y4 = bisected_denominator();

GPoly random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> d(-50, 50);
    std::vector<GaussianInt> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(d(rng), d(rng));
    return GPoly(c);
}

}  // namespace

TEST(GPoly, Canonical) {
    EXPECT_EQ(GPoly({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(GPoly({0, 0}).degree(), -1);
    EXPECT_TRUE(GPoly().is_zero());
    EXPECT_EQ(GPoly({1, 1}) - GPoly({1, 1}), GPoly());
    EXPECT_EQ(GPoly({1, 1}) * GPoly({1, -1}), GPoly({1, 0, -1}));
    EXPECT_EQ(GPoly({1, 2, 3}).reflect(), GPoly({1, -2, 3}));
    EXPECT_EQ(GaussianInt(0, 2) * GPoly({1, I}), GPoly({GaussianInt(0, 2), -2}));
    EXPECT_EQ(GPoly({5})[7], GaussianInt());
}

TEST(GPoly, Rendering) {
    EXPECT_EQ(to_string(GPoly()), "0");
    EXPECT_EQ(to_string(Q4), "1-x-x^2-x^3-x^4");
    EXPECT_EQ(to_string(GPoly({0, GaussianInt(1, 1), GaussianInt(1, -1), -I})), "(1+i)x+(1-i)x^2-ix^3");
    EXPECT_EQ(to_string(GPoly({GaussianInt(4, -1), GaussianInt(-3, 5)}), 'y'), "(4-i)+(-3+5i)y");
    EXPECT_EQ(to_string(GPoly({0, 2, I})), "2x+ix^2");
}

TEST(GenFun, DisplayedForms) {
    EXPECT_EQ(gf_for(tetranacci(), false).num(), GPoly({0, 1}));
    EXPECT_EQ(gf_for(tetranacci(), false).den(), Q4);
    EXPECT_EQ(gf_for(tetranacci_lucas(), false).num(), GPoly({4, -3, -2, -1}));
    EXPECT_EQ(gf_for(tetranacci(), true).num(), GPoly({0, 1, I}));
    EXPECT_EQ(gf_for(tetranacci_lucas(), true).num(),
              GPoly({GaussianInt(4, -1), -GaussianInt(3, -5), -GaussianInt(2, 2), -GaussianInt(1, 1)}));
    for (NamedSeq s : {NamedSeq::M, NamedSeq::R})
        for (bool g : {false, true}) EXPECT_TRUE(gf_equal(gf_for(named(s), g), tabulated_gf(s, g)));
}

TEST(GenFun, Coefficients) {
    const auto m = coeffs(gf_for(tetranacci(), false), 6);
    EXPECT_EQ(m, (std::vector<GaussianInt>{0, 1, 1, 2, 4, 8}));
    EXPECT_EQ(coeffs(RationalGF(GPoly(), Q4), 3), (std::vector<GaussianInt>{0, 0, 0}));
    EXPECT_EQ(coeffs(gf_for(tetranacci_lucas(), true), 4),
              (std::vector<GaussianInt>{GaussianInt(4, -1), GaussianInt(1, 4), GaussianInt(3, 1), GaussianInt(7, 3)}));
    EXPECT_TRUE(coeffs(gf_for(tetranacci(), false), 0).empty());
}

TEST(GenFun, CoefficientsMatchTerms) {
    auto specs = sample_specs(4, 5, 1'000'000);
    specs.push_back(tetranacci());
    specs.push_back(tetranacci_lucas());
    for (const auto& s : specs) {
        const auto plain = coeffs(gf_for(s, false), 200);
        const auto gauss = coeffs(gf_for(s, true), 200);
        for (long n = 0; n < 200; ++n) {
            EXPECT_EQ(plain[static_cast<std::size_t>(n)], GaussianInt(term(s, n)));
            EXPECT_EQ(gauss[static_cast<std::size_t>(n)], gterm(s, n));
        }
    }
}

TEST(GenFun, NonUnitConstantTerm) {
    // 2 / (2 - 2x) = 1 + x + x^2 + ...
    EXPECT_EQ(coeffs(RationalGF(GPoly({2}), GPoly({2, -2})), 4), (std::vector<GaussianInt>{1, 1, 1, 1}));
    // (1+i) / ((1+i) - 2x) = sum (1-i)^n x^n
    EXPECT_EQ(coeffs(RationalGF(GPoly({GaussianInt(1, 1)}), GPoly({GaussianInt(1, 1), -2})), 3),
              (std::vector<GaussianInt>{1, GaussianInt(1, -1), GaussianInt(0, -2)}));
    // 1 / (2 - x) = 1/2 + ... is not integral.
    EXPECT_THROW(coeffs(RationalGF(GPoly({1}), GPoly({2, -1})), 2), ExpansionError);
    EXPECT_THROW(RationalGF(GPoly({1}), GPoly({0, 1})), ExpansionError);
    EXPECT_THROW(RationalGF(GPoly({1}), GPoly()), ExpansionError);
}

TEST(GenFun, Equality) {
    const RationalGF f(GPoly({0, 1}), GPoly({1, -1}));
    EXPECT_TRUE(gf_equal(f, f));
    EXPECT_TRUE(gf_equal(f, RationalGF(GPoly({0, 2}), GPoly({2, -2}))));
    EXPECT_FALSE(gf_equal(f, RationalGF(GPoly({0, 1}), GPoly({1, 1}))));
}

TEST(Bisection, DenominatorIdentity) {
    const GPoly prod = Q4 * Q4.reflect();
    std::vector<GaussianInt> even;
    for (std::size_t k = 0; k < prod.coeffs().size(); ++k) {
        if (k % 2 == 0)
            even.push_back(prod[k]);
        else
            EXPECT_TRUE(prod[k].is_zero()) << k;
    }
    EXPECT_EQ(GPoly(even), Y4);
    EXPECT_EQ(Y4, GPoly({1, -3, -3, 1, 1}));
}

TEST(Bisection, DisplayedForms) {
    EXPECT_TRUE(gf_equal(bisect(gf_for(tetranacci(), false), Parity::Even), RationalGF(GPoly({0, 1, 1}), Y4)));
    EXPECT_TRUE(gf_equal(bisect(gf_for(tetranacci(), true), Parity::Even),
                         RationalGF(GPoly({0, GaussianInt(1, 1), GaussianInt(1, -1), -I}), Y4)));
    EXPECT_TRUE(gf_equal(bisect(gf_for(tetranacci_lucas(), true), Parity::Odd),
                         RationalGF(GPoly({GaussianInt(1, 4), GaussianInt(4, -9), GaussianInt(2, -6), GaussianInt(1, 1)}), Y4)));
    EXPECT_EQ(closed_even_odd(tetranacci(), Parity::Odd, false).num(), GPoly({1, -1, -1}));
    EXPECT_EQ(closed_even_odd(tetranacci_lucas(), Parity::Even, false).num(), GPoly({4, -9, -6, 1}));
    EXPECT_EQ(closed_even_odd(tetranacci(), Parity::Odd, true).num(),
              GPoly({1, -GaussianInt(1, -1), -GaussianInt(1, -1)}));
    // Bisection keeps the displayed denominator exactly, not a multiple of it.
    EXPECT_EQ(bisect(gf_for(tetranacci(), true), Parity::Even).den(), Y4);
    EXPECT_EQ(bisect(gf_for(tetranacci(), true), Parity::Even).num(),
              GPoly({0, GaussianInt(1, 1), GaussianInt(1, -1), -I}));
}

TEST(Bisection, AllTabulatedForms) {
    for (NamedSeq s : {NamedSeq::M, NamedSeq::R})
        for (bool g : {false, true})
            for (Parity p : {Parity::Even, Parity::Odd}) {
                const RationalGF tab = tabulated_even_odd(s, p, g);
                EXPECT_TRUE(gf_equal(bisect(gf_for(named(s), g), p), tab));
                EXPECT_TRUE(gf_equal(closed_even_odd(named(s), p, g), tab));
            }
}

TEST(Bisection, ClosedFormsForRandomSpecs) {
    for (const auto& s : sample_specs(8, 17, 1'000'000))
        for (bool g : {false, true})
            for (Parity p : {Parity::Even, Parity::Odd})
                EXPECT_TRUE(gf_equal(bisect(gf_for(s, g), p), closed_even_odd(s, p, g))) << to_string(s);
}

TEST(Bisection, DefiningPropertyOnArbitraryRationals) {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 25; ++t) {
        GPoly den = random_poly(rng, 1 + t % 5);
        std::vector<GaussianInt> c = den.coeffs();
        c[0] = t % 2 ? GaussianInt(1) : -GaussianInt::i();  // unit constant term
        den = GPoly(c);
        const RationalGF f(random_poly(rng, t % 6), den);
        const auto all = coeffs(f, 40);
        const auto even = coeffs(bisect(f, Parity::Even), 20);
        const auto odd = coeffs(bisect(f, Parity::Odd), 20);
        for (std::size_t n = 0; n < 20; ++n) {
            EXPECT_EQ(even[n], all[2 * n]);
            EXPECT_EQ(odd[n], all[2 * n + 1]);
        }
    }
}

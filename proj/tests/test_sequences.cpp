#include "tetra/sequences.hpp"

#include "tables.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace tetra;

TEST(Sequences, TetranacciTable) {
    for (long k = 0; k < 14; ++k) {
        EXPECT_EQ(term(tetranacci(), k), tables::M_pos[k]) << "n=" << k;
        EXPECT_EQ(term(tetranacci(), -k), tables::M_neg[k]) << "n=" << -k;
    }
}

TEST(Sequences, TetranacciLucasTable) {
    for (long k = 0; k < 14; ++k) {
        EXPECT_EQ(term(tetranacci_lucas(), k), tables::R_pos[k]) << "n=" << k;
        EXPECT_EQ(term(tetranacci_lucas(), -k), tables::R_neg[k]) << "n=" << -k;
    }
}

TEST(Sequences, ShiftedTable) {
    for (long k = 0; k < 15; ++k) {
        EXPECT_EQ(term(shifted_tetranacci(), k), tables::U_pos[k]) << "n=" << k;
        EXPECT_EQ(term(shifted_tetranacci(), -k), tables::U_neg[k]) << "n=" << -k;
    }
}

TEST(Sequences, GaussianTables) {
    for (long k = 0; k < 10; ++k) {
        EXPECT_EQ(gterm(tetranacci(), k), parse_gaussian(tables::GM_pos[k])) << "n=" << k;
        EXPECT_EQ(gterm(tetranacci(), -k), parse_gaussian(tables::GM_neg[k])) << "n=" << -k;
    }
    for (long k = 0; k < 9; ++k) {
        EXPECT_EQ(gterm(tetranacci_lucas(), k), parse_gaussian(tables::GR_pos[k])) << "n=" << k;
        EXPECT_EQ(gterm(tetranacci_lucas(), -k), parse_gaussian(tables::GR_neg[k])) << "n=" << -k;
    }
}

TEST(Sequences, NamedSpecs) {
    EXPECT_EQ(named(NamedSeq::M), SeqSpec(0, 1, 1, 2));
    EXPECT_EQ(named(NamedSeq::R), SeqSpec(4, 1, 3, 7));
    EXPECT_EQ(named(NamedSeq::U), SeqSpec(0, 0, 1, 1));
    EXPECT_EQ(to_string(tetranacci_lucas()), "(4,1,3,7)");
}

TEST(Sequences, AllZeroSpecRejected) {
    EXPECT_THROW(SeqSpec(0, 0, 0, 0), std::invalid_argument);
    const SeqSpec zero = SeqSpec::unchecked(0, 0, 0, 0);
    EXPECT_EQ(term(zero, 100), 0);
    EXPECT_EQ(term(zero, -100), 0);
}

TEST(Sequences, GaussianInitials) {
    const SeqSpec s(5, -2, 7, 3);
    const auto g = gaussian_initials(s);
    // GV_0 = c0 + i(c3 - c2 - c1 - c0)
    EXPECT_EQ(g[0], GaussianInt(5, 3 - 7 + 2 - 5));
    for (long k = 0; k < 4; ++k) EXPECT_EQ(g[static_cast<std::size_t>(k)], gterm(s, k));
    EXPECT_EQ(gaussian_initials(tetranacci())[0], GaussianInt());
    EXPECT_EQ(gaussian_initials(tetranacci_lucas())[1], GaussianInt(1, 4));
}

TEST(Sequences, RecurrenceHoldsEverywhere) {
    const SeqSpec specs[] = {tetranacci(), tetranacci_lucas(), SeqSpec(-999999, 123456, 0, 42)};
    for (const auto& s : specs) {
        const auto v = term_range(s, -64, 256);
        for (std::size_t k = 4; k < v.size(); ++k) EXPECT_EQ(v[k], v[k - 1] + v[k - 2] + v[k - 3] + v[k - 4]);
        const auto g = gterm_range(s, -64, 256);
        for (std::size_t k = 4; k < g.size(); ++k) EXPECT_EQ(g[k], g[k - 1] + g[k - 2] + g[k - 3] + g[k - 4]);
    }
}

TEST(Sequences, RangeMatchesPointwise) {
    const SeqSpec s(3, -1, 4, -1);
    for (auto [lo, hi] : {std::pair{-40L, -30L}, std::pair{-5L, 5L}, std::pair{7L, 7L}, std::pair{30L, 45L}}) {
        const auto v = term_range(s, lo, hi);
        const auto g = gterm_range(s, lo, hi);
        ASSERT_EQ(v.size(), static_cast<std::size_t>(hi - lo + 1));
        for (long n = lo; n <= hi; ++n) {
            EXPECT_EQ(v[static_cast<std::size_t>(n - lo)], term(s, n)) << n;
            EXPECT_EQ(g[static_cast<std::size_t>(n - lo)], gterm(s, n)) << n;
        }
    }
    EXPECT_THROW(term_range(s, 2, 1), std::invalid_argument);
    EXPECT_THROW(gterm_range(s, 2, 1), std::invalid_argument);
}

TEST(Sequences, Linearity) {
    const SeqSpec a(1, 2, 3, 4), b(-7, 0, 5, 11);
    const SeqSpec sum = SeqSpec::unchecked(-6, 2, 8, 15);
    for (long n = -30; n <= 60; n += 7) EXPECT_EQ(term(sum, n), term(a, n) + term(b, n)) << n;
}

TEST(Sequences, ShiftedIsTetranacciShifted) {
    for (long n = -20; n <= 20; ++n) EXPECT_EQ(term(shifted_tetranacci(), n + 1), term(tetranacci(), n));
}

TEST(Sequences, LargeIndexDigits) {
    // M_n grows like alpha^n with log10(alpha) ~ 0.285.
    const BigInt m = term(tetranacci(), 10000);
    EXPECT_EQ(m.get_str().size(), 2850u);  // independent big-integer oracle
    EXPECT_EQ(term(tetranacci(), 10001), term(tetranacci(), 10000) + term(tetranacci(), 9999) +
                                             term(tetranacci(), 9998) + term(tetranacci(), 9997));
}

// Copyright 2026 The gaglrc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gaglrc/linear_code.hpp"
#include "gaglrc/matrix.hpp"

using namespace gaglrc;

namespace {

// Independent oracle: encode every nonzero message from scratch.
int naive_min_distance(const LinearCode& c) {
    const Field& F = c.field();
    const std::size_t k = c.dimension(), n = c.length();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= F.order();
    int best = static_cast<int>(n) + 1;
    std::vector<Symbol> m(k);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (auto& s : m) {
            s = static_cast<Symbol>(v % F.order());
            v /= F.order();
        }
        int w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Symbol acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc = F.add(acc, F.mul(m[i], c.generator()(i, j)));
            w += acc != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

Matrix random_full_rank(const Field& F, std::size_t k, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<Symbol> pick(0, F.order() - 1);
    while (true) {
        Matrix m(F, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = pick(rng);
        if (m.rank() == k) return m;
    }
}

}  // namespace

TEST(Matrix, RrefAndRank) {
    const Field F = Field::create(3, 1);
    Matrix m(F, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(m.rank(), 2u);
    const auto piv = m.rref();
    EXPECT_EQ(piv, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(m, Matrix(F, {{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST(Matrix, SolveLeft) {
    const Field F = Field::create(5, 1);
    const Matrix a(F, {{1, 2}, {3, 4}});
    const std::vector<Symbol> x = {2, 3};
    const auto b = a.left_multiply(x);
    const auto got = solve_left(a, b);
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, x);
    const Matrix singular(F, {{1, 2}, {2, 4}});
    EXPECT_FALSE(solve_left(singular, std::vector<Symbol>{1, 0}));
}

TEST(Matrix, TextRoundTrip) {
    const Field F = Field::create(2, 2);
    const Matrix m(F, {{0, 1, 2}, {3, 2, 1}});
    EXPECT_EQ(parse_matrix(format_matrix(m)), m);
    EXPECT_THROW(Matrix(F, {{0, 1}, {1}}), std::invalid_argument);
    EXPECT_THROW(Matrix(F, {{0, 4}}), std::invalid_argument);
}

TEST(LinearCode, RejectsRankDeficientGenerator) {
    const Field F = Field::create(3, 1);
    EXPECT_THROW(LinearCode(Matrix(F, {{1, 1}, {2, 2}})), std::invalid_argument);
    EXPECT_THROW(rs_code(F, 4, 2), std::invalid_argument);
    EXPECT_THROW(rs_code(F, 3, 0), std::invalid_argument);
    const std::vector<Symbol> repeated = {1, 1, 2};
    EXPECT_THROW(rs_code(F, repeated, 2), std::invalid_argument);
}

TEST(LinearCode, ReedSolomonGeneratorIsVandermonde) {
    const Field F = Field::create(3, 1);
    const LinearCode c = rs_code(F, 3, 2);
    EXPECT_EQ(c.generator(), Matrix(F, {{1, 1, 1}, {0, 1, 2}}));
    EXPECT_EQ(c.exact_distance(), 2);
}

TEST(LinearCode, ReedSolomonIsMds) {
    for (auto q : {2u, 3u, 4u, 5u}) {
        const Field F = Field::of_order(q);
        for (std::size_t n = 1; n <= q; ++n)
            for (std::size_t k = 1; k <= n; ++k) {
                const LinearCode c = rs_code(F, n, k);
                EXPECT_EQ(min_distance_exhaustive(c), static_cast<int>(n - k + 1)) << q << ' ' << n << ' ' << k;
                EXPECT_EQ(naive_min_distance(c), static_cast<int>(n - k + 1));
            }
    }
}

TEST(LinearCode, ParityCheckCode) {
    for (auto q : {2u, 3u, 4u})
        for (std::size_t r = 1; r <= 4; ++r) {
            const LinearCode c = parity_check_code(Field::of_order(q), r);
            EXPECT_EQ(c.length(), r + 1);
            EXPECT_EQ(c.dimension(), r);
            EXPECT_EQ(min_distance_exhaustive(c), 2);
            std::vector<Symbol> msg(r, 1);
            const auto cw = c.encode(msg);
            Symbol s = 0;
            for (Symbol v : cw) s = c.field().add(s, v);
            EXPECT_EQ(s, 0u);
        }
}

TEST(MinDistance, MatchesNaiveOracleOnRandomCodes) {
    std::mt19937 rng(2026);
    for (auto q : {2u, 3u, 4u, 5u})
        for (int t = 0; t < 15; ++t) {
            const Field F = Field::of_order(q);
            const std::size_t k = 1 + rng() % (q == 2 ? 8 : 4);
            const std::size_t n = k + rng() % 6;
            const LinearCode c(random_full_rank(F, k, n, rng));
            ASSERT_EQ(min_distance_exhaustive(c), naive_min_distance(c));
        }
}

TEST(MinDistance, ThreadCountDoesNotChangeResult) {
    std::mt19937 rng(5);
    const Field F = Field::create(3, 1);
    const LinearCode c(random_full_rank(F, 7, 14, rng));
    const int d1 = min_distance_exhaustive(c, kDefaultSearchBudget, 1);
    for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(min_distance_exhaustive(c, kDefaultSearchBudget, t), d1);
}

TEST(MinDistance, BudgetIsEnforced) {
    const LinearCode c = rs_code(Field::create(5, 1), 5, 3);
    EXPECT_THROW(min_distance_exhaustive(c, 124), BudgetExceeded);
    EXPECT_NO_THROW(min_distance_exhaustive(c, 125));
}

TEST(ParityCheck, AnnihilatesGenerator) {
    std::mt19937 rng(9);
    for (auto q : {2u, 3u, 4u, 9u}) {
        const Field F = Field::of_order(q);
        const LinearCode c(random_full_rank(F, 4, 9, rng));
        const Matrix h = parity_check_matrix(c);
        EXPECT_EQ(h.rows(), 5u);
        EXPECT_EQ(h.rank(), 5u);
        const Matrix prod = c.generator() * h.transposed();
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j) ASSERT_EQ(prod(i, j), 0u);
    }
}

TEST(DistanceBounds, AgreesWithExhaustiveSearch) {
    // Every code with q^k <= 3^10 drawn here: certification succeeds exactly when d >= claim.
    std::mt19937 rng(77);
    int certified3 = 0;
    for (auto q : {2u, 3u, 4u})
        for (int t = 0; t < 60; ++t) {
            const Field F = Field::of_order(q);
            const std::size_t kmax = q == 2 ? 15 : q == 3 ? 10 : 7;
            const std::size_t k = 1 + rng() % kmax;
            const std::size_t n = k + 1 + rng() % 8;
            const LinearCode c(random_full_rank(F, k, n, rng));
            const int d = min_distance_exhaustive(c);
            for (int claim : {2, 3}) {
                if (d >= claim) {
                    const DistanceBounds b = distance_bounds(c, claim);
                    EXPECT_EQ(b.lower, claim);
                    EXPECT_LE(b.lower, d);
                    certified3 += claim == 3;
                } else {
                    EXPECT_THROW(distance_bounds(c, claim), CertificationFailure);
                }
            }
        }
    EXPECT_GT(certified3, 10);
}

TEST(DistanceBounds, WitnessGivesUpperBound) {
    const Field F = Field::create(5, 1);
    const LinearCode c = rs_code(F, 5, 3);
    const std::vector<Symbol> witness = {1, 0, 0};  // constant polynomial: weight 5
    const auto b = distance_bounds(c, 3, witness);
    EXPECT_EQ(b.lower, 3);
    ASSERT_TRUE(b.upper);
    EXPECT_EQ(*b.upper, 5);
    EXPECT_THROW(distance_bounds(c, 3, std::vector<Symbol>{0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(distance_bounds(c, 4), std::invalid_argument);
}

TEST(DistanceBounds, ReportsDependentColumns) {
    const Field F = Field::create(3, 1);
    // The codeword (0,1,0,1) has weight 2.
    const LinearCode c(Matrix(F, {{1, 0, 2, 1}, {0, 1, 0, 1}}));
    try {
        distance_bounds(c, 3);
        FAIL() << "expected CertificationFailure";
    } catch (const CertificationFailure& e) {
        EXPECT_EQ(e.positions().size(), 2u);
    }
}

TEST(Recovery, RecoversUpToDMinusOneErasures) {
    std::mt19937 rng(4);
    for (auto q : {3u, 4u, 7u}) {
        const Field F = Field::of_order(q);
        const LinearCode c = rs_code(F, q, 3);
        std::uniform_int_distribution<Symbol> pick(0, q - 1);
        for (int t = 0; t < 50; ++t) {
            std::vector<Symbol> m(3);
            for (auto& s : m) s = pick(rng);
            const auto cw = c.encode(m);
            std::vector<std::optional<Symbol>> rx(cw.begin(), cw.end());
            std::vector<std::size_t> idx(q);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (std::size_t e = 0; e < q - 3; ++e) rx[idx[e]].reset();
            const Recovery r = information_set_recover(c, rx);
            EXPECT_EQ(r.message, m);
            EXPECT_EQ(r.positions.size(), 3u);
            EXPECT_TRUE(std::is_sorted(r.positions.begin(), r.positions.end()));
        }
    }
}

TEST(Recovery, ChoosesLexFirstInformationSet) {
    const Field F = Field::create(3, 1);
    // Columns 0 and 1 are proportional, so the lex-first basis is {0, 2}.
    const LinearCode c(Matrix(F, {{1, 2, 0, 1}, {0, 0, 1, 1}}));
    const auto cw = c.encode(std::vector<Symbol>{2, 1});
    std::vector<std::optional<Symbol>> rx(cw.begin(), cw.end());
    EXPECT_EQ(information_set_recover(c, rx).positions, (std::vector<std::size_t>{0, 2}));
}

TEST(Recovery, FailureModes) {
    const Field F = Field::create(3, 1);
    const LinearCode c = rs_code(F, 3, 2);
    std::vector<std::optional<Symbol>> rx = {std::nullopt, std::nullopt, Symbol{1}};
    EXPECT_THROW(information_set_recover(c, rx), RecoveryImpossible);
    std::vector<std::optional<Symbol>> bad = {Symbol{1}, Symbol{1}, Symbol{2}};  // not a codeword
    EXPECT_THROW(information_set_recover(c, bad), std::invalid_argument);
    std::vector<std::optional<Symbol>> short_word = {Symbol{1}};
    EXPECT_THROW(information_set_recover(c, short_word), std::invalid_argument);
}

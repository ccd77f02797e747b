// Copyright 2026 The gaglrc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gaglrc/function_field.hpp"
#include "gaglrc/polynomial.hpp"

using namespace gaglrc;

namespace {

int mobius(unsigned n) {
    int mu = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// Gauss' count of monic irreducibles of degree r over GF(q).
std::int64_t necklace(std::int64_t q, unsigned r) {
    std::int64_t sum = 0;
    for (unsigned d = 1; d <= r; ++d) {
        if (r % d) continue;
        std::int64_t pw = 1;
        for (unsigned i = 0; i < r / d; ++i) pw *= q;
        sum += mobius(d) * pw;
    }
    return sum / r;
}

Polynomial random_poly(const Field& F, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<Symbol> pick(0, F.order() - 1);
    std::vector<Symbol> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = pick(rng);
    return Polynomial(F, c);
}

}  // namespace

TEST(Polynomial, DivmodIdentity) {
    std::mt19937 rng(11);
    for (auto q : {3u, 4u, 8u, 9u}) {
        const Field F = Field::of_order(q);
        for (int t = 0; t < 200; ++t) {
            const Polynomial a = random_poly(F, 7, rng);
            Polynomial b = random_poly(F, 3, rng);
            if (b.is_zero()) continue;
            const auto [quo, r] = divmod(a, b);
            EXPECT_EQ(quo * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
        }
    }
}

TEST(Polynomial, DivisionByZeroThrows) {
    const Field F = Field::create(3, 1);
    EXPECT_THROW(divmod(Polynomial(F, {1, 1}), Polynomial(F)), std::domain_error);
}

TEST(Polynomial, GcdIsMonicCommonDivisor) {
    const Field F = Field::create(5, 1);
    const Polynomial g(F, {2, 1});                                  // x + 2
    const Polynomial a = g * Polynomial(F, {2, 0, 1});              // (x+2)(x^2+2)
    const Polynomial b = g * Polynomial(F, {3, 1}).scaled(4);       // 4(x+2)(x+3)
    EXPECT_EQ(gcd(a, b), g);
}

TEST(Polynomial, TextRoundTrip) {
    const Field F3 = Field::create(3, 1);
    const Polynomial f(F3, {2, 2, 1});
    EXPECT_EQ(to_pretty(f), "2 + 2*x + x^2");
    EXPECT_EQ(to_compact(f), "2,2,1");
    EXPECT_EQ(parse_polynomial(F3, "2,2,1"), f);
    EXPECT_EQ(parse_polynomial(F3, "x^2 + 2*x + 2"), f);
    const Field F4 = Field::create(2, 2);
    const Polynomial g(F4, {2, 0, 1});
    EXPECT_EQ(parse_polynomial(F4, to_compact(g)), g);
    EXPECT_THROW(parse_polynomial(F3, "2,,1"), std::invalid_argument);
    EXPECT_THROW(parse_polynomial(F3, "5,1"), std::invalid_argument);
}

TEST(Places, CountsMatchGaussFormula) {
    for (auto q : {3u, 4u, 5u, 7u})
        for (unsigned r = 1; r <= (q <= 4 ? 4u : 3u); ++r) {
            const Field F = Field::of_order(q);
            const auto places = enumerate_places(F, r);
            const std::int64_t finite = necklace(q, r);
            EXPECT_EQ(static_cast<std::int64_t>(places.size()), finite + (r == 1 ? 1 : 0)) << "q=" << q << " r=" << r;
        }
}

TEST(Places, AreDistinctMonicIrreducibleAndOrdered) {
    const Field F = Field::create(2, 2);
    const auto places = enumerate_places(F, 2);
    std::set<std::vector<Symbol>> seen;
    std::vector<Symbol> prev_key;
    for (const auto& p : places) {
        ASSERT_FALSE(p.is_infinite());
        EXPECT_EQ(p.degree(), 2);
        EXPECT_TRUE(p.poly().is_monic());
        // No root in GF(4) means irreducible for degree 2.
        for (Symbol a = 0; a < 4; ++a) EXPECT_NE(p.poly().evaluate(a), 0u);
        std::vector<Symbol> key(p.poly().coeffs().begin(), p.poly().coeffs().end() - 1);
        EXPECT_TRUE(seen.insert(key).second);
        if (!prev_key.empty()) EXPECT_LT(prev_key, key);
        prev_key = key;
    }
}

TEST(Places, TernaryQuadraticsInLexOrder) {
    const auto places = enumerate_places(Field::create(3, 1), 2);
    ASSERT_EQ(places.size(), 3u);
    EXPECT_EQ(to_compact(places[0].poly()), "1,0,1");
    EXPECT_EQ(to_compact(places[1].poly()), "2,1,1");
    EXPECT_EQ(to_compact(places[2].poly()), "2,2,1");
}

TEST(Places, DegreeOneIncludesInfinityLast) {
    const auto places = enumerate_places(Field::create(5, 1), 1);
    ASSERT_EQ(places.size(), 6u);
    EXPECT_TRUE(places.back().is_infinite());
    EXPECT_EQ(places.back().to_string(), "P_inf");
}

TEST(Places, FiniteRejectsReducibleOrNonMonic) {
    const Field F = Field::create(3, 1);
    EXPECT_THROW(Place::finite(Polynomial(F, {2, 0, 1})), std::invalid_argument);  // x^2 - 1
    EXPECT_THROW(Place::finite(Polynomial(F, {2, 0, 2})), std::invalid_argument);  // not monic
    EXPECT_NO_THROW(Place::finite(Polynomial(F, {1, 0, 1})));
}

TEST(RiemannRoch, MonomialBasis) {
    const Field F = Field::create(3, 1);
    const auto b = riemann_roch_basis(F, Divisor{4});
    ASSERT_EQ(b.size(), 5u);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i].degree(), static_cast<int>(i));
}

TEST(Residue, IsReductionModuloPlace) {
    const Field F = Field::create(3, 1);
    const Place P = Place::finite(parse_polynomial(F, "2,2,1"));
    // x^2 = -2x - 2 = x + 1 mod P
    EXPECT_EQ(residue_at_place(Polynomial::monomial(F, 2), P), (std::vector<Symbol>{1, 1}));
    EXPECT_EQ(residue_at_place(Polynomial::monomial(F, 0), P), (std::vector<Symbol>{1, 0}));
    EXPECT_THROW(residue_at_place(Polynomial::monomial(F, 0), Place::infinity(F)), std::invalid_argument);
}

TEST(Residue, IsRingHomomorphism) {
    std::mt19937 rng(3);
    const Field F = Field::create(2, 2);
    const auto places = enumerate_places(F, 3);
    for (int t = 0; t < 100; ++t) {
        const Place& P = places[static_cast<std::size_t>(t) % places.size()];
        const Polynomial a = random_poly(F, 6, rng), b = random_poly(F, 5, rng);
        auto as_poly = [&](const std::vector<Symbol>& v) { return Polynomial(F, v); };
        EXPECT_EQ(as_poly(residue_at_place(a + b, P)), as_poly(residue_at_place(a, P)) + as_poly(residue_at_place(b, P)));
        EXPECT_EQ(as_poly(residue_at_place(a * b, P)),
                  (as_poly(residue_at_place(a, P)) * as_poly(residue_at_place(b, P))) % P.poly());
    }
}

TEST(Residue, NonzeroFunctionVanishesAtFewPlaces) {
    // deg f <= m and f != 0 vanishes at no more than floor(m/2) places of degree 2.
    const Field F = Field::create(3, 1);
    const auto places = enumerate_places(F, 2);
    for (int m = 0; m <= 6; ++m) {
        std::uint64_t total = 1;
        for (int i = 0; i <= m; ++i) total *= 3;
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            std::vector<Symbol> c;
            for (std::uint64_t v = idx; v; v /= 3) c.push_back(static_cast<Symbol>(v % 3));
            const Polynomial f(F, c);
            int zeros = 0;
            for (const auto& P : places) {
                const auto res = residue_at_place(f, P);
                const bool vanish = std::all_of(res.begin(), res.end(), [](Symbol s) { return s == 0; });
                EXPECT_EQ(vanish, (f % P.poly()).is_zero());
                zeros += vanish;
            }
            ASSERT_LE(zeros, m / 2) << to_pretty(f);
        }
    }
}

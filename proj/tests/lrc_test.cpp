// Copyright 2026 The gaglrc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "gaglrc/lrc.hpp"

using namespace gaglrc;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(GAGLRC_DATA_DIR) + "/golden/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Field f3() { return Field::create(3, 1); }

std::vector<Place> ternary_places_in_example_order() {
    const Field F = f3();
    return {Place::finite(parse_polynomial(F, "2,2,1")), Place::finite(parse_polynomial(F, "1,0,1")),
            Place::finite(parse_polynomial(F, "2,1,1"))};
}

GagLrcCode ternary_example() { return build_gag_lrc(f3(), ternary_places_in_example_order(), 4, rs_code(f3(), 3, 2)); }

}  // namespace

TEST(GagLrc, GoldenStages) {
    const GagLrcCode c = ternary_example();
    EXPECT_EQ(emit_stage(c, Stage::Residues), slurp("G0.txt"));
    EXPECT_EQ(emit_stage(c, Stage::Flattened), slurp("G1.txt"));
    EXPECT_EQ(emit_stage(c, Stage::InnerGenerator), slurp("G_RS.txt"));
    EXPECT_EQ(emit_stage(c, Stage::Generator), slurp("G.txt"));
}

TEST(GagLrc, ShapeAndBlocks) {
    const GagLrcCode c = ternary_example();
    EXPECT_EQ(c.length(), 9u);
    EXPECT_EQ(c.dimension(), 5u);
    EXPECT_EQ(c.locality(), 2);
    ASSERT_EQ(c.blocks().size(), 3u);
    EXPECT_EQ(c.blocks()[1].start, 3u);
    EXPECT_EQ(c.block_of(8), 2u);
    EXPECT_THROW(c.block_of(9), std::out_of_range);
}

TEST(GagLrc, BlockOfCodewordVanishesExactlyAtDividingPlaces) {
    // Row combination m is the function f = sum m_i x^i; block j is zero iff P_j | f.
    const GagLrcCode c = build_gag_lrc(f3(), enumerate_places(f3(), 2), 5, rs_code(f3(), 3, 2));
    std::mt19937 rng(1);
    std::uniform_int_distribution<Symbol> pick(0, 2);
    for (int t = 0; t < 200; ++t) {
        std::vector<Symbol> m(c.dimension());
        for (auto& s : m) s = pick(rng);
        const auto cw = c.base().encode(m);
        const Polynomial f(f3(), m);
        for (std::size_t b = 0; b < c.blocks().size(); ++b) {
            bool zero = true;
            for (std::size_t j = 0; j < 3; ++j) zero = zero && cw[c.blocks()[b].start + j] == 0;
            EXPECT_EQ(zero, (f % c.places()[b].poly()).is_zero());
        }
    }
}

TEST(GagLrc, PreconditionsAreChecked) {
    const Field F = f3();
    const auto places = ternary_places_in_example_order();
    const LinearCode rs = rs_code(F, 3, 2);
    EXPECT_THROW(build_gag_lrc(F, places, 6, rs), std::invalid_argument);  // deg G >= sum deg P
    EXPECT_THROW(build_gag_lrc(F, {places[0], places[0]}, 1, rs), std::invalid_argument);
    EXPECT_THROW(build_gag_lrc(F, {Place::infinity(F)}, 0, rs), std::invalid_argument);
    EXPECT_THROW(build_gag_lrc(F, places, 4, rs_code(F, 3, 1)), std::invalid_argument);
    EXPECT_THROW(build_gag_lrc(F, places, 4, LinearCode(Matrix(F, {{1, 0}, {0, 1}}))), std::invalid_argument);
    EXPECT_THROW(build_gag_lrc(F, places, 4, std::vector<LinearCode>{rs, rs}), std::invalid_argument);
    EXPECT_THROW(build_gag_lrc(F, {}, 0, std::vector<LinearCode>{}), std::invalid_argument);
    const Field F9 = Field::create(3, 2);
    EXPECT_THROW(build_gag_lrc(F, places, 4, rs_code(F9, 3, 2)), std::invalid_argument);
}

TEST(GagLrc, MixedDegreesAndInnerCodes) {
    const Field F = Field::create(2, 2);
    std::vector<Place> places = {enumerate_places(F, 1)[0], enumerate_places(F, 2)[0], enumerate_places(F, 3)[0]};
    std::vector<LinearCode> inner = {rs_code(F, 2, 1), parity_check_code(F, 2), rs_code(F, 4, 3)};
    GagLrcCode c = build_gag_lrc(F, places, 3, inner);
    EXPECT_EQ(c.length(), 2u + 3u + 4u);
    EXPECT_EQ(c.dimension(), 4u);
    const int d = min_distance_exhaustive(c.base());
    EXPECT_GE(d, gag_design_distance(c));
    EXPECT_EQ(verify_locality(c), 3);
}

TEST(GagLrc, DesignDistanceIsSoundOverGf4) {
    const Field F = Field::create(2, 2);
    const auto places = enumerate_places(F, 2);  // 6 places
    const LinearCode rs = rs_code(F, 3, 2);
    for (std::size_t s = 1; s <= 4; ++s) {
        std::vector<Place> sub(places.begin(), places.begin() + static_cast<std::ptrdiff_t>(s));
        for (std::uint32_t dg = 0; dg < 2 * s && dg <= 6; ++dg) {
            GagLrcCode c = build_gag_lrc(F, sub, dg, rs);
            const int d = min_distance_exhaustive(c.base());
            EXPECT_GE(d, 2 * (static_cast<int>(s) - static_cast<int>(dg) / 2)) << "s=" << s << " deg G=" << dg;
            EXPECT_GE(d, gag_design_distance(c));
        }
    }
}

TEST(Repair, RandomErasuresOverGf4Family) {
    FamilyCode fam = build_optimal_q_family(4);
    const Field& F = fam.code.field();
    std::mt19937 rng(12);
    std::uniform_int_distribution<Symbol> pick(0, 3);
    for (int t = 0; t < 100; ++t) {
        std::vector<Symbol> m(fam.code.dimension());
        for (auto& s : m) s = pick(rng);
        const auto cw = fam.code.base().encode(m);
        const std::size_t e = rng() % cw.size();
        auto damaged = cw;
        damaged[e] = F.add(damaged[e], 1);
        const RepairResult rr = repair_symbol(fam.code, damaged, e);
        EXPECT_EQ(rr.symbol, cw[e]);
        EXPECT_EQ(rr.recovery_set.size(), 2u);
        for (auto p : rr.recovery_set) {
            EXPECT_NE(p, e);
            EXPECT_EQ(fam.code.block_of(p), fam.code.block_of(e));
        }
    }
}

TEST(Repair, RejectsWrongLength) {
    const GagLrcCode c = ternary_example();
    const std::vector<Symbol> w(8, 0);
    EXPECT_THROW(repair_symbol(c, w, 0), std::invalid_argument);
}

TEST(Locality, ParityInnerCodeGivesDegree) {
    const Field F = f3();
    const auto places = enumerate_places(F, 3);
    const std::vector<Place> sub(places.begin(), places.begin() + 3);
    const GagLrcCode c = build_gag_lrc(F, sub, 4, parity_check_code(F, 3));
    EXPECT_EQ(verify_locality(c), 3);
    const auto sets = recovery_sets(c);
    ASSERT_EQ(sets.size(), 12u);
    EXPECT_EQ(sets[5], (std::vector<std::size_t>{4, 6, 7}));
}

TEST(Locality, CodeLocalityOfSmallCodes) {
    EXPECT_EQ(code_locality(rs_code(f3(), 3, 2)), 2);
    EXPECT_EQ(code_locality(parity_check_code(f3(), 4)), 4);
    // A repetition coordinate repairs from one symbol.
    EXPECT_EQ(code_locality(LinearCode(Matrix(f3(), {{1, 1, 0, 0}, {0, 0, 1, 1}}))), 1);
}

TEST(Family, Parameters) {
    for (std::uint64_t q : {3u, 4u, 5u}) {
        FamilyCode fam = build_optimal_q_family(q);
        const auto n = static_cast<std::int64_t>(3 * (q * q - q) / 2);
        const auto k = static_cast<std::int64_t>(q * q - q - 1);
        EXPECT_EQ(static_cast<std::int64_t>(fam.code.length()), n);
        EXPECT_EQ(static_cast<std::int64_t>(fam.code.dimension()), k);
        EXPECT_EQ(hamming_weight(fam.code.base().encode(fam.witness)), 3u);
        const ParamReport rep = assess(fam.code, kDefaultSearchBudget, fam.witness);
        ASSERT_TRUE(rep.d_actual);
        EXPECT_EQ(*rep.d_actual, 3);
        EXPECT_EQ(rep.defect, 0);
        EXPECT_EQ(verify_locality(fam.code), 2);
    }
    EXPECT_THROW(build_optimal_q_family(2), std::invalid_argument);
    EXPECT_THROW(build_optimal_q_family(6), std::invalid_argument);
}

TEST(Assess, FallsBackToCertifiedBound) {
    GagLrcCode c = ternary_example();
    const ParamReport rep = assess(c, 10);
    auto has = [&](const char* f) { return std::find(rep.flags.begin(), rep.flags.end(), f) != rep.flags.end(); };
    EXPECT_FALSE(rep.d_actual);
    EXPECT_TRUE(rep.pessimistic);
    EXPECT_EQ(rep.d_design, 2);
    EXPECT_EQ(rep.defect, 0);
    EXPECT_TRUE(has("exhaustive_search_over_budget"));
    EXPECT_TRUE(has("certified_lower_bound_3"));
    const ParamReport exact = assess(c);
    ASSERT_TRUE(exact.d_actual);
    EXPECT_EQ(*exact.d_actual, 3);
    EXPECT_FALSE(exact.pessimistic);
}

TEST(Table, GenusZeroRows) {
    const auto rows = projective_line_table(3);
    ASSERT_EQ(rows.size(), 3u);
    const std::int64_t expect[3][4] = {{9, 3, 4, 2}, {9, 4, 4, 1}, {9, 5, 3, 0}};
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(rows[i].n, expect[i][0]);
        EXPECT_EQ(rows[i].k, expect[i][1]);
        EXPECT_EQ(rows[i].d, expect[i][2]);
        EXPECT_EQ(rows[i].defect, expect[i][3]);
    }
}

TEST(Params, CountPlacesMatchesEnumeration) {
    for (std::int64_t q : {2, 3, 4, 5})
        for (std::int64_t r = 1; r <= 3; ++r)
            EXPECT_EQ(count_places(q, r) + (r == 1 ? 1 : 0),
                      static_cast<std::int64_t>(enumerate_places(Field::of_order(q), r).size()));
}

TEST(Params, ConstructionFormulas) {
    const ParamReport c1 = construction1_params(4, 2, 4, 0, 2);
    EXPECT_EQ(c1.n, 12);
    EXPECT_EQ(c1.k, 4);
    EXPECT_EQ(c1.d_design, 6);
    EXPECT_EQ(c1.d_singleton, 12 - 4 - 2 + 2);
    const ParamReport c2 = construction2_params(3, 2, 3, 0, 5);
    EXPECT_EQ(c2.n, 9);
    EXPECT_EQ(c2.d_design, 2);
    EXPECT_EQ(c2.d_singleton, 3);
    EXPECT_EQ(c2.defect, 1);
    EXPECT_TRUE(c2.pessimistic);
    EXPECT_THROW(construction2_params(3, 1, 3, 0, 2), std::invalid_argument);
    EXPECT_THROW(construction1_params(4, 2, 4, 0, 5), std::invalid_argument);
    EXPECT_THROW(construction1_params(6, 2, 4, 0, 2), std::invalid_argument);
    const ParamReport big = construction2_params(3, 2, 4, 0, 5);
    EXPECT_FALSE(big.flags.empty());
}

TEST(Concatenation, DistanceAtLeastProduct) {
    struct Case {
        std::uint64_t q;
        std::size_t n, k;
        bool parity;
    };
    for (const Case& cs : {Case{4, 4, 1, true}, Case{4, 4, 2, true}, Case{4, 4, 3, true}, Case{8, 8, 2, true},
                           Case{8, 6, 3, true}, Case{9, 9, 3, false}, Case{9, 5, 2, true}}) {
        const Field fo = Field::of_order(cs.q);
        const LinearCode outer = rs_code(fo, cs.n, cs.k);
        const Field fp = fo.prime_field();
        const LinearCode inner = cs.parity ? parity_check_code(fp, fo.degree()) : rs_code(fp, 3, fo.degree());
        const LinearCode cc = build_concatenated(outer, inner);
        EXPECT_EQ(cc.length(), cs.n * inner.length());
        EXPECT_EQ(cc.dimension(), cs.k * fo.degree());
        const int bound = static_cast<int>(cs.n - cs.k + 1) * *inner.exact_distance();
        EXPECT_EQ(*cc.distance_lower(), bound);
        EXPECT_GE(min_distance_exhaustive(cc), bound) << cs.q << ' ' << cs.n << ' ' << cs.k;
    }
}

TEST(Concatenation, FieldTowerMismatch) {
    const LinearCode outer = rs_code(Field::of_order(4), 4, 2);
    EXPECT_THROW(build_concatenated(outer, parity_check_code(Field::of_order(3), 2)), std::invalid_argument);
    EXPECT_THROW(build_concatenated(outer, parity_check_code(Field::of_order(2), 3)), std::invalid_argument);
    EXPECT_THROW(build_concatenated(outer, parity_check_code(Field::of_order(4), 2)), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "igcurve/indexing.hpp"
#include "laws.hpp"

using namespace igcurve;

namespace {

CosetRep W(SpaceParams s, std::vector<int> xs) { return coset_from_signed(s, xs); }
BCPartition BC(std::vector<int> p) { return BCPartition{p, Variant::Odd}; }
BKTPartition BKT(std::vector<int> p) { return BKTPartition{p, Variant::Odd}; }

const std::vector<SpaceParams> kSweep{{1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {2, 4}, {4, 4}, {3, 2}, {4, 3}};
const SpaceParams k5n7{5, 7};

}  // namespace

TEST(Word01, Encodings) {
    EXPECT_EQ(to_string(encode_01(k5n7, {11, 11, 11, 11, 11})), "1111100000000000");
    EXPECT_EQ(to_string(encode_01(k5n7, {})), "0000000000011111");
    EXPECT_EQ(to_string(encode_01(k5n7, {10, 8, 3, 1, 0})), "0100100000100101");
    EXPECT_EQ(decode_01(k5n7, word01_from_string("0100100000100101")), (std::vector<int>{10, 8, 3, 1, 0}));
    EXPECT_THROW(decode_01(k5n7, word01_from_string("010010000010010")), std::invalid_argument);
    EXPECT_THROW(decode_01(k5n7, word01_from_string("1100100000100101")), std::invalid_argument);
    EXPECT_THROW(word01_from_string("01x"), std::invalid_argument);
    EXPECT_THROW(encode_01(k5n7, {12}), std::invalid_argument);
}

TEST(Word01, RoundTripAllBoxPartitions) {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n + 1; ++k) {
            const SpaceParams s{k, n};
            const int len = s.letters();
            for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                if (__builtin_popcount(mask) != k) continue;
                Word01 w;
                for (int i = 0; i < len; ++i) w.push_back(mask >> i & 1);
                EXPECT_EQ(encode_01(s, decode_01(s, w)), w);
            }
        }
}

TEST(BC, WorkedExample) {
    const auto w = W(k5n7, {1, 6, -8, -7, -2});
    EXPECT_EQ(weyl_to_bc(w, Variant::Even).parts, (std::vector<int>{11, 7, 5, 5, 1}));
    EXPECT_EQ(weyl_to_bc(w), BC({10, 6, 4, 4}));
    EXPECT_EQ(bc_to_weyl(k5n7, BC({10, 6, 4, 4, 0})), w);
    EXPECT_EQ(bc_to_weyl(k5n7, BC({10, 6, 4, 4})), w);
}

TEST(BC, ExtremeClasses) {
    for (const auto& s : kSweep) {
        // the Schubert point is the full rectangle; the empty even partition is the top class
        const auto id = identity_coset(s);
        EXPECT_EQ(weyl_to_bc(id, Variant::Even).parts, std::vector<int>(s.k, s.letters() - s.k));
        EXPECT_EQ(weyl_to_bc(id).parts, std::vector<int>(s.k, 2 * s.n + 1 - s.k));
        const auto top = bc_to_weyl(s, BCPartition{{}, Variant::Even});
        std::vector<int> tw;
        for (int i = s.letters() - s.k + 1; i <= s.letters(); ++i) tw.push_back(i);
        EXPECT_EQ(top.window, tw);
    }
}

TEST(BC, Invalid) {
    EXPECT_THROW(bc_to_weyl(k5n7, BC({10, 11})), std::invalid_argument);
    EXPECT_THROW(bc_to_weyl(k5n7, BC({11})), std::invalid_argument);
    EXPECT_THROW(bc_to_weyl(k5n7, BC({1, 1, 1, 1, 1, 1})), std::invalid_argument);
    EXPECT_THROW(bc_to_weyl(k5n7, BC({3, -1})), std::invalid_argument);
    // window {2, bar 2}
    const SpaceParams s{2, 2};
    EXPECT_THROW(bc_to_weyl(s, BCPartition{{3, 1}, Variant::Even}), std::invalid_argument);
}

TEST(BC, RoundTripExhaustive) {
    for (const auto& s : kSweep)
        for (bool odd : {true, false})
            for (const auto& c : oracle::all_cosets(s, odd)) {
                const Variant v = odd ? Variant::Odd : Variant::Even;
                const auto p = weyl_to_bc(c, v);
                EXPECT_EQ(bc_to_weyl(s, p), c);
                EXPECT_TRUE(is_valid_bc(s, p));
                if (odd) {
                    EXPECT_EQ(weyl_to_bc(c, Variant::Even).parts, detail::trim(even_parts(s, p)));
                }
            }
}

TEST(BC, OddVariantRejectsBarOne) {
    const SpaceParams s{2, 2};
    EXPECT_THROW(weyl_to_bc(W(s, {2, -1})), std::invalid_argument);
    EXPECT_NO_THROW(weyl_to_bc(W(s, {2, -1}), Variant::Even));
}

TEST(BKT, WorkedExamples) {
    const auto w = W(k5n7, {1, 6, -8, -7, -2});
    EXPECT_EQ(weyl_to_bkt(w, Variant::Even).parts, (std::vector<int>{11, 6, 3, 3, 0}));
    EXPECT_EQ(weyl_to_bkt(w), BKT({10, 5, 2, 2, -1}));
    EXPECT_EQ(bkt_to_weyl(k5n7, BKT({10, 5, 2, 2, -1})), w);
    const SpaceParams lag{5, 4};
    const auto w0 = W(lag, {-2, -3, -4, -5, 1});
    EXPECT_EQ(weyl_to_bkt(w0), BKT({4, -1, -1, -1, -1}));
    EXPECT_EQ(codim(w0), 0);
    EXPECT_EQ(length(w0), lag.dim_odd());
}

TEST(BKT, IdentityIsTopPartition) {
    for (const auto& s : kSweep) {
        const auto a = weyl_to_bkt(identity_coset(s));
        EXPECT_EQ(a.size(), s.dim_odd());
        EXPECT_EQ(a.part(1), 2 * s.n + 1 - s.k);
        EXPECT_EQ(codim(identity_coset(s)), s.dim_odd());
    }
}

TEST(BKT, Invalid) {
    const SpaceParams s{3, 4};
    EXPECT_THROW(bkt_to_weyl(s, BKT({6, 5})), std::invalid_argument);
    EXPECT_THROW(bkt_to_weyl(s, BKT({6, 6, 0})), std::invalid_argument);  // not (n-k)-strict
    EXPECT_THROW(bkt_to_weyl(s, BKT({5, 0, -1})), std::invalid_argument);  // -1 needs first part 6
    EXPECT_THROW(bkt_to_weyl(s, BKT({7, 0, 0})), std::invalid_argument);
    EXPECT_THROW(bkt_to_weyl(s, BKT({3, 5, 0})), std::invalid_argument);
}

TEST(BKT, RoundTripAndCodimensionExhaustive) {
    for (const auto& s : kSweep) {
        int count = 0;
        for (const auto& c : oracle::all_cosets(s, true)) {
            const auto a = weyl_to_bkt(c);
            EXPECT_EQ(bkt_to_weyl(s, a), c);
            EXPECT_EQ(a.size(), s.dim_odd() - length(c));
            ++count;
        }
        // every admissible BKT partition comes from a coset
        int admissible = 0;
        std::vector<int> a(s.k);
        const int hi = 2 * s.n + 1 - s.k;
        auto rec = [&](auto&& self, int j) -> void {
            if (j == s.k) {
                if (is_valid_bkt(s, BKT(a))) ++admissible;
                return;
            }
            for (int x = -1; x <= (j ? a[j - 1] : hi); ++x) {
                a[j] = x;
                self(self, j + 1);
            }
        };
        rec(rec, 0);
        EXPECT_EQ(admissible, count) << space_name(s);
    }
}

TEST(Bruhat, MatchesSubwordCriterion) {
    for (const SpaceParams s : {SpaceParams{2, 2}, SpaceParams{2, 3}, SpaceParams{1, 3}, SpaceParams{3, 2}}) {
        const auto table = oracle::bfs_group(s.rank());
        const auto cs = oracle::all_cosets(s, false);
        for (const auto& v : cs) {
            const auto below = oracle::bruhat_interval(table.word.at(min_rep(v).values()), s.rank());
            for (const auto& u : cs)
                EXPECT_EQ(bruhat_leq(u, v), below.count(min_rep(u).values()) > 0)
                    << format_window(u) << " vs " << format_window(v);
        }
    }
}

TEST(Bruhat, Examples) {
    const SpaceParams s{2, 2};
    EXPECT_TRUE(bruhat_leq(identity_coset(s), W(s, {2, -3})));
    EXPECT_FALSE(bruhat_leq(W(s, {2, -3}), identity_coset(s)));
    EXPECT_TRUE(bruhat_leq(W(s, {2, -3}), W(s, {2, -3})));
    // (2n+2-k, 0, ..., 0) <= (1, ..., 1) in even BKT terms
    const SpaceParams t{3, 4};
    const auto lo = bkt_to_weyl(t, BKTPartition{{7, 0, 0}, Variant::Even});
    const auto hi = bkt_to_weyl(t, BKTPartition{{1, 1, 1}, Variant::Even});
    EXPECT_TRUE(bruhat_leq(lo, hi));
    EXPECT_THROW(bruhat_leq(identity_coset(s), identity_coset(t)), std::invalid_argument);
}

TEST(Bruhat, LengthIsStrictlyMonotone) {
    for (const auto& s : kSweep) {
        const auto cs = oracle::all_cosets(s, false);
        for (const auto& u : cs)
            for (const auto& v : cs)
                if (!(u == v) && bruhat_leq(u, v)) { EXPECT_LT(length(u), length(v)); }
    }
}

TEST(Wingtip, Examples) {
    EXPECT_EQ(wingtip_m(k5n7, BCPartition{{10, 8, 3, 1}, Variant::Even}), 3);
    EXPECT_EQ(wingtip_m(k5n7, BC({10, 10, 3, 1, 1})), 4);
    EXPECT_EQ(wingtip_m(k5n7, BC({10, 9, 9, 3})), 4);
    const SpaceParams lag{3, 2};
    EXPECT_EQ(wingtip_m(lag, weyl_to_bc(identity_coset(lag))), lag.letters());
}

TEST(BCStep, Examples) {
    EXPECT_EQ(bc_step(k5n7, BC({10, 10, 3, 1, 1}), Step::OY), BC({9, 2, 1, 1, 1}));
    EXPECT_EQ(bc_step(k5n7, BC({10, 9, 9, 3}), Step::OY), BC({8, 8, 2, 2}));
    EXPECT_EQ(bc_step(k5n7, BC({10, 10, 3, 1, 1}), Step::OZ), BC({10, 2}));
    EXPECT_EQ(bc_step(k5n7, BC({9, 8, 8, 3, 1}), Step::Ocirc), BC({7, 7, 2}));
    EXPECT_THROW(bc_step(k5n7, BC({9, 8, 8, 3, 1}), Step::OY), std::invalid_argument);
    EXPECT_THROW(bc_step(k5n7, BC({10, 9, 9, 5}), Step::Ocirc), std::invalid_argument);
}

TEST(BCStep, Chains) {
    EXPECT_EQ(iterate_step(k5n7, BC({10, 10, 3, 1, 1}), Step::OY, 2), BC({1}));
    EXPECT_EQ(iterate_step(k5n7, BC({10, 10, 3, 1, 1}), Step::OY, 3), BC({}));
    EXPECT_EQ(iterate_step(k5n7, BC({10, 9, 9, 3}), Step::OY, 2), BC({7, 1, 1}));
    EXPECT_EQ(iterate_step(k5n7, BC({10, 9, 9, 3}), Step::OY, 3), BC({}));
    const auto lam = BC({10, 9, 9, 5});
    EXPECT_EQ(iterate_step(k5n7, lam, Step::OY, 1), BC({8, 8, 4, 2}));
    EXPECT_EQ(iterate_step(k5n7, lam, Step::OZ, 1), BC({10, 8, 4}));
    EXPECT_EQ(iterate_step(k5n7, lam, Step::OY, 2), BC({7, 3, 1}));
    EXPECT_EQ(iterate_step(k5n7, lam, Step::OZ, 2), BC({10, 3}));
    EXPECT_EQ(iterate_step(k5n7, lam, Step::OY, 3), BC({2}));
    EXPECT_EQ(iterate_step(k5n7, lam, Step::OZ, 3), BC({10}));
    EXPECT_EQ(iterate_step(k5n7, BC({9, 8, 8, 3, 1}), Step::Ocirc, 2), BC({6, 1}));
    EXPECT_EQ(iterate_step(k5n7, lam, Step::OZ, 0), lam);
    EXPECT_THROW(iterate_step(k5n7, lam, Step::OZ, -1), std::invalid_argument);
}

TEST(BKTStep, Examples) {
    const SpaceParams s{3, 4};
    EXPECT_EQ(bkt_step(s, BKT({6, 5, -1}), Step::OY), BKT({5, 0, 0}));
    EXPECT_EQ(bkt_step(s, BKT({6, 5, -1}), Step::OZ), BKT({6, -1, -1}));
    EXPECT_EQ(bkt_step(s, BKT({5, 0, 0}), Step::Ocirc), BKT({0, 0, 0}));
    EXPECT_THROW(bkt_step(s, BKT({5, 0, 0}), Step::OZ), std::invalid_argument);
}

// Partition steps agree with the Weyl-level steps through both bijections.
TEST(Steps, CoherentWithWeylExhaustively) {
    for (const auto& s : kSweep)
        for (const auto& c : oracle::all_cosets(s, true))
            for (Step st : {Step::OY, Step::OZ, Step::Ocirc}) {
                bool applies = st == Step::Ocirc ? !c.contains(1) : c.in_closed_orbit();
                if (st != Step::OZ && s.lagrangian()) applies = false;
                const auto lam = weyl_to_bc(c);
                const auto alpha = weyl_to_bkt(c);
                if (!applies) {
                    EXPECT_THROW(bc_step(s, lam, st), std::invalid_argument);
                    EXPECT_THROW(bkt_step(s, alpha, st), std::invalid_argument);
                    continue;
                }
                const auto next = one_step_neighbor(c, st);
                EXPECT_EQ(bc_step(s, lam, st), weyl_to_bc(next)) << format_window(c) << " " << to_string(st);
                EXPECT_EQ(bkt_step(s, alpha, st), weyl_to_bkt(next)) << format_window(c) << " " << to_string(st);
            }
}

TEST(Comp, ExampleValues) {
    const auto lam = BC({10, 9, 9, 5});
    EXPECT_TRUE(comp_member(k5n7, lam, 1));
    EXPECT_TRUE(comp_member(k5n7, lam, 2));
    EXPECT_FALSE(comp_member(k5n7, lam, 3));
    const auto alpha = weyl_to_bkt(bc_to_weyl(k5n7, lam));
    EXPECT_TRUE(comp_member(k5n7, alpha, 1));
    EXPECT_TRUE(comp_member(k5n7, alpha, 2));
    EXPECT_FALSE(comp_member(k5n7, alpha, 3));
    const SpaceParams s{3, 4};
    EXPECT_TRUE(comp_member(s, BKT({6, 5, -1}), 1));
    EXPECT_TRUE(comp_member(s, weyl_to_bc(bkt_to_weyl(s, BKT({6, 5, -1}))), 1));
    EXPECT_FALSE(comp_member(k5n7, BC({10}), 1));
}

TEST(Comp, Preconditions) {
    EXPECT_THROW(comp_member(k5n7, BC({9, 8, 8, 3, 1}), 1), std::invalid_argument);
    EXPECT_THROW(comp_member(k5n7, BC({10, 9, 9, 5}), 0), std::invalid_argument);
    const SpaceParams lag{3, 2};
    EXPECT_THROW(comp_member(lag, weyl_to_bc(identity_coset(lag)), 1), std::invalid_argument);
}

TEST(Comp, TailRowsMatchBCCount) {
    for (const auto& s : kSweep)
        for (const auto& c : oracle::all_cosets(s, true)) {
            if (!c.in_closed_orbit()) continue;
            const auto lam = weyl_to_bc(c);
            int rows = 0;
            for (int j = 3; j <= lam.length(); ++j) rows += lam.part(j) > 0;
            EXPECT_EQ(bkt_tail_rows(s, weyl_to_bkt(c)), rows) << format_window(c);
        }
}

TEST(Comp, BCAndBKTAgreeWithAdditivity) {
    for (const auto& s : kSweep) {
        if (s.lagrangian()) continue;
        for (const auto& c : oracle::all_cosets(s, true)) {
            if (!c.in_closed_orbit()) continue;
            const auto lam = weyl_to_bc(c);
            const auto alpha = weyl_to_bkt(c);
            for (int d = 1; d <= s.k + 2; ++d) {
                EXPECT_EQ(comp_member(s, lam, d), comp_member(s, alpha, d)) << format_window(c) << " d=" << d;
                for (int d1 = 1; d1 < d; ++d1) {
                    EXPECT_EQ(comp_member(s, lam, d), comp_member(s, iterate_step(s, lam, Step::OZ, d1), d - d1));
                    EXPECT_EQ(comp_member(s, alpha, d), comp_member(s, iterate_step(s, alpha, Step::OZ, d1), d - d1));
                }
                // once out, always out
                if (!comp_member(s, lam, d)) { EXPECT_FALSE(comp_member(s, lam, d + 1)); }
            }
        }
    }
}

TEST(Greedy, AllSplitsAgree) {
    for (const auto& s : kSweep) {
        if (s.lagrangian()) continue;
        for (const auto& c : oracle::all_cosets(s, true)) {
            if (!c.in_closed_orbit()) continue;
            const auto lam = weyl_to_bc(c);
            const auto alpha = weyl_to_bkt(c);
            for (int d = 1; d <= s.k + 2; ++d) {
                const auto ly = iterate_step(s, lam, Step::OY, d);
                const auto ay = iterate_step(s, alpha, Step::OY, d);
                for (int d1 = 0; d1 < d; ++d1) {
                    const int d2 = d - 1 - d1;
                    EXPECT_EQ(iterate_step(s, bc_step(s, iterate_step(s, lam, Step::OZ, d1), Step::OY), Step::Ocirc, d2), ly);
                    EXPECT_EQ(iterate_step(s, bkt_step(s, iterate_step(s, alpha, Step::OZ, d1), Step::OY), Step::Ocirc, d2),
                              ay);
                }
            }
        }
    }
}

TEST(ClosedOrbit, PermissibleShape) {
    for (const auto& s : kSweep) EXPECT_EQ(oracle::permissible_failures(s), std::vector<std::string>{}) << space_name(s);
}

TEST(ShapeLaws, BKTEntriesByWindowShape) {
    for (const auto& s : kSweep) EXPECT_EQ(oracle::shape_law_failures(s), std::vector<std::string>{}) << space_name(s);
}

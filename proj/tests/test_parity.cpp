#include <gtest/gtest.h>

#include "sl3coh/parity.hpp"

using namespace sl3coh;
using W = WeylElement;

namespace {

HighestWeight L(Int a, Int b) { return HighestWeight::sl3(a, b); }

W swap_simple(W w) {
    switch (w) {
        case W::S1: return W::S2;
        case W::S2: return W::S1;
        case W::S1S2: return W::S2S1;
        case W::S2S1: return W::S1S2;
        default: return w;
    }
}

std::vector<W> swapped(const std::vector<W>& v) {
    std::vector<W> out;
    for (auto w : v) out.push_back(swap_simple(w));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<W> sorted(std::vector<W> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Parity, MinimalParabolicPins) {
    EXPECT_TRUE(minimal_parabolic_survives(W::E, L(0, 0)));
    EXPECT_TRUE(minimal_parabolic_survives(W::S1, L(0, 7)));
    EXPECT_FALSE(minimal_parabolic_survives(W::E, L(1, 0)));
}

TEST(Parity, MaximalParabolicPins) {
    EXPECT_TRUE(maximal_parabolic_survives(W::E, L(0, 0), 1));
    EXPECT_TRUE(maximal_parabolic_survives(W::E, L(0, 4), 1));
    EXPECT_FALSE(maximal_parabolic_survives(W::S1, L(0, 0), 1));
}

TEST(Parity, SurvivorSetPins) {
    EXPECT_EQ(survivor_sets(L(0, 0)), (SurvivorSets{{W::E, W::W0}, {W::E}, {W::E}}));
    EXPECT_EQ(survivor_sets(L(4, 3)), (SurvivorSets{{W::S1, W::S1S2}, {W::S1, W::S1S2}, {W::E, W::S2}}));
    EXPECT_EQ(survivor_sets(L(3, 5)), SurvivorSets{});
}

TEST(Parity, AllNineCases) {
    struct Row {
        HighestWeight lam;
        int id;
        SurvivorSets s;
    };
    std::vector<Row> rows{
        {L(0, 0), 1, {{W::E, W::W0}, {W::E}, {W::E}}},
        {L(0, 6), 2, {{W::E, W::W0}, {W::E}, {W::E, W::S2S1}}},
        {L(6, 0), 3, {{W::E, W::W0}, {W::E, W::S1S2}, {W::E}}},
        {L(2, 4), 4, {{W::E, W::W0}, {W::E, W::S1S2}, {W::E, W::S2S1}}},
        {L(2, 3), 5, {{W::S1, W::S1S2}, {W::S1, W::S1S2}, {W::E, W::S2}}},
        {L(0, 5), 6, {{W::S1, W::S1S2}, {W::S1, W::S1S2}, {W::S2}}},
        {L(5, 0), 7, {{W::S2, W::S2S1}, {W::S1}, {W::S2, W::S2S1}}},
        {L(5, 2), 8, {{W::S2, W::S2S1}, {W::E, W::S1}, {W::S2, W::S2S1}}},
        {L(3, 3), 9, {}},
    };
    for (const auto& r : rows) {
        EXPECT_EQ(case_classifier(r.lam), r.id);
        EXPECT_EQ(survivor_sets(r.lam), r.s) << "case " << r.id;
    }
}

TEST(Parity, CaseIsConstantOnParityClasses) {
    std::map<int, SurvivorSets> seen;
    for (Int m1 = 0; m1 <= 40; ++m1)
        for (Int m2 = 0; m2 <= 40; ++m2) {
            auto lam = L(m1, m2);
            auto [it, fresh] = seen.try_emplace(case_classifier(lam), survivor_sets(lam));
            if (!fresh) EXPECT_EQ(it->second, survivor_sets(lam)) << m1 << "," << m2;
        }
    EXPECT_EQ(seen.size(), 9u);
}

TEST(Parity, DualityExchangesFaces) {
    for (Int m1 = 0; m1 <= 30; ++m1)
        for (Int m2 = 0; m2 <= 30; ++m2) {
            auto s = survivor_sets(L(m1, m2));
            auto d = survivor_sets(L(m2, m1));
            EXPECT_EQ(swapped(s.w1), sorted(d.w2));
            EXPECT_EQ(swapped(s.w2), sorted(d.w1));
            EXPECT_EQ(swapped(s.w0), sorted(d.w0));
        }
}

TEST(Parity, SurvivorsHaveEvenLeviWeights) {
    for (Int m1 = 0; m1 <= 30; ++m1)
        for (Int m2 = 0; m2 <= 30; ++m2) {
            auto s = survivor_sets(L(m1, m2));
            for (int levi : {1, 2})
                for (auto w : levi == 1 ? s.w1 : s.w2) {
                    auto r = restrict_to_levi(levi_parabolic(levi), w, m1, m2);
                    EXPECT_GE(r.a, 0);
                    EXPECT_EQ(r.a % 2, 0);
                    EXPECT_EQ(r.n % 2, 0);
                }
        }
}

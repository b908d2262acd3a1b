#include <gtest/gtest.h>

#include "sl3coh/gl2.hpp"

using namespace sl3coh;

TEST(GL2, CuspDimensionPins) {
    EXPECT_EQ(dim_cusp_forms(12), 1);
    EXPECT_EQ(dim_cusp_forms(2), 0);
    EXPECT_EQ(dim_cusp_forms(2, CuspConvention::EulerConvention), -1);
    EXPECT_EQ(dim_cusp_forms(26), 1);
    EXPECT_EQ(dim_cusp_forms(14), 0);
    EXPECT_EQ(dim_cusp_forms(24), 2);
    EXPECT_EQ(dim_cusp_forms(7), 0);
    EXPECT_THROW(dim_cusp_forms(1), std::invalid_argument);
}

TEST(GL2, CuspDimensionMatchesMonomialCount) {
    // dim M_k = #{(a,b): 4a + 6b = k}; dim S_k = dim M_k - 1 for k >= 4
    for (Int k = 4; k <= 400; k += 2) {
        Int modular = 0;
        for (Int b = 0; 6 * b <= k; ++b)
            if ((k - 6 * b) % 4 == 0) ++modular;
        EXPECT_EQ(dim_cusp_forms(k), modular - 1) << k;
        EXPECT_EQ(dim_cusp_forms(k + 12), dim_cusp_forms(k) + 1);
    }
}

TEST(GL2, EulerPins) {
    EXPECT_EQ(sl2_euler(0), 1);
    EXPECT_EQ(gl2_euler(10, 0), -1);
    EXPECT_EQ(gl2_euler(7, 1), 0);
    EXPECT_EQ(gl2_euler(0, 0), 1);
    EXPECT_EQ(gl2_euler(1, 0), 0);
    EXPECT_EQ(gl2_euler_wall(0, 0), 1);
    EXPECT_EQ(gl2_euler_wall(0, 1), 0);
}

TEST(GL2, WallRouteMatchesClosedForm) {
    for (Int m = 0; m <= 240; ++m) {
        for (int t : {0, 1}) EXPECT_EQ(gl2_euler_wall(m, t), gl2_euler(m, t)) << m << "," << t;
        EXPECT_EQ(sl2_euler_wall(m), sl2_euler(m)) << m;
        EXPECT_EQ(sl2_euler(m), gl2_euler(m, 0) + gl2_euler(m, 1));
        if (m > 0 && m % 2 == 0) EXPECT_EQ(-gl2_euler(m, 0), dim_cusp_forms(m + 2));
    }
}

TEST(GL2, H1Split) {
    auto s = h1_split({10, 0});
    EXPECT_EQ(s.inner_dim, 1);
    EXPECT_EQ(s.boundary_context, H1Branch::CompactEqualsInner);
    EXPECT_EQ(s.eisenstein_dim, 1);
    s = h1_split({0, 0});
    EXPECT_EQ(s.inner_dim, 0);
    EXPECT_EQ(s.boundary_context, H1Branch::InnerEqualsFull);
    s = h1_split({2, 2});
    EXPECT_EQ(s.inner_dim, 0);
    EXPECT_EQ(s.boundary_context, H1Branch::InnerEqualsFull);
    EXPECT_THROW(h1_split({3, 1}), std::invalid_argument);
    EXPECT_THROW(h1_split({0, 2}), std::invalid_argument);
}

TEST(GL2, H1SplitAgreesWithEulerCharacteristic) {
    // for a > 0 only H^1 is nonzero, so dim H^1 = -chi(GL2, Sym^a x det^{(n-a)/2})
    for (Int a = 2; a <= 120; a += 2)
        for (Int n = -40; n <= 40; n += 2) {
            auto s = h1_split({a, n});
            int twist = static_cast<int>((((n - a) / 2) % 2 + 2) % 2);
            EXPECT_EQ(s.inner_dim + s.eisenstein_dim, -gl2_euler(a, twist)) << a << "," << n;
        }
}

#include <gtest/gtest.h>

#include "sl3coh/euler.hpp"
#include "sl3coh/gl2.hpp"
#include "sl3coh/traces.hpp"

using namespace sl3coh;

namespace {

HighestWeight L(Int a, Int b) { return HighestWeight::sl3(a, b); }

}  // namespace

TEST(Euler, Pins) {
    EXPECT_EQ(sl3_euler_wall(L(0, 0)), 1);
    EXPECT_EQ(sl3_euler_wall(L(10, 0)), -1);
    EXPECT_EQ(sl3_euler_wall(L(0, 11)), 1);
    EXPECT_EQ(sl3_euler_closed(L(0, 0)), 1);
    EXPECT_EQ(sl3_euler_closed(L(7, 9)), 0);
    EXPECT_EQ(sl3_euler_closed(L(2, 1)), 0);
    EXPECT_EQ(sl3_euler_wall(L(2, 1)), 0);
}

TEST(Euler, GL3Reduction) {
    EXPECT_EQ(gl3_euler(HighestWeight::gl3(0, 0, 1)), 0);
    EXPECT_EQ(gl3_euler(HighestWeight::gl3(2, 0, 0)), sl3_euler_closed(L(2, 0)));
    EXPECT_EQ(gl3_euler(HighestWeight::gl3(0, 0, 0)), 1);
    EXPECT_EQ(gl3_euler(HighestWeight::gl3(3, 4, -1)), sl3_euler_closed(L(3, 4)));
    EXPECT_THROW(gl3_euler(L(0, 0)), std::invalid_argument);
}

TEST(Euler, WallEqualsClosed) {
    for (Int m1 = 0; m1 <= 240; ++m1)
        for (Int m2 = 0; m2 <= 240; ++m2) {
            Int c = sl3_euler_closed(L(m1, m2));
            ASSERT_EQ(sl3_euler_wall(L(m1, m2)), c) << m1 << "," << m2;
            EXPECT_EQ(c, sl3_euler_closed(L(m2, m1)));
            if (m1 % 2 && m2 % 2) EXPECT_EQ(c, 0);
        }
}

TEST(Euler, CellPins) {
    EXPECT_EQ(euler_cell(0, 0).expression(), "-(m1+m2)/12 + 1");
    EXPECT_EQ(euler_cell(9, 0).expression(), "(m1-9)/12 + 2");
    EXPECT_EQ(euler_cell(9, 0).evaluate(9, 0), 2);
    EXPECT_EQ(euler_cell(1, 1).expression(), "0");
    EXPECT_EQ(euler_cell(10, 10).expression(), "-(m1+m2-20)/12 - 3");
    EXPECT_EQ(euler_cell(10, 10).evaluate(10, 10), -3);
    EXPECT_EQ(euler_cell(0, 11).expression(), "(m2-11)/12 + 1");
    EXPECT_EQ(euler_cell(10, 0).expression(), "-(m1+m2-10)/12 - 1");
}

TEST(Euler, CellsMatchWallRoute) {
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            for (Int a = 0; a < 4; ++a)
                for (Int b = 0; b < 4; ++b) {
                    Int m1 = i + 12 * a, m2 = j + 12 * b;
                    EXPECT_EQ(euler_cell(i, j).evaluate(m1, m2), sl3_euler_wall(L(m1, m2)))
                        << i << "," << j << " at " << m1 << "," << m2;
                }
}

TEST(Euler, NumericTable) {
    auto t = euler_table(11, 11);
    ASSERT_EQ(t.size(), 144u);
    EXPECT_EQ(t[9 * 12 + 0].chi, 2);
    EXPECT_EQ(t[1 * 12 + 1].chi, 0);
    auto r = euler_report(L(9, 0));
    EXPECT_EQ(r.chi_wall, r.chi_closed);
    EXPECT_EQ(r.cell, "(m1-9)/12 + 2");
}

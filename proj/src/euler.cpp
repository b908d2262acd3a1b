#include "sl3coh/euler.hpp"

#include <stdexcept>

#include "sl3coh/gl2.hpp"
#include "sl3coh/traces.hpp"

namespace sl3coh {

namespace {

constexpr int Z = 99;

// constants d, rows m1 mod 12, columns m2 mod 12
constexpr int kTableD[12][12] = {
    {1, 1, 0, 1, 0, 1, 0, 1, 0, 2, -1, 1},
    {1, Z, 0, Z, 0, Z, 0, Z, 1, Z, -1, Z},
    {0, 0, -1, 0, -1, 0, -1, 1, -1, 0, -2, 1},
    {1, Z, 0, Z, 0, Z, 1, Z, 0, Z, 0, Z},
    {0, 0, -1, 0, -1, 1, -1, 0, -1, 1, -2, 1},
    {1, Z, 0, Z, 1, Z, 0, Z, 1, Z, 0, Z},
    {0, 0, -1, 1, -1, 0, -1, 1, -1, 1, -2, 1},
    {1, Z, 1, Z, 0, Z, 1, Z, 1, Z, 0, Z},
    {0, 1, -1, 0, -1, 1, -1, 1, -1, 1, -2, 1},
    {2, Z, 0, Z, 1, Z, 1, Z, 1, Z, 0, Z},
    {-1, -1, -2, 0, -2, 0, -2, 0, -2, 0, -3, 1},
    {1, Z, 1, Z, 1, Z, 1, Z, 1, Z, 1, Z},
};

void require_sl3(const HighestWeight& lam) {
    if (!lam.is_dominant()) throw std::invalid_argument("weight is not dominant");
}

Int div12(Int num) {
    if (num % 12 != 0) throw std::logic_error("Euler table cell evaluated off its residue class");
    return num / 12;
}

std::string affine(const std::string& var, Int c) {
    if (c == 0) return var;
    return var + "-" + std::to_string(c);
}

}  // namespace

Int sl3_euler_wall(const HighestWeight& lam) {
    require_sl3(lam);
    Rational chi = 0;
    for (const auto& t : sl3_torsion_classes()) {
        if (t.k == 1) continue;  // chi(SL3(Z)) = 0
        chi += t.centralizer_chi * t.resultant * closed_trace(lam.m1, lam.m2, 0, t.k);
    }
    if (chi.denominator() != 1) throw std::logic_error("sl3_euler_wall: non-integral sum");
    return chi.numerator();
}

Int sl3_euler_closed(const HighestWeight& lam) {
    require_sl3(lam);
    auto s = [](Int k) { return dim_cusp_forms(k, CuspConvention::EulerConvention); };
    bool e1 = lam.m1 % 2 == 0, e2 = lam.m2 % 2 == 0;
    if (e1 && e2) return -1 - s(lam.m1 + 2) - s(lam.m2 + 2);
    if (e1) return -s(lam.m1 + 2) + s(lam.m1 + lam.m2 + 3);
    if (e2) return -s(lam.m2 + 2) + s(lam.m1 + lam.m2 + 3);
    return 0;
}

Int gl3_euler(const HighestWeight& lam) {
    require_sl3(lam);
    if (!lam.m3) throw std::invalid_argument("gl3_euler: m3 required");
    if (((lam.m1 + *lam.m3) % 2 + 2) % 2 != 0) return 0;
    return sl3_euler_closed(HighestWeight::sl3(lam.m1, lam.m2));
}

Int EulerCell::evaluate(Int m1, Int m2) const {
    switch (shape) {
        case CellShape::EvenEven: return -div12(m1 + m2 - c) + d;
        case CellShape::EvenOdd: return div12(m2 - c) + d;
        case CellShape::OddEven: return div12(m1 - c) + d;
        case CellShape::Zero: return 0;
    }
    return 0;
}

std::string EulerCell::expression() const {
    std::string base;
    switch (shape) {
        case CellShape::EvenEven: base = "-(" + affine("m1+m2", c) + ")/12"; break;
        case CellShape::EvenOdd: base = "(" + affine("m2", c) + ")/12"; break;
        case CellShape::OddEven: base = "(" + affine("m1", c) + ")/12"; break;
        case CellShape::Zero: return "0";
    }
    if (d > 0) return base + " + " + std::to_string(d);
    if (d < 0) return base + " - " + std::to_string(-d);
    return base;
}

EulerCell euler_cell(int row, int col) {
    if (row < 0 || row > 11 || col < 0 || col > 11) throw std::out_of_range("euler_cell");
    int d = kTableD[row][col];
    bool e1 = row % 2 == 0, e2 = col % 2 == 0;
    if (!e1 && !e2) {
        if (d != Z) throw std::logic_error("odd/odd cell must be zero");
        return {CellShape::Zero, 0, 0};
    }
    if (e1 && e2) return {CellShape::EvenEven, row + col, d};
    if (e1) return {CellShape::EvenOdd, col, d};
    return {CellShape::OddEven, row, d};
}

std::vector<std::vector<EulerCell>> symbolic_euler_table() {
    std::vector<std::vector<EulerCell>> t(12);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) t[i].push_back(euler_cell(i, j));
    return t;
}

std::vector<EulerTableEntry> euler_table(Int m1_max, Int m2_max) {
    std::vector<EulerTableEntry> out;
    for (Int m1 = 0; m1 <= m1_max; ++m1)
        for (Int m2 = 0; m2 <= m2_max; ++m2)
            out.push_back({m1, m2, euler_cell(m1 % 12, m2 % 12).evaluate(m1, m2)});
    return out;
}

EulerReport euler_report(const HighestWeight& lam) {
    EulerReport r;
    r.weight = lam;
    r.row = static_cast<int>(lam.m1 % 12);
    r.col = static_cast<int>(lam.m2 % 12);
    r.cell = euler_cell(r.row, r.col).expression();
    if (lam.m3) {
        r.chi_closed = gl3_euler(lam);
        r.chi_wall = ((lam.m1 + *lam.m3) % 2 + 2) % 2 != 0 ? 0 : sl3_euler_wall(HighestWeight::sl3(lam.m1, lam.m2));
    } else {
        r.chi_closed = sl3_euler_closed(lam);
        r.chi_wall = sl3_euler_wall(lam);
    }
    return r;
}

}  // namespace sl3coh

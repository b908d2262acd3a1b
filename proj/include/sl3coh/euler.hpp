#pragma once

#include <string>
#include <vector>

#include "sl3coh/root_system.hpp"

namespace sl3coh {

Int sl3_euler_wall(const HighestWeight& lam);
Int sl3_euler_closed(const HighestWeight& lam);
Int gl3_euler(const HighestWeight& lam);

enum class CellShape {
    EvenEven,  // -(m1+m2-c)/12 + d
    EvenOdd,   // (m2-c)/12 + d
    OddEven,   // (m1-c)/12 + d
    Zero,
};

struct EulerCell {
    CellShape shape = CellShape::Zero;
    Int c = 0;
    Int d = 0;

    Int evaluate(Int m1, Int m2) const;
    std::string expression() const;
    bool operator==(const EulerCell&) const = default;
};

// Cell for m1 = row, m2 = col (mod 12).
EulerCell euler_cell(int row, int col);

struct EulerTableEntry {
    Int m1 = 0;
    Int m2 = 0;
    Int chi = 0;
};

std::vector<std::vector<EulerCell>> symbolic_euler_table();
std::vector<EulerTableEntry> euler_table(Int m1_max, Int m2_max);

struct EulerReport {
    HighestWeight weight;
    Int chi_wall = 0;
    Int chi_closed = 0;
    int row = 0;
    int col = 0;
    std::string cell;
};

EulerReport euler_report(const HighestWeight& lam);

}  // namespace sl3coh

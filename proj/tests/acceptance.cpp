// Acceptance criteria, one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sl3coh/boundary.hpp"
#include "sl3coh/eisenstein.hpp"
#include "sl3coh/euler.hpp"
#include "sl3coh/gl2.hpp"
#include "sl3coh/traces.hpp"

using namespace sl3coh;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

HighestWeight L(Int a, Int b) { return HighestWeight::sl3(a, b); }
std::string at(Int a, Int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Cell derived from the Wall route: slopes from the shifts by 12, constant from the residue itself.
EulerCell derived_cell(int i, int j) {
    Int base = sl3_euler_wall(L(i, j));
    Int s1 = sl3_euler_wall(L(i + 12, j)) - base;
    Int s2 = sl3_euler_wall(L(i, j + 12)) - base;
    if (s1 == -1 && s2 == -1) return {CellShape::EvenEven, i + j, base};
    if (s1 == 0 && s2 == 1) return {CellShape::EvenOdd, j, base};
    if (s1 == 1 && s2 == 0) return {CellShape::OddEven, i, base};
    if (s1 == 0 && s2 == 0 && base == 0) return {CellShape::Zero, 0, 0};
    return {CellShape::Zero, -1, -1};
}

Outcome table_reproduction() {
    Outcome o;
    int cells = 0;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            auto printed = euler_cell(i, j);
            if (!(printed == derived_cell(i, j))) o.fail("cell [" + std::to_string(i) + "][" + std::to_string(j) + "]");
            ++cells;
            for (Int a = 0; a < 2; ++a)
                for (Int b = 0; b < 2; ++b) {
                    Int m1 = i + 12 * a, m2 = j + 12 * b;
                    if (printed.evaluate(m1, m2) != sl3_euler_wall(L(m1, m2))) o.fail("value at " + at(m1, m2));
                }
        }
    if (cells != 144) o.fail("cell count");
    if (euler_cell(0, 0).expression() != "-(m1+m2)/12 + 1") o.fail("first cell text");
    o.note = o.ok ? "144 cells, 576 evaluations" : o.note;
    return o;
}

Outcome trace_equivalence() {
    Outcome o;
    int n = 0;
    for (Int m1 = 0; m1 <= 30; ++m1)
        for (Int m2 = 0; m2 <= 30; ++m2)
            for (int k : {2, 3, 4, 6}) {
                Int w = weyl_det_trace(m1, m2, k);
                for (Int m3 = 0; m3 <= 2; ++m3) {
                    Int g = gt_trace(m1, m2, m3, k), c = closed_trace(m1, m2, m3, k);
                    if (g != c || c != w) o.fail("k=" + std::to_string(k) + " at " + at(m1, m2));
                    ++n;
                }
            }
    if (o.ok) o.note = std::to_string(n) + " comparisons";
    return o;
}

Outcome euler_routes() {
    Outcome o;
    for (Int m1 = 0; m1 <= 240; ++m1)
        for (Int m2 = 0; m2 <= 240; ++m2)
            if (sl3_euler_closed(L(m1, m2)) != sl3_euler_wall(L(m1, m2))) o.fail("at " + at(m1, m2));
    if (sl3_euler_closed(L(0, 0)) != 1) o.fail("chi(0,0)");
    if (sl3_euler_closed(L(10, 0)) != -1) o.fail("chi(10,0)");
    if (sl3_euler_closed(L(0, 11)) != 1) o.fail("chi(0,11)");
    for (Int m = 1; m <= 99; m += 2)
        if (sl3_euler_closed(L(m, m + 2)) != 0) o.fail("odd/odd at " + at(m, m + 2));
    return o;
}

Outcome boundary_cases() {
    Outcome o;
    for (Int m1 = 0; m1 <= 60; ++m1)
        for (Int m2 = 0; m2 <= 60; ++m2)
            if (!boundary_profile(L(m1, m2)).same_summands(boundary_case_formula(L(m1, m2)))) o.fail("at " + at(m1, m2));
    auto b = boundary_profile(L(0, 0));
    if (b.to_string() != "{0: Q, 4: Q}") o.fail("(0,0) gives " + b.to_string());
    for (Int m2 = 1; m2 <= 59; m2 += 2) {
        auto p = boundary_profile(L(0, m2));
        if (p.max_degree() != 2 || p.total_dim() != p.dim(2) || p.dim(2) != 2 * dim_cusp_forms(m2 + 3) + 2)
            o.fail("(0,odd) at " + at(0, m2));
    }
    return o;
}

Outcome identities() {
    Outcome o;
    for (Int m1 = 0; m1 <= 60; ++m1)
        for (Int m2 = 0; m2 <= 60; ++m2) {
            auto lam = L(m1, m2);
            auto eis = eisenstein_case_formula(lam);
            auto bd = boundary_profile(lam), bd_dual = boundary_profile(lam.dual());
            auto eis_dual = eisenstein_case_formula(lam.dual());
            if (eis.euler() != sl3_euler_closed(lam)) o.fail("chi(Eis) != chi_h at " + at(m1, m2));
            if (2 * eis.euler() != bd.euler()) o.fail("chi(Eis) != chi(boundary)/2 at " + at(m1, m2));
            if (2 * (eis.total_dim() + eis_dual.total_dim()) != bd.total_dim() + bd_dual.total_dim())
                o.fail("isotropy at " + at(m1, m2));
            for (int q = 0; q <= 4; ++q)
                if (bd.dim(q) != bd_dual.dim(4 - q)) o.fail("duality at " + at(m1, m2));
        }
    return o;
}

Outcome gl2_layer() {
    Outcome o;
    for (Int m = 0; m <= 240; ++m) {
        for (int t : {0, 1})
            if (gl2_euler_wall(m, t) != gl2_euler(m, t)) o.fail("m=" + std::to_string(m));
        if (m > 0 && m % 2 == 0 && -gl2_euler(m, 0) != dim_cusp_forms(m + 2)) o.fail("cusp dim at m=" + std::to_string(m));
    }
    return o;
}

Outcome ghost_contract() {
    Outcome o;
    for (Int m1 = 0; m1 <= 60; ++m1)
        for (Int m2 = 0; m2 <= 60; ++m2) {
            int c = case_classifier(L(m1, m2));
            auto g = ghost_report(L(m1, m2));
            for (int q = 0; q <= 4; ++q) {
                bool open = g.by_degree.at(q) == GhostStatus::UndeterminedZeroOrOne;
                if (open != (q == 2 && (c == 6 || c == 7))) o.fail("q=" + std::to_string(q) + " at " + at(m1, m2));
            }
        }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double limit_s;
    };
    std::vector<Criterion> all{
        {"1 Euler table reproduction", table_reproduction, 5},
        {"2 trace oracle equivalence", trace_equivalence, 60},
        {"3 closed Euler form equals Wall route", euler_routes, 0},
        {"4 boundary cohomology case formulas", boundary_cases, 0},
        {"5 Eisenstein identity suite", identities, 0},
        {"6 GL2 layer", gl2_layer, 0},
        {"7 ghost contract", ghost_contract, 0},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && s > c.limit_s) o.fail("runtime " + std::to_string(s) + "s over limit");
        if (!o.ok) ++failed;
        std::printf("[%s] criterion %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, s,
                    o.note.empty() ? "" : ": ", o.note.c_str());
    }
    return failed == 0 ? 0 : 1;
}

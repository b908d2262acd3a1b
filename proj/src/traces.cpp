#include "sl3coh/traces.hpp"

#include <stdexcept>

namespace sl3coh {

namespace {

Int mod(Int x, Int k) { return ((x % k) + k) % k; }

void require_k(int k) {
    if (k != 2 && k != 3 && k != 4 && k != 6)
        throw std::invalid_argument("trace order must be 2, 3, 4 or 6");
}

Int rational_or_throw(const CyclotomicInt& c, const char* what) {
    if (!c.is_rational()) throw std::logic_error(std::string(what) + ": trace is not rational");
    return c.rational_part();
}

constexpr int kM6[6][6] = {{1, 2, 2, 1, 0, 0},   {2, 3, 2, 0, -1, 0},  {2, 2, 0, -2, -2, 0},
                           {1, 0, -2, -3, -2, 0}, {0, -1, -2, -2, -1, 0}, {0, 0, 0, 0, 0, 0}};
constexpr int kM4[4][4] = {{1, 1, 0, 0}, {1, 0, -1, 0}, {0, -1, -1, 0}, {0, 0, 0, 0}};
constexpr int kM3[3][3] = {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};

}  // namespace

const std::vector<TorsionClass>& sl3_torsion_classes() {
    static const std::vector<TorsionClass> table{
        {"Phi1^3", 1, Rational(0), 0},
        {"Phi1Phi2^2", 2, Rational(-1, 24), 4},
        {"Phi1Phi3", 3, Rational(1, 6), 3},
        {"Phi1Phi4", 4, Rational(1, 4), 2},
        {"Phi1Phi6", 6, Rational(1, 6), 1},
    };
    return table;
}

const std::vector<GL2TorsionClass>& gl2_torsion_classes() {
    static const std::vector<GL2TorsionClass> table{
        {"Phi1^2", Rational(-1, 24), true}, {"Phi2^2", Rational(-1, 24), true},
        {"Phi1Phi2", Rational(1, 2), false}, {"Phi3", Rational(1, 6), true},
        {"Phi4", Rational(1, 4), true},      {"Phi6", Rational(1, 6), true},
    };
    return table;
}

CyclotomicInt gt_character(Int m1, Int m2, Int m3, int order, const std::array<Int, 3>& exps) {
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("gt_character: negative weight");
    std::vector<Int> count(order, 0);
    Int top = m1 + 2 * m2 + 3 * m3;
    for (Int p1 = m2 + m3; p1 <= m1 + m2 + m3; ++p1)
        for (Int p2 = m3; p2 <= m2 + m3; ++p2)
            for (Int q = p2; q <= p1; ++q) {
                Int e = exps[0] * q + exps[1] * (p1 + p2 - q) + exps[2] * (top - p1 - p2);
                ++count[mod(e, order)];
            }
    CyclotomicInt out(order);
    for (int r = 0; r < order; ++r)
        if (count[r] != 0) out += CyclotomicInt::xi_power(order, r) * count[r];
    return out;
}

Int gt_trace(Int m1, Int m2, Int m3, int k) {
    require_k(k);
    return rational_or_throw(gt_character(m1, m2, m3, k, {1, -1, 0}), "gt_trace");
}

Int gt_pattern_count(Int m1, Int m2) {
    return rational_or_throw(gt_character(m1, m2, 0, 1, {0, 0, 0}), "gt_pattern_count");
}

Int weyl_dimension(Int m1, Int m2) { return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2; }

Int ck_sum(Int p1, Int p2, int k) {
    require_k(k);
    if (p1 < p2) throw std::invalid_argument("ck_sum: p1 < p2");
    Int d = p1 - p2;
    switch (k) {
        case 6: {
            constexpr int t[6] = {1, 1, 0, -1, -1, 0};
            return t[d % 6];
        }
        case 4: {
            constexpr int t[4] = {1, 0, -1, 0};
            return t[d % 4];
        }
        case 3: {
            constexpr int t[3] = {1, -1, 0};
            return t[d % 3];
        }
        default:
            return (p1 + p2) % 2 == 0 ? d + 1 : -(d + 1);
    }
}

Int closed_trace(Int m1, Int m2, Int m3, int k) {
    require_k(k);
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("closed_trace: negative weight");
    (void)m3;
    switch (k) {
        case 6: return kM6[m1 % 6][m2 % 6];
        case 4: return kM4[m1 % 4][m2 % 4];
        case 3: return kM3[m1 % 3][m2 % 3];
        default: break;
    }
    bool e1 = m1 % 2 == 0, e2 = m2 % 2 == 0;
    if (e1 && e2) return 1 + (m1 + m2) / 2;
    if (e1) return -(m2 + 1) / 2;
    if (e2) return -(m1 + 1) / 2;
    return 0;
}

CyclotomicInt complete_homogeneous(Int m, int k) {
    CyclotomicInt out(k);
    if (m < 0) return out;
    std::vector<Int> count(k, 0);
    for (Int a = 0; a <= m; ++a)
        for (Int b = 0; a + b <= m; ++b) ++count[mod(a - b, k)];
    for (int r = 0; r < k; ++r)
        if (count[r] != 0) out += CyclotomicInt::xi_power(k, r) * count[r];
    return out;
}

Int weyl_det_trace(Int m1, Int m2, int k) {
    require_k(k);
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("weyl_det_trace: negative weight");
    auto det = complete_homogeneous(m1 + m2, k) * complete_homogeneous(m2, k) -
               complete_homogeneous(m1 + m2 + 1, k) * complete_homogeneous(m2 - 1, k);
    return rational_or_throw(det, "weyl_det_trace");
}

}  // namespace sl3coh

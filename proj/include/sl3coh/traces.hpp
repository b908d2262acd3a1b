#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sl3coh/cyclotomic.hpp"

namespace sl3coh {

using Rational = boost::rational<Int>;

// Conjugacy classes of torsion elements of SL3(Z), keyed by characteristic polynomial.
struct TorsionClass {
    std::string label;
    int k = 1;  // T is conjugate to diag(1, R_k) with R_k of order k; k = 1 is the identity
    Rational centralizer_chi;
    Int resultant = 0;
};

const std::vector<TorsionClass>& sl3_torsion_classes();

// GL2(Z) torsion classes, with the coefficient each trace carries in Wall's sum.
struct GL2TorsionClass {
    std::string label;
    Rational wall_coefficient;
    bool in_sl2 = true;
};

const std::vector<GL2TorsionClass>& gl2_torsion_classes();

// Sum over GT patterns of x1^q x2^{p1+p2-q} x3^{N-p1-p2}, x_i = xi_K^{e_i}.
CyclotomicInt gt_character(Int m1, Int m2, Int m3, int order, const std::array<Int, 3>& exps);

Int gt_trace(Int m1, Int m2, Int m3, int k);

Int gt_pattern_count(Int m1, Int m2);
Int weyl_dimension(Int m1, Int m2);

Int ck_sum(Int p1, Int p2, int k);

Int closed_trace(Int m1, Int m2, Int m3, int k);

// Complete homogeneous polynomial of degree m in (xi_k, xi_k^{-1}, 1); zero for m < 0.
CyclotomicInt complete_homogeneous(Int m, int k);

Int weyl_det_trace(Int m1, Int m2, int k);

}  // namespace sl3coh

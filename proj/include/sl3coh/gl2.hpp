#pragma once

#include "sl3coh/root_system.hpp"

namespace sl3coh {

enum class CuspConvention { Actual, EulerConvention };

// dim S_k for SL2(Z). Under EulerConvention dim S_2 = -1.
Int dim_cusp_forms(Int k, CuspConvention conv = CuspConvention::Actual);

Int sl2_euler(Int m);
Int gl2_euler(Int m, int det_twist);

Int sl2_euler_wall(Int m);
Int gl2_euler_wall(Int m, int det_twist);

// Sym^a tensor det^{(n-a)/2}.
struct GL2Weight {
    Int a = 0;
    Int n = 0;
};

enum class H1Branch {
    InnerEqualsFull,     // a/2 = n/2 mod 2: H^1 = H^1_!
    CompactEqualsInner,  // a/2 != n/2 mod 2: H^1_c = H^1_!, one Eisenstein line
};

struct H1Split {
    Int inner_dim = 0;
    Int eisenstein_dim = 0;
    H1Branch boundary_context = H1Branch::InnerEqualsFull;
};

H1Split h1_split(const GL2Weight& w);

}  // namespace sl3coh

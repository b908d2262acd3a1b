#pragma once

#include <map>
#include <vector>

#include "sl3coh/parity.hpp"
#include "sl3coh/profile.hpp"

namespace sl3coh {

enum class E1Source {
    H0Line,          // H^0 of a Levi face, a = 0
    Inner,           // H^1_! = Cusp(a+2)
    EisensteinLine,  // H^1 beyond H^1_!
    TorusLine,       // P0 face
};

struct E1Term {
    Parabolic parabolic = Parabolic::P0;
    WeylElement w = WeylElement::E;
    int face_degree = 0;  // degree inside the Levi quotient
    LeviWeight levi;
    E1Source source = E1Source::TorusLine;
    CohomologySummand summand;

    int degree() const { return length(w) + face_degree; }
};

struct E1Page {
    int case_id = 0;
    std::map<int, std::vector<E1Term>> col0;  // P1, P2 faces
    std::map<int, std::vector<E1Term>> col1;  // P0 face

    Int dim(int p, int q) const;
};

E1Page e1_page(const HighestWeight& lam);

// rank of d1^{0,q}: col0 -> col1.
Int d1_rank(const HighestWeight& lam, int q);

struct E2Page {
    GradedProfile col0;
    GradedProfile col1;
};

E2Page e2_page(const HighestWeight& lam);

// H^k = E2^{0,k} + E2^{1,k-1}
GradedProfile boundary_profile(const HighestWeight& lam);

// nine closed case formulas
GradedProfile boundary_case_formula(const HighestWeight& lam);

// alternating sum with dim S_2 = -1
Int boundary_euler_closed(const HighestWeight& lam);

}  // namespace sl3coh

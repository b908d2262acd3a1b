#pragma once

#include <map>
#include <string>

#include "sl3coh/boundary.hpp"

namespace sl3coh {

struct IdentityFlags {
    bool chi_eis_equals_chi_h = false;
    bool half_boundary = false;
    bool poincare_pair = false;

    bool all() const { return chi_eis_equals_chi_h && half_boundary && poincare_pair; }
    bool operator==(const IdentityFlags&) const = default;
};

struct EisensteinReport {
    GradedProfile profile;
    Int chi_eis = 0;
    IdentityFlags identities;
};

// nine closed case formulas
GradedProfile eisenstein_case_formula(const HighestWeight& lam);

// Eisenstein image deduced from the boundary: H^0 part, half of H^2, dimension
// count in H^3 fixed by chi_h and the isotropy relation.
GradedProfile eisenstein_from_boundary(const HighestWeight& lam);

EisensteinReport eisenstein_profile(const HighestWeight& lam);

IdentityFlags verify_identities(const HighestWeight& lam);

enum class GhostStatus { Zero, UndeterminedZeroOrOne };

std::string ghost_status_name(GhostStatus s);
GhostStatus ghost_status_from_name(const std::string& s);

struct GhostReport {
    std::map<int, GhostStatus> by_degree;  // 0..4
    bool operator==(const GhostReport&) const = default;
};

// Gh^q = Im(r^q) cap Ker(p^q); Ker(p^q) is the image of E2^{1,q-1}.
GhostReport ghost_report(const HighestWeight& lam);

// Upper bound on dim Gh^q: min(dim E2^{1,q-1}, dim Eis^q).
Int ghost_upper_bound(const HighestWeight& lam, int q);

struct TotalCohomology {
    GradedProfile eisenstein;
    GradedProfile inner_lower_bound;
    bool self_dual = false;
    bool inner_known = true;
};

TotalCohomology total_cohomology(const HighestWeight& lam, Group group);

}  // namespace sl3coh

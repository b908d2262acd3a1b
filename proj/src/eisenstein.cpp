#include "sl3coh/eisenstein.hpp"

#include <stdexcept>

#include "sl3coh/euler.hpp"

namespace sl3coh {

namespace {

HighestWeight sl3_part(const HighestWeight& lam) { return HighestWeight::sl3(lam.m1, lam.m2); }

// every multiplicity halved; empty optional if some multiplicity is odd
bool halve(const std::vector<CohomologySummand>& in, std::vector<CohomologySummand>& out) {
    out.clear();
    for (auto s : in) {
        if (s.multiplicity % 2 != 0) return false;
        s.multiplicity /= 2;
        out.push_back(s);
    }
    return true;
}

Int dim_of(const std::vector<CohomologySummand>& v) {
    Int d = 0;
    for (const auto& s : v) d += s.dim();
    return d;
}

}  // namespace

GradedProfile eisenstein_case_formula(const HighestWeight& lam) {
    GradedProfile p;
    p.case_id = case_classifier(lam);
    Int m1 = lam.m1, m2 = lam.m2;
    auto Q = CohomologySummand::trivial;
    auto S = [](Int k) { return CohomologySummand::cusp(k); };
    switch (p.case_id) {
        case 1: p.add(0, Q(1)); break;
        case 2: p.add(3, S(m2 + 2)); break;
        case 3: p.add(3, S(m1 + 2)); break;
        case 4:
            p.add(3, Q(1));
            p.add(3, S(m1 + 2));
            p.add(3, S(m2 + 2));
            break;
        case 5:
            p.add(2, S(m1 + m2 + 3));
            p.add(3, S(m1 + 2));
            break;
        case 6:
            p.add(2, S(m2 + 3));
            p.add(2, Q(1));
            break;
        case 7:
            p.add(2, S(m1 + 3));
            p.add(2, Q(1));
            break;
        case 8:
            p.add(2, S(m1 + m2 + 3));
            p.add(3, S(m2 + 2));
            break;
        default: break;
    }
    return p.normalized();
}

GradedProfile eisenstein_from_boundary(const HighestWeight& lam) {
    auto b = boundary_profile(lam);
    GradedProfile out;
    out.case_id = b.case_id;
    if (lam.m1 == 0 && lam.m2 == 0) {
        for (const auto& s : b.at(0)) out.add(0, s);
        return out.normalized();
    }
    // h^0 = h^1 = 0 for nonzero weights
    Int chi = sl3_euler_closed(lam);
    auto dual = boundary_profile(lam.dual());
    Int h3;
    if (b.dim(2) == 0) {
        h3 = -chi;
    } else if (b.dim(3) == 0) {
        h3 = 0;
    } else {
        // restriction is injective in degree 3 on the sum over lambda and lambda*
        Int isotropic = (b.dim(1) + b.dim(3) + dual.dim(1) + dual.dim(3)) / 2;
        if (isotropic != b.dim(3) + dual.dim(3))
            throw std::logic_error("eisenstein_from_boundary: degree 3 not determined");
        h3 = b.dim(3);
    }
    Int h2 = chi + h3;
    if (h3 == b.dim(3)) {
        for (const auto& s : b.at(3)) out.add(3, s);
    } else if (h3 != 0) {
        throw std::logic_error("eisenstein_from_boundary: partial degree 3 image");
    }
    std::vector<CohomologySummand> half;
    if (!b.at(2).empty()) {
        if (!halve(b.at(2), half) || dim_of(half) != h2)
            throw std::logic_error("eisenstein_from_boundary: degree 2 is not half the boundary");
        for (const auto& s : half) out.add(2, s);
    } else if (h2 != 0) {
        throw std::logic_error("eisenstein_from_boundary: degree 2 exceeds boundary");
    }
    return out.normalized();
}

IdentityFlags verify_identities(const HighestWeight& lam) {
    auto l = sl3_part(lam);
    auto eis = eisenstein_case_formula(l);
    auto eis_dual = eisenstein_case_formula(l.dual());
    auto bd = boundary_profile(l);
    auto bd_dual = boundary_profile(l.dual());
    IdentityFlags f;
    f.chi_eis_equals_chi_h = eis.euler() == sl3_euler_closed(l) && eis.euler() == sl3_euler_wall(l);
    f.half_boundary = 2 * eis.euler() == bd.euler();
    f.poincare_pair = 2 * (eis.total_dim() + eis_dual.total_dim()) == bd.total_dim() + bd_dual.total_dim();
    return f;
}

EisensteinReport eisenstein_profile(const HighestWeight& lam) {
    EisensteinReport r;
    r.profile = eisenstein_case_formula(sl3_part(lam));
    r.chi_eis = r.profile.euler();
    r.identities = verify_identities(lam);
    return r;
}

std::string ghost_status_name(GhostStatus s) {
    return s == GhostStatus::Zero ? "zero" : "undetermined_zero_or_one";
}

GhostStatus ghost_status_from_name(const std::string& s) {
    if (s == "zero") return GhostStatus::Zero;
    if (s == "undetermined_zero_or_one") return GhostStatus::UndeterminedZeroOrOne;
    throw std::invalid_argument("unknown ghost status: " + s);
}

Int ghost_upper_bound(const HighestWeight& lam, int q) {
    auto l = sl3_part(lam);
    auto e2 = e2_page(l);
    Int kernel = e2.col1.dim(q - 1);
    Int eis = eisenstein_case_formula(l).dim(q);
    return std::min(kernel, eis);
}

GhostReport ghost_report(const HighestWeight& lam) {
    GhostReport g;
    for (int q = 0; q <= 4; ++q) {
        Int bound = ghost_upper_bound(lam, q);
        if (bound > 1) throw std::logic_error("ghost_report: bound exceeds one");
        g.by_degree[q] = bound == 0 ? GhostStatus::Zero : GhostStatus::UndeterminedZeroOrOne;
    }
    return g;
}

TotalCohomology total_cohomology(const HighestWeight& lam, Group group) {
    TotalCohomology t;
    if (group == Group::GL3) {
        if (!lam.m3) throw std::invalid_argument("total_cohomology: GL3 needs m3");
        if (((lam.m1 + 2 * lam.m2 + 3 * *lam.m3) % 2 + 2) % 2 != 0) {
            t.self_dual = lam.m1 == lam.m2;
            t.inner_known = true;
            return t;
        }
    }
    auto l = sl3_part(lam);
    t.eisenstein = eisenstein_case_formula(l);
    t.inner_lower_bound.case_id = t.eisenstein.case_id;
    t.self_dual = l.m1 == l.m2;
    t.inner_known = !t.self_dual;
    return t;
}

}  // namespace sl3coh

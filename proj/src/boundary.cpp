#include "sl3coh/boundary.hpp"

#include <algorithm>

namespace sl3coh {

namespace {

void add_levi_terms(E1Page& page, Parabolic p, WeylElement w, const HighestWeight& lam) {
    int levi = p == Parabolic::P1 ? 1 : 2;
    auto r = restrict_to_levi(p, w, lam.m1, lam.m2);
    auto& col = page.col0;
    if (r.a == 0) {
        col[length(w)].push_back({p, w, 0, r, E1Source::H0Line, CohomologySummand::trivial()});
        return;
    }
    auto split = h1_split(GL2Weight{r.a, r.n});
    int q = length(w) + 1;
    col[q].push_back({p, w, 1, r, E1Source::Inner, CohomologySummand::cusp(r.a + 2)});
    if (split.eisenstein_dim > 0)
        col[q].push_back({p, w, 1, r, E1Source::EisensteinLine, CohomologySummand::trivial()});
    (void)levi;
}

Int noncusp_count(const std::vector<E1Term>& terms) {
    return std::count_if(terms.begin(), terms.end(),
                         [](const E1Term& t) { return t.source != E1Source::Inner; });
}

}  // namespace

Int E1Page::dim(int p, int q) const {
    const auto& col = p == 0 ? col0 : col1;
    auto it = col.find(q);
    if (it == col.end()) return 0;
    Int d = 0;
    for (const auto& t : it->second) d += t.summand.dim();
    return d;
}

E1Page e1_page(const HighestWeight& lam) {
    auto s = survivor_sets(lam);
    E1Page page;
    page.case_id = case_classifier(lam);
    for (auto w : s.w1) add_levi_terms(page, Parabolic::P1, w, lam);
    for (auto w : s.w2) add_levi_terms(page, Parabolic::P2, w, lam);
    for (auto w : s.w0)
        page.col1[length(w)].push_back(
            {Parabolic::P0, w, 0, {}, E1Source::TorusLine, CohomologySummand::trivial()});
    return page;
}

namespace {

Int rank_on(const E1Page& page, int q) {
    auto src = page.col0.find(q);
    auto dst = page.col1.find(q);
    if (src == page.col0.end() || dst == page.col1.end()) return 0;
    // inner classes restrict to zero; H^0 and Eisenstein lines map onto the torus lines
    return std::min<Int>(noncusp_count(src->second), static_cast<Int>(dst->second.size()));
}

}  // namespace

Int d1_rank(const HighestWeight& lam, int q) { return rank_on(e1_page(lam), q); }

E2Page e2_page(const HighestWeight& lam) {
    auto page = e1_page(lam);
    E2Page e2;
    e2.col0.case_id = e2.col1.case_id = page.case_id;
    for (int q = 0; q <= 3; ++q) {
        Int rank = rank_on(page, q);
        Int lines = 0;
        if (auto it = page.col0.find(q); it != page.col0.end()) {
            for (const auto& t : it->second) {
                if (t.source == E1Source::Inner)
                    e2.col0.add(q, t.summand);
                else
                    ++lines;
            }
        }
        // kernel of d1 on the line part; in the both-faces-H0 case this is the glued W space
        e2.col0.add(q, CohomologySummand::trivial(lines - rank));
        Int torus = 0;
        if (auto it = page.col1.find(q); it != page.col1.end()) torus = it->second.size();
        e2.col1.add(q, CohomologySummand::trivial(torus - rank));
    }
    e2.col0 = e2.col0.normalized();
    e2.col1 = e2.col1.normalized();
    return e2;
}

GradedProfile boundary_profile(const HighestWeight& lam) {
    auto e2 = e2_page(lam);
    GradedProfile out;
    out.case_id = case_classifier(lam);
    for (int k = 0; k <= 4; ++k) {
        for (const auto& s : e2.col0.at(k)) out.add(k, s);
        for (const auto& s : e2.col1.at(k - 1)) out.add(k, s);
    }
    return out.normalized();
}

GradedProfile boundary_case_formula(const HighestWeight& lam) {
    GradedProfile p;
    p.case_id = case_classifier(lam);
    Int m1 = lam.m1, m2 = lam.m2;
    auto Q = CohomologySummand::trivial;
    auto S = [](Int k, Int mult = 1) { return CohomologySummand::cusp(k, mult); };
    switch (p.case_id) {
        case 1:
            p.add(0, Q(1));
            p.add(4, Q(1));
            break;
        case 2:
            p.add(1, S(m2 + 2));
            p.add(3, S(m2 + 2));
            break;
        case 3:
            p.add(1, S(m1 + 2));
            p.add(3, S(m1 + 2));
            break;
        case 4:
            for (int q : {1, 3}) {
                p.add(q, Q(1));
                p.add(q, S(m1 + 2));
                p.add(q, S(m2 + 2));
            }
            break;
        case 5:
            p.add(1, S(m1 + 2));
            p.add(2, S(m1 + m2 + 3, 2));
            p.add(3, S(m1 + 2));
            break;
        case 6:
        case 7:
            p.add(2, S(m1 + m2 + 3, 2));
            p.add(2, Q(2));
            break;
        case 8:
            p.add(1, S(m2 + 2));
            p.add(2, S(m1 + m2 + 3, 2));
            p.add(3, S(m2 + 2));
            break;
        default:
            break;
    }
    return p.normalized();
}

Int boundary_euler_closed(const HighestWeight& lam) {
    auto s = [](Int k) { return dim_cusp_forms(k, CuspConvention::EulerConvention); };
    Int m1 = lam.m1, m2 = lam.m2;
    bool e1 = m1 % 2 == 0, e2 = m2 % 2 == 0;
    if (e1 && e2) return -2 * (1 + s(m1 + 2) + s(m2 + 2));
    if (e1) return 2 * (s(m1 + m2 + 3) - s(m1 + 2));
    if (e2) return 2 * (s(m1 + m2 + 3) - s(m2 + 2));
    return 0;
}

}  // namespace sl3coh

#include "sl3coh/parity.hpp"

#include <stdexcept>

namespace sl3coh {

namespace {

bool even(Int x) { return x % 2 == 0; }

void require_dominant(const HighestWeight& lam) {
    if (!lam.is_dominant()) throw std::invalid_argument("weight is not dominant");
}

}  // namespace

Parabolic levi_parabolic(int levi) {
    if (levi == 1) return Parabolic::P1;
    if (levi == 2) return Parabolic::P2;
    throw std::invalid_argument("levi must be 1 or 2");
}

bool minimal_parabolic_survives(WeylElement w, const HighestWeight& lam) {
    auto d = dot_action(w, lam.m1, lam.m2);
    return even(d.c1) && even(d.c2);
}

bool maximal_parabolic_survives(WeylElement w, const HighestWeight& lam, int levi) {
    auto r = restrict_to_levi(levi_parabolic(levi), w, lam.m1, lam.m2);
    if (!even(r.n)) return false;
    // a = 0 with n/2 odd: the local system exists but all its cohomology vanishes
    if (r.a == 0 && !even(r.n / 2)) return false;
    return true;
}

SurvivorSets survivor_sets(const HighestWeight& lam) {
    require_dominant(lam);
    SurvivorSets s;
    for (auto w : kostant_set(Parabolic::P0))
        if (minimal_parabolic_survives(w, lam)) s.w0.push_back(w);
    for (auto w : kostant_set(Parabolic::P1))
        if (maximal_parabolic_survives(w, lam, 1)) s.w1.push_back(w);
    for (auto w : kostant_set(Parabolic::P2))
        if (maximal_parabolic_survives(w, lam, 2)) s.w2.push_back(w);
    return s;
}

int case_classifier(const HighestWeight& lam) {
    require_dominant(lam);
    Int m1 = lam.m1, m2 = lam.m2;
    if (even(m1) && even(m2)) {
        if (m1 == 0 && m2 == 0) return 1;
        if (m1 == 0) return 2;
        if (m2 == 0) return 3;
        return 4;
    }
    if (even(m1)) return m1 == 0 ? 6 : 5;
    if (even(m2)) return m2 == 0 ? 7 : 8;
    return 9;
}

}  // namespace sl3coh

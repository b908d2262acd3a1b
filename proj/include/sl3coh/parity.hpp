#pragma once

#include <vector>

#include "sl3coh/root_system.hpp"

namespace sl3coh {

struct SurvivorSets {
    std::vector<WeylElement> w0;
    std::vector<WeylElement> w1;
    std::vector<WeylElement> w2;
    bool operator==(const SurvivorSets&) const = default;
};

bool minimal_parabolic_survives(WeylElement w, const HighestWeight& lam);

// levi is 1 or 2.
bool maximal_parabolic_survives(WeylElement w, const HighestWeight& lam, int levi);

SurvivorSets survivor_sets(const HighestWeight& lam);

// 1..9 in the order: (0,0); m1=0, m2 even; m2=0, m1 even; both even;
// m1 even, m2 odd; m1=0, m2 odd; m1 odd, m2=0; m1 odd, m2 even; both odd.
int case_classifier(const HighestWeight& lam);

Parabolic levi_parabolic(int levi);

}  // namespace sl3coh

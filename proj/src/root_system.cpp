#include "sl3coh/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3coh {

HighestWeight HighestWeight::sl3(Int m1, Int m2) { return {m1, m2, std::nullopt}; }

HighestWeight HighestWeight::gl3(Int m1, Int m2, Int m3) { return {m1, m2, m3}; }

HighestWeight HighestWeight::dual() const {
    HighestWeight d{m2, m1, std::nullopt};
    if (m3) d.m3 = -(*m3 + m1 + m2);
    return d;
}

EpsilonWeight EpsilonWeight::from_fundamental(Int m1, Int m2) {
    return EpsilonWeight{{m1 + m2, m2, 0}};
}

EpsilonWeight EpsilonWeight::normalized() const {
    return EpsilonWeight{{c[0] - c[2], c[1] - c[2], 0}};
}

int length(WeylElement w) {
    return static_cast<int>(reduced_word(w).size());
}

std::string name(WeylElement w) {
    switch (w) {
        case WeylElement::E: return "e";
        case WeylElement::S1: return "s1";
        case WeylElement::S2: return "s2";
        case WeylElement::S1S2: return "s1s2";
        case WeylElement::S2S1: return "s2s1";
        case WeylElement::W0: return "s1s2s1";
    }
    return "?";
}

std::string cycle_notation(WeylElement w) {
    switch (w) {
        case WeylElement::E: return "()";
        case WeylElement::S1: return "(12)";
        case WeylElement::S2: return "(23)";
        case WeylElement::S1S2: return "(123)";
        case WeylElement::S2S1: return "(132)";
        case WeylElement::W0: return "(13)";
    }
    return "?";
}

std::vector<int> reduced_word(WeylElement w) {
    switch (w) {
        case WeylElement::E: return {};
        case WeylElement::S1: return {1};
        case WeylElement::S2: return {2};
        case WeylElement::S1S2: return {1, 2};
        case WeylElement::S2S1: return {2, 1};
        case WeylElement::W0: return {1, 2, 1};
    }
    return {};
}

namespace {

std::array<int, 3> simple(int i) {
    if (i == 1) return {1, 0, 2};
    return {0, 2, 1};
}

std::array<int, 3> after(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return {a[b[0]], a[b[1]], a[b[2]]};
}

}  // namespace

std::array<int, 3> permutation(WeylElement w) {
    std::array<int, 3> p{0, 1, 2};
    for (int s : reduced_word(w)) p = after(p, simple(s));
    return p;
}

WeylElement compose(WeylElement a, WeylElement b) {
    auto p = after(permutation(a), permutation(b));
    for (auto w : kAllWeyl)
        if (permutation(w) == p) return w;
    throw std::logic_error("compose: not a permutation");
}

WeylElement inverse(WeylElement w) {
    for (auto v : kAllWeyl)
        if (compose(w, v) == WeylElement::E) return v;
    throw std::logic_error("inverse");
}

EpsilonWeight apply(WeylElement w, const EpsilonWeight& v) {
    auto s = permutation(w);
    EpsilonWeight out;
    for (int i = 0; i < 3; ++i) out.c[s[i]] = v.c[i];
    return out;
}

std::string name(Parabolic p) {
    switch (p) {
        case Parabolic::P0: return "P0";
        case Parabolic::P1: return "P1";
        case Parabolic::P2: return "P2";
    }
    return "?";
}

std::vector<Root> positive_roots() { return {{0, 1}, {0, 2}, {1, 2}}; }

std::vector<Root> unipotent_roots(Parabolic p) {
    switch (p) {
        case Parabolic::P0: return positive_roots();
        case Parabolic::P1: return {{0, 1}, {0, 2}};
        case Parabolic::P2: return {{0, 2}, {1, 2}};
    }
    return {};
}

Root apply(WeylElement w, const Root& r) {
    auto s = permutation(w);
    return {s[r[0]], s[r[1]]};
}

bool is_positive(const Root& r) { return r[0] < r[1]; }

std::vector<WeylElement> kostant_set(Parabolic p) {
    auto n = unipotent_roots(p);
    std::vector<WeylElement> out;
    for (auto w : kAllWeyl) {
        bool ok = true;
        for (const auto& r : positive_roots()) {
            Root image = sl3coh::apply(w, Root{r[1], r[0]});
            if (is_positive(image) && std::find(n.begin(), n.end(), image) == n.end())
                ok = false;
        }
        if (ok) out.push_back(w);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](WeylElement a, WeylElement b) { return length(a) < length(b); });
    return out;
}

DotResult dot_action(WeylElement w, Int m1, Int m2) {
    auto v = EpsilonWeight::from_fundamental(m1, m2);
    v.c[0] += 1;
    v.c[2] -= 1;
    auto u = sl3coh::apply(w, v);
    u.c[0] -= 1;
    u.c[2] += 1;
    return {u.m1(), u.m2()};
}

LeviWeight restrict_to_levi(Parabolic p, WeylElement w, Int m1, Int m2) {
    if (p == Parabolic::P1) {
        switch (w) {
            case WeylElement::E: return {m2, -2 * m1 - m2};
            case WeylElement::S1: return {m1 + m2 + 1, m1 - m2 + 3};
            case WeylElement::S1S2: return {m1, m1 + 2 * m2 + 6};
            default: break;
        }
    } else if (p == Parabolic::P2) {
        switch (w) {
            case WeylElement::E: return {m1, m1 + 2 * m2};
            case WeylElement::S2: return {m1 + m2 + 1, m1 - m2 - 3};
            case WeylElement::S2S1: return {m2, -2 * m1 - m2 - 6};
            default: break;
        }
    }
    throw std::invalid_argument("restrict_to_levi: " + name(w) + " is not a Kostant representative for " + name(p));
}

}  // namespace sl3coh

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl3coh {

using Int = std::int64_t;

enum class Group { SL3, GL3 };

// m1*g1 + m2*g2 (+ m3*det for GL3), g1 = e1, g2 = e1 + e2.
struct HighestWeight {
    Int m1 = 0;
    Int m2 = 0;
    std::optional<Int> m3;

    static HighestWeight sl3(Int m1, Int m2);
    static HighestWeight gl3(Int m1, Int m2, Int m3);

    bool is_dominant() const { return m1 >= 0 && m2 >= 0; }
    Group group() const { return m3 ? Group::GL3 : Group::SL3; }
    HighestWeight dual() const;  // (m2, m1) on the SL3 part
    bool operator==(const HighestWeight&) const = default;
};

// c1 e1 + c2 e2 + c3 e3. For SL3 only differences matter.
struct EpsilonWeight {
    std::array<Int, 3> c{0, 0, 0};

    static EpsilonWeight from_fundamental(Int m1, Int m2);
    EpsilonWeight normalized() const;  // c3 = 0 representative
    Int m1() const { return c[0] - c[1]; }
    Int m2() const { return c[1] - c[2]; }
    bool operator==(const EpsilonWeight&) const = default;
};

enum class WeylElement { E, S1, S2, S1S2, S2S1, W0 };

inline constexpr std::array<WeylElement, 6> kAllWeyl{
    WeylElement::E,    WeylElement::S1,   WeylElement::S2,
    WeylElement::S1S2, WeylElement::S2S1, WeylElement::W0};

int length(WeylElement w);
std::string name(WeylElement w);
std::string cycle_notation(WeylElement w);
// Reduced word, leftmost letter applied last.
std::vector<int> reduced_word(WeylElement w);
// sigma with w(e_i) = e_{sigma(i)}, zero based.
std::array<int, 3> permutation(WeylElement w);
WeylElement compose(WeylElement a, WeylElement b);  // a after b
WeylElement inverse(WeylElement w);

EpsilonWeight apply(WeylElement w, const EpsilonWeight& v);

enum class Parabolic { P0, P1, P2 };

std::string name(Parabolic p);

// Minimal length representatives, computed from the inversion criterion.
std::vector<WeylElement> kostant_set(Parabolic p);

// Roots as e_i - e_j, stored as (i, j), zero based.
using Root = std::array<int, 2>;
std::vector<Root> positive_roots();
std::vector<Root> unipotent_roots(Parabolic p);
Root apply(WeylElement w, const Root& r);
bool is_positive(const Root& r);

struct DotResult {
    Int c1 = 0;  // coefficient on g1
    Int c2 = 0;  // coefficient on g2
    bool operator==(const DotResult&) const = default;
};

DotResult dot_action(WeylElement w, Int m1, Int m2);

// a * gamma^{M} + n * kappa^{M} on the Levi of P1 or P2.
struct LeviWeight {
    Int a = 0;
    Int n = 0;
    bool operator==(const LeviWeight&) const = default;
};

LeviWeight restrict_to_levi(Parabolic p, WeylElement w, Int m1, Int m2);

}  // namespace sl3coh

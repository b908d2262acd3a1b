#include "sl3coh/gl2.hpp"
#include "sl3coh/traces.hpp"

#include <array>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace sl3coh {

namespace {

using Q = boost::rational<Int>;

Int mod(Int x, Int k) { return ((x % k) + k) % k; }

constexpr std::array<int, 3> kTrace3{1, -1, 0};
constexpr std::array<int, 4> kTrace4{1, 0, -1, 0};
constexpr std::array<int, 6> kTrace6{1, 1, 0, -1, -1, 0};

Int integral(const Q& q, const char* what) {
    if (q.denominator() != 1) throw std::logic_error(std::string(what) + ": non-integral Euler sum");
    return q.numerator();
}

void require_twist(int t) {
    if (t != 0 && t != 1) throw std::invalid_argument("det twist must be 0 or 1");
}

}  // namespace

Int dim_cusp_forms(Int k, CuspConvention conv) {
    if (k < 2) throw std::invalid_argument("dim_cusp_forms: k < 2");
    if (k % 2 != 0) return 0;
    if (k == 2) return conv == CuspConvention::EulerConvention ? -1 : 0;
    Int l = (k - 2) / 12;
    Int i = (k - 2) % 12;
    if (i == 0) return l - 1;
    if (i == 10) return l + 1;
    return l;
}

Int gl2_euler(Int m, int det_twist) {
    require_twist(det_twist);
    if (m < 0) throw std::invalid_argument("gl2_euler: m < 0");
    Int l = m / 12, k = m % 12;
    if (k % 2 != 0) return 0;
    if (k == 0) return -l + 1 - det_twist;
    if (k == 10) return -l - 1 - det_twist;
    return -l - det_twist;
}

Int sl2_euler(Int m) { return gl2_euler(m, 0) + gl2_euler(m, 1); }

Int sl2_euler_wall(Int m) {
    if (m < 0) throw std::invalid_argument("sl2_euler_wall: m < 0");
    Int sign = m % 2 == 0 ? 1 : -1;
    Q chi = Q(-(m + 1), 12) - Q(sign * (m + 1), 12) + Q(2 * kTrace3[mod(m, 3)], 6) +
            Q(2 * kTrace4[mod(m, 4)], 4) + Q(2 * kTrace6[mod(m, 6)], 6);
    return integral(chi, "sl2_euler_wall");
}

Int gl2_euler_wall(Int m, int det_twist) {
    require_twist(det_twist);
    if (m < 0) throw std::invalid_argument("gl2_euler_wall: m < 0");
    Int sign = m % 2 == 0 ? 1 : -1;
    Q chi = 0;
    for (const auto& t : gl2_torsion_classes()) {
        Int h = 0;
        if (t.label == "Phi1^2") h = m + 1;
        else if (t.label == "Phi2^2") h = sign * (m + 1);
        // diag(1,-1) on Sym^m tensor det^t
        else if (t.label == "Phi1Phi2") h = m % 2 == 0 ? (det_twist == 0 ? 1 : -1) : 0;
        else if (t.label == "Phi3") h = kTrace3[mod(m, 3)];
        else if (t.label == "Phi4") h = kTrace4[mod(m, 4)];
        else if (t.label == "Phi6") h = kTrace6[mod(m, 6)];
        chi += t.wall_coefficient * h;
    }
    return integral(chi, "gl2_euler_wall");
}

H1Split h1_split(const GL2Weight& w) {
    if (w.a < 0 || w.a % 2 != 0 || w.n % 2 != 0)
        throw std::invalid_argument("h1_split: a and n must be even with a >= 0");
    if (w.a == 0 && mod(w.n / 2, 2) != 0)
        throw std::invalid_argument("h1_split: a = 0 with n/2 odd has no cohomology");
    H1Split s;
    s.inner_dim = dim_cusp_forms(w.a + 2);
    if (mod(w.a / 2, 2) != mod(w.n / 2, 2)) {
        s.boundary_context = H1Branch::CompactEqualsInner;
        s.eisenstein_dim = 1;
    }
    return s;
}

}  // namespace sl3coh

#include "sl3coh/verify.hpp"

#include <random>

#include "sl3coh/eisenstein.hpp"
#include "sl3coh/euler.hpp"
#include "sl3coh/gl2.hpp"
#include "sl3coh/traces.hpp"

namespace sl3coh {

namespace {

class Recorder {
public:
    explicit Recorder(VerifyResult& r) : r_(r) {}

    void check(const std::string& name, bool ok, Int m1, Int m2, const std::string& detail = {},
               std::optional<Int> m3 = std::nullopt, std::optional<int> k = std::nullopt) {
        ++r_.checks_run[name];
        if (!ok) r_.failures.push_back({name, m1, m2, m3, k, detail});
    }

    template <class F>
    void guarded(const std::string& name, Int m1, Int m2, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(name, false, m1, m2, e.what());
        }
    }

private:
    VerifyResult& r_;
};

std::string pair(Int a, Int b) { return std::to_string(a) + " vs " + std::to_string(b); }

void weight_checks(Recorder& rec, Int m1, Int m2, const TraceFn& closed) {
    auto lam = HighestWeight::sl3(m1, m2);

    for (int k : {2, 3, 4, 6}) {
        Int c = closed(m1, m2, 0, k), w = weyl_det_trace(m1, m2, k);
        rec.check("closed_trace", c == w, m1, m2, "closed vs weyl " + pair(c, w), 0, k);
    }

    rec.guarded("sl3_euler_wall", m1, m2, [&] {
        Rational chi = 0;
        for (const auto& t : sl3_torsion_classes())
            if (t.k != 1) chi += t.centralizer_chi * t.resultant * closed(m1, m2, 0, t.k);
        Int closed_form = sl3_euler_closed(lam);
        rec.check("sl3_euler_wall", chi == Rational(closed_form), m1, m2,
                  "wall " + std::to_string(chi.numerator()) + "/" + std::to_string(chi.denominator()) +
                      " closed " + std::to_string(closed_form));
        Int cell = euler_cell(m1 % 12, m2 % 12).evaluate(m1, m2);
        rec.check("euler_table", cell == closed_form, m1, m2, pair(cell, closed_form));
        rec.check("euler_symmetry", closed_form == sl3_euler_closed(lam.dual()), m1, m2);
    });

    rec.guarded("boundary_profile", m1, m2, [&] {
        auto b = boundary_profile(lam);
        auto f = boundary_case_formula(lam);
        rec.check("boundary_profile", b.same_summands(f), m1, m2, b.to_string() + " vs " + f.to_string());
        rec.check("boundary_euler", b.euler() == boundary_euler_closed(lam), m1, m2,
                  pair(b.euler(), boundary_euler_closed(lam)));
        auto bd = boundary_profile(lam.dual());
        bool dual_ok = true;
        for (int q = 0; q <= 4; ++q) dual_ok = dual_ok && b.dim(q) == bd.dim(4 - q);
        rec.check("boundary_duality", dual_ok, m1, m2);
    });

    rec.guarded("eisenstein", m1, m2, [&] {
        auto eis = eisenstein_case_formula(lam);
        auto derived = eisenstein_from_boundary(lam);
        rec.check("eisenstein_from_boundary", eis.same_summands(derived), m1, m2,
                  eis.to_string() + " vs " + derived.to_string());
        rec.check("eisenstein_in_boundary", eis.contained_in(boundary_profile(lam)), m1, m2);
        bool low = eis.at(1).empty() && (m1 == 0 && m2 == 0 ? eis.dim(0) == 1 : eis.at(0).empty());
        rec.check("eisenstein_low_degrees", low, m1, m2);
        auto f = verify_identities(lam);
        rec.check("chi_eis_equals_chi_h", f.chi_eis_equals_chi_h, m1, m2);
        rec.check("half_boundary", f.half_boundary, m1, m2);
        rec.check("poincare_pair", f.poincare_pair, m1, m2);
    });

    rec.guarded("ghost_report", m1, m2, [&] {
        auto g = ghost_report(lam);
        int c = case_classifier(lam);
        bool ok = true;
        for (int q = 0; q <= 4; ++q) {
            bool expect_open = q == 2 && (c == 6 || c == 7);
            ok = ok && (g.by_degree.at(q) == GhostStatus::UndeterminedZeroOrOne) == expect_open;
        }
        rec.check("ghost_report", ok, m1, m2);
    });
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& opts) {
    VerifyResult result;
    Recorder rec(result);
    TraceFn closed = opts.closed_trace ? opts.closed_trace : TraceFn(closed_trace);

    Int tmax = std::min(opts.max, opts.trace_max);
    for (Int m1 = 0; m1 <= tmax; ++m1)
        for (Int m2 = 0; m2 <= tmax; ++m2)
            for (Int m3 = 0; m3 <= 2; ++m3)
                for (int k : {2, 3, 4, 6}) {
                    Int g = gt_trace(m1, m2, m3, k);
                    Int c = closed(m1, m2, m3, k);
                    rec.check("closed_trace", g == c, m1, m2, "gt vs closed " + pair(g, c), m3, k);
                    if (m3 == 0) {
                        Int w = weyl_det_trace(m1, m2, k);
                        rec.check("weyl_det_trace", g == w, m1, m2, "gt vs weyl " + pair(g, w), m3, k);
                    }
                }

    for (Int m = 0; m <= opts.max; ++m)
        for (int t : {0, 1}) {
            Int w = gl2_euler_wall(m, t);
            rec.check("gl2_euler_wall", w == gl2_euler(m, t), m, 0, "twist " + std::to_string(t) + ": " + pair(w, gl2_euler(m, t)));
        }

    for (Int m1 = 0; m1 <= opts.max; ++m1)
        for (Int m2 = 0; m2 <= opts.max; ++m2) weight_checks(rec, m1, m2, closed);

    if (opts.seed) {
        std::mt19937_64 rng(*opts.seed);
        std::uniform_int_distribution<Int> dist(opts.max + 1, opts.max + 500);
        for (int i = 0; i < opts.random_samples; ++i) weight_checks(rec, dist(rng), dist(rng), closed);
    }
    return result;
}

nlohmann::json to_json(const VerifyFailure& f) {
    nlohmann::json j{{"check", f.check}, {"m1", f.m1}, {"m2", f.m2}, {"detail", f.detail}};
    j["m3"] = f.m3 ? nlohmann::json(*f.m3) : nlohmann::json(nullptr);
    j["k"] = f.k ? nlohmann::json(*f.k) : nlohmann::json(nullptr);
    return j;
}

}  // namespace sl3coh

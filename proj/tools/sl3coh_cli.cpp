#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sl3coh/report.hpp"
#include "sl3coh/verify.hpp"

using namespace sl3coh;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "cannot open " << out << "\n";
        return 1;
    }
    f << text;
    return 0;
}

std::string cohomology(const std::string& group, Int m1, Int m2, std::optional<Int> m3,
                       const std::string& format) {
    if (m1 < 0 || m2 < 0) throw UsageError("m1 and m2 must be non-negative");
    HighestWeight lam;
    if (group == "sl3") {
        if (m3) throw UsageError("--m3 is only valid with --group gl3");
        lam = HighestWeight::sl3(m1, m2);
    } else {
        if (!m3) throw UsageError("--group gl3 requires --m3");
        lam = HighestWeight::gl3(m1, m2, *m3);
    }
    auto r = build_report(lam);
    if (format == "json") return to_json(r).dump(2) + "\n";
    if (format == "md") return render_markdown(r);
    return render_text(r);
}

std::string symbolic_table(const std::string& format) {
    auto t = symbolic_euler_table();
    std::ostringstream o;
    if (format == "csv") {
        o << "row,col,expr\n";
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j) o << i << "," << j << ",\"" << t[i][j].expression() << "\"\n";
        return o.str();
    }
    for (int half = 0; half < 2; ++half) {
        o << "| m1 \\ m2 |";
        for (int j = 6 * half; j < 6 * half + 6; ++j) o << " " << j << " |";
        o << "\n|---|";
        for (int j = 0; j < 6; ++j) o << "---|";
        o << "\n";
        for (int i = 0; i < 12; ++i) {
            o << "| " << i << " |";
            for (int j = 6 * half; j < 6 * half + 6; ++j) o << " " << t[i][j].expression() << " |";
            o << "\n";
        }
        if (half == 0) o << "\n";
    }
    return o.str();
}

std::string numeric_table(Int m1_max, Int m2_max, const std::string& format) {
    if (m1_max < 0 || m2_max < 0) throw UsageError("table bounds must be non-negative");
    auto rows = euler_table(m1_max, m2_max);
    std::ostringstream o;
    if (format == "csv") {
        o << "m1,m2,chi\n";
        for (const auto& e : rows) o << e.m1 << "," << e.m2 << "," << e.chi << "\n";
        return o.str();
    }
    o << "| m1 \\ m2 |";
    for (Int j = 0; j <= m2_max; ++j) o << " " << j << " |";
    o << "\n|---|";
    for (Int j = 0; j <= m2_max; ++j) o << "---|";
    o << "\n";
    for (Int i = 0; i <= m1_max; ++i) {
        o << "| " << i << " |";
        for (Int j = 0; j <= m2_max; ++j) o << " " << rows[i * (m2_max + 1) + j].chi << " |";
        o << "\n";
    }
    return o.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of SL3(Z) and GL3(Z) with highest weight coefficients"};
    app.require_subcommand(1);
    std::string out;
    app.add_option("--out", out, "Write output to this file");

    auto* coh = app.add_subcommand("cohomology", "Boundary, Eisenstein, Euler and ghost report");
    std::string group = "sl3", format = "text";
    Int m1 = 0, m2 = 0, m3_value = 0;
    coh->add_option("--group", group)->check(CLI::IsMember({"sl3", "gl3"}));
    coh->add_option("--m1", m1)->required();
    coh->add_option("--m2", m2)->required();
    auto* m3_opt = coh->add_option("--m3", m3_value);
    coh->add_option("--format", format)->check(CLI::IsMember({"json", "text", "md"}));

    auto* table = app.add_subcommand("euler-table", "Euler characteristic tables");
    bool symbolic = false;
    Int m1_max = 11, m2_max = 11;
    std::string table_format = "csv";
    table->add_flag("--symbolic", symbolic);
    table->add_option("--m1-max", m1_max);
    table->add_option("--m2-max", m2_max);
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "md"}));

    auto* ver = app.add_subcommand("verify", "Run all cross-route checks");
    Int vmax = 60;
    std::uint64_t seed = 0;
    ver->add_option("--max", vmax);
    auto* seed_opt = ver->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (coh->parsed()) {
            std::optional<Int> m3;
            if (m3_opt->count()) m3 = m3_value;
            return emit(cohomology(group, m1, m2, m3, format), out);
        }
        if (table->parsed()) {
            return emit(symbolic ? symbolic_table(table_format) : numeric_table(m1_max, m2_max, table_format), out);
        }
        if (ver->parsed()) {
            if (vmax < 0) throw UsageError("--max must be non-negative");
            VerifyOptions opts;
            opts.max = vmax;
            if (seed_opt->count()) opts.seed = seed;
            auto res = run_verification(opts);
            nlohmann::json j;
            j["status"] = res.ok() ? "pass" : "fail";
            j["checks"] = res.checks_run;
            j["failures"] = nlohmann::json::array();
            for (const auto& f : res.failures) j["failures"].push_back(to_json(f));
            if (!res.ok())
                for (const auto& f : res.failures)
                    std::cerr << "FAIL " << f.check << " at (" << f.m1 << ", " << f.m2 << "): " << f.detail << "\n";
            int rc = emit(j.dump(2) + "\n", out);
            return res.ok() ? rc : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    return 0;
}

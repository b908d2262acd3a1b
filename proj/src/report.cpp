#include "sl3coh/report.hpp"

#include <sstream>
#include <stdexcept>

namespace sl3coh {

using nlohmann::json;

std::string group_name(Group g) { return g == Group::SL3 ? "sl3" : "gl3"; }

namespace {

Group group_from_name(const std::string& s) {
    if (s == "sl3") return Group::SL3;
    if (s == "gl3") return Group::GL3;
    throw std::invalid_argument("unknown group: " + s);
}

bool odd_parity(const HighestWeight& lam) {
    return lam.m3 && ((lam.m1 + 2 * lam.m2 + 3 * *lam.m3) % 2 + 2) % 2 != 0;
}

json summand_to_json(const CohomologySummand& s) {
    json j;
    j["kind"] = kind_name(s.kind);
    j["k"] = s.kind == SummandKind::Cusp ? json(s.k) : json(nullptr);
    j["mult"] = s.multiplicity;
    return j;
}

CohomologySummand summand_from_json(const json& j) {
    CohomologySummand s;
    s.kind = kind_from_name(j.at("kind").get<std::string>());
    s.k = j.at("k").is_null() ? 0 : j.at("k").get<Int>();
    s.multiplicity = j.at("mult").get<Int>();
    return s;
}

json dims_to_json(const GradedProfile& p, int max_degree) {
    json j = json::object();
    for (int q = 0; q <= max_degree; ++q) j[std::to_string(q)] = p.dim(q);
    return j;
}

}  // namespace

json profile_to_json(const GradedProfile& p, int max_degree) {
    json j = json::object();
    auto n = p.normalized();
    for (int q = 0; q <= max_degree; ++q) {
        json list = json::array();
        for (const auto& s : n.at(q)) list.push_back(summand_to_json(s));
        j[std::to_string(q)] = list;
    }
    return j;
}

GradedProfile profile_from_json(const json& j) {
    GradedProfile p;
    for (const auto& [key, list] : j.items())
        for (const auto& s : list) p.add(std::stoi(key), summand_from_json(s));
    return p.normalized();
}

Report build_report(const HighestWeight& lam) {
    if (!lam.is_dominant()) throw std::invalid_argument("weight is not dominant");
    Report r;
    r.weight = lam;
    r.group = lam.group();
    auto nu = HighestWeight::sl3(lam.m1, lam.m2);
    r.case_id = case_classifier(nu);
    r.euler = euler_report(lam);
    r.identities = verify_identities(nu);
    auto total = total_cohomology(lam, r.group);
    r.eisenstein = total.eisenstein;
    r.inner_lower_bound = total.inner_lower_bound;
    r.self_dual = total.self_dual;
    r.inner_known = total.inner_known;
    if (odd_parity(lam)) {
        // -I acts on every coefficient system by -1: boundary, Eisenstein and ghosts vanish
        r.boundary.case_id = r.case_id;
        for (int q = 0; q <= 4; ++q) r.ghost.by_degree[q] = GhostStatus::Zero;
        r.provenance["gl3"] = "odd central character, all cohomology zero";
    } else {
        r.boundary = boundary_profile(nu);
        r.ghost = ghost_report(nu);
        if (lam.m3) r.provenance["gl3"] = "even central character, equal to SL3 at (m1, m2)";
    }
    r.eisenstein.case_id = r.case_id;
    r.provenance["version"] = kVersion;
    r.provenance["boundary"] = "two-column spectral sequence";
    r.provenance["eisenstein"] = "case formula, checked against boundary isotropy";
    r.provenance["euler"] = "closed form, checked against Wall sum";
    return r;
}

json to_json(const Report& r) {
    json j;
    j["group"] = group_name(r.group);
    j["weight"] = {{"m1", r.weight.m1},
                   {"m2", r.weight.m2},
                   {"m3", r.weight.m3 ? json(*r.weight.m3) : json(nullptr)}};
    j["case_id"] = r.case_id;
    j["boundary"] = profile_to_json(r.boundary, 4);
    j["boundary_dims"] = dims_to_json(r.boundary, 4);
    j["eisenstein"] = profile_to_json(r.eisenstein, 3);
    j["eisenstein_dims"] = dims_to_json(r.eisenstein, 3);
    j["inner"] = {{"lower_bound", profile_to_json(r.inner_lower_bound, 3)},
                  {"self_dual", r.self_dual},
                  {"known", r.inner_known}};
    j["euler"] = {{"chi_wall", r.euler.chi_wall},
                  {"chi_closed", r.euler.chi_closed},
                  {"table_cell", {{"row", r.euler.row}, {"col", r.euler.col}, {"expr", r.euler.cell}}}};
    json g = json::object();
    for (const auto& [q, s] : r.ghost.by_degree) g[std::to_string(q)] = ghost_status_name(s);
    j["ghost"] = g;
    j["identities"] = {{"chi_eis_equals_chi_h", r.identities.chi_eis_equals_chi_h},
                       {"half_boundary", r.identities.half_boundary},
                       {"poincare_pair", r.identities.poincare_pair}};
    j["provenance"] = r.provenance;
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.group = group_from_name(j.at("group").get<std::string>());
    const auto& w = j.at("weight");
    r.weight.m1 = w.at("m1").get<Int>();
    r.weight.m2 = w.at("m2").get<Int>();
    if (!w.at("m3").is_null()) r.weight.m3 = w.at("m3").get<Int>();
    r.case_id = j.at("case_id").get<int>();
    r.boundary = profile_from_json(j.at("boundary"));
    r.boundary.case_id = r.case_id;
    r.eisenstein = profile_from_json(j.at("eisenstein"));
    r.eisenstein.case_id = r.case_id;
    const auto& inner = j.at("inner");
    r.inner_lower_bound = profile_from_json(inner.at("lower_bound"));
    r.inner_lower_bound.case_id = r.case_id;
    r.self_dual = inner.at("self_dual").get<bool>();
    r.inner_known = inner.at("known").get<bool>();
    const auto& e = j.at("euler");
    r.euler.weight = r.weight;
    r.euler.chi_wall = e.at("chi_wall").get<Int>();
    r.euler.chi_closed = e.at("chi_closed").get<Int>();
    r.euler.row = e.at("table_cell").at("row").get<int>();
    r.euler.col = e.at("table_cell").at("col").get<int>();
    r.euler.cell = e.at("table_cell").at("expr").get<std::string>();
    for (const auto& [q, s] : j.at("ghost").items())
        r.ghost.by_degree[std::stoi(q)] = ghost_status_from_name(s.get<std::string>());
    const auto& id = j.at("identities");
    r.identities.chi_eis_equals_chi_h = id.at("chi_eis_equals_chi_h").get<bool>();
    r.identities.half_boundary = id.at("half_boundary").get<bool>();
    r.identities.poincare_pair = id.at("poincare_pair").get<bool>();
    r.provenance = j.at("provenance").get<std::map<std::string, std::string>>();
    return r;
}

namespace {

std::string weight_string(const HighestWeight& w) {
    std::string s = "(" + std::to_string(w.m1) + ", " + std::to_string(w.m2);
    if (w.m3) s += ", " + std::to_string(*w.m3);
    return s + ")";
}

std::string degree_line(const GradedProfile& p, int q) {
    auto n = p.normalized();
    const auto& list = n.at(q);
    if (list.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += " + ";
        out += list[i].to_string();
    }
    return out + "  (dim " + std::to_string(n.dim(q)) + ")";
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream o;
    o << group_name(r.group) << " weight " << weight_string(r.weight) << ", case " << r.case_id << "\n";
    o << "boundary:\n";
    for (int q = 0; q <= 4; ++q) o << "  H^" << q << " = " << degree_line(r.boundary, q) << "\n";
    o << "eisenstein:\n";
    for (int q = 0; q <= 3; ++q) o << "  H^" << q << " = " << degree_line(r.eisenstein, q) << "\n";
    o << "inner: " << (r.inner_known ? "zero" : "unknown, dim H^2_! = dim H^3_!") << "\n";
    o << "euler: chi = " << r.euler.chi_closed << " (wall " << r.euler.chi_wall << ", cell ["
      << r.euler.row << "][" << r.euler.col << "] " << r.euler.cell << ")\n";
    o << "ghost:";
    for (const auto& [q, s] : r.ghost.by_degree) o << " " << q << "=" << ghost_status_name(s);
    o << "\n";
    o << "identities: chi_eis=chi_h " << (r.identities.chi_eis_equals_chi_h ? "ok" : "FAIL")
      << ", half_boundary " << (r.identities.half_boundary ? "ok" : "FAIL") << ", poincare_pair "
      << (r.identities.poincare_pair ? "ok" : "FAIL") << "\n";
    return o.str();
}

std::string render_markdown(const Report& r) {
    std::ostringstream o;
    o << "## " << group_name(r.group) << " " << weight_string(r.weight) << " (case " << r.case_id << ")\n\n";
    o << "| q | boundary | Eisenstein | ghost |\n|---|---|---|---|\n";
    for (int q = 0; q <= 4; ++q) {
        auto g = r.ghost.by_degree.count(q) ? ghost_status_name(r.ghost.by_degree.at(q)) : "zero";
        o << "| " << q << " | " << degree_line(r.boundary, q) << " | "
          << (q <= 3 ? degree_line(r.eisenstein, q) : "") << " | " << g << " |\n";
    }
    o << "\nchi = " << r.euler.chi_closed << " (cell `" << r.euler.cell << "`)\n";
    return o.str();
}

}  // namespace sl3coh

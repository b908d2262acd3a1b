#include "sl3coh/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sl3coh {

CohomologySummand CohomologySummand::cusp(Int k, Int mult) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("Cusp(k) needs k even >= 2");
    return {SummandKind::Cusp, k, mult};
}

Int CohomologySummand::dim(CuspConvention conv) const {
    if (kind == SummandKind::Cusp) return multiplicity * dim_cusp_forms(k, conv);
    return multiplicity;
}

std::string kind_name(SummandKind k) {
    switch (k) {
        case SummandKind::TrivialLine: return "Q";
        case SummandKind::Cusp: return "S";
        case SummandKind::GhostCandidateLine: return "ghost_candidate";
    }
    return "?";
}

SummandKind kind_from_name(const std::string& s) {
    if (s == "Q") return SummandKind::TrivialLine;
    if (s == "S") return SummandKind::Cusp;
    if (s == "ghost_candidate") return SummandKind::GhostCandidateLine;
    throw std::invalid_argument("unknown summand kind: " + s);
}

std::string CohomologySummand::to_string() const {
    std::string base = kind == SummandKind::Cusp ? "S_" + std::to_string(k) : kind_name(kind);
    if (multiplicity == 1) return base;
    return std::to_string(multiplicity) + "*" + base;
}

void GradedProfile::add(int q, const CohomologySummand& s) {
    if (s.multiplicity != 0) by_degree[q].push_back(s);
}

namespace {

auto key(const CohomologySummand& s) { return std::make_tuple(static_cast<int>(s.kind), s.k); }

const std::vector<CohomologySummand> kEmpty;

}  // namespace

GradedProfile GradedProfile::normalized() const {
    GradedProfile out;
    out.case_id = case_id;
    for (const auto& [q, list] : by_degree) {
        std::map<std::tuple<int, Int>, CohomologySummand> merged;
        for (const auto& s : list) {
            auto [it, inserted] = merged.try_emplace(key(s), s);
            if (!inserted) it->second.multiplicity += s.multiplicity;
        }
        for (const auto& [k, s] : merged)
            if (s.multiplicity != 0) out.by_degree[q].push_back(s);
    }
    return out;
}

const std::vector<CohomologySummand>& GradedProfile::at(int q) const {
    auto it = by_degree.find(q);
    return it == by_degree.end() ? kEmpty : it->second;
}

Int GradedProfile::dim(int q, CuspConvention conv) const {
    Int d = 0;
    for (const auto& s : at(q)) d += s.dim(conv);
    return d;
}

Int GradedProfile::total_dim(CuspConvention conv) const {
    Int d = 0;
    for (const auto& [q, list] : by_degree) d += dim(q, conv);
    return d;
}

Int GradedProfile::euler(CuspConvention conv) const {
    Int chi = 0;
    for (const auto& [q, list] : by_degree) chi += (q % 2 == 0 ? 1 : -1) * dim(q, conv);
    return chi;
}

bool GradedProfile::is_zero() const {
    for (const auto& [q, list] : by_degree)
        if (!list.empty()) return false;
    return true;
}

int GradedProfile::max_degree() const {
    int m = -1;
    for (const auto& [q, list] : by_degree)
        if (!list.empty()) m = std::max(m, q);
    return m;
}

std::string GradedProfile::to_string() const {
    auto n = normalized();
    std::string out = "{";
    bool first = true;
    for (const auto& [q, list] : n.by_degree) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(q) + ": ";
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out += " + ";
            out += list[i].to_string();
        }
    }
    return out + "}";
}

bool GradedProfile::same_summands(const GradedProfile& o) const {
    return normalized().by_degree == o.normalized().by_degree;
}

bool GradedProfile::contained_in(const GradedProfile& o) const {
    auto a = normalized(), b = o.normalized();
    for (const auto& [q, list] : a.by_degree)
        for (const auto& s : list) {
            const auto& other = b.at(q);
            auto it = std::find_if(other.begin(), other.end(),
                                   [&](const CohomologySummand& t) { return key(t) == key(s); });
            if (it == other.end() || it->multiplicity < s.multiplicity) return false;
        }
    return true;
}

}  // namespace sl3coh

#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "sl3coh/eisenstein.hpp"
#include "sl3coh/euler.hpp"

namespace sl3coh {

inline constexpr const char* kVersion = "1.0.0";

struct Report {
    HighestWeight weight;
    Group group = Group::SL3;
    int case_id = 0;
    GradedProfile boundary;
    GradedProfile eisenstein;
    GradedProfile inner_lower_bound;
    bool self_dual = false;
    bool inner_known = true;
    EulerReport euler;
    GhostReport ghost;
    IdentityFlags identities;
    std::map<std::string, std::string> provenance;
};

Report build_report(const HighestWeight& lam);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const GradedProfile& p, int max_degree);
GradedProfile profile_from_json(const nlohmann::json& j);

std::string render_text(const Report& r);
std::string render_markdown(const Report& r);

std::string group_name(Group g);

}  // namespace sl3coh

#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl3coh/gl2.hpp"

namespace sl3coh {

enum class SummandKind { TrivialLine, Cusp, GhostCandidateLine };

struct CohomologySummand {
    SummandKind kind = SummandKind::TrivialLine;
    Int k = 0;  // weight, Cusp only
    Int multiplicity = 1;

    static CohomologySummand trivial(Int mult = 1) { return {SummandKind::TrivialLine, 0, mult}; }
    static CohomologySummand cusp(Int k, Int mult = 1);

    Int dim(CuspConvention conv = CuspConvention::Actual) const;
    std::string to_string() const;
    bool operator==(const CohomologySummand&) const = default;
};

std::string kind_name(SummandKind k);
SummandKind kind_from_name(const std::string& s);

struct GradedProfile {
    std::map<int, std::vector<CohomologySummand>> by_degree;
    int case_id = 0;

    void add(int q, const CohomologySummand& s);
    // merged, sorted, zero multiplicities dropped
    GradedProfile normalized() const;
    const std::vector<CohomologySummand>& at(int q) const;

    Int dim(int q, CuspConvention conv = CuspConvention::Actual) const;
    Int total_dim(CuspConvention conv = CuspConvention::Actual) const;
    Int euler(CuspConvention conv = CuspConvention::Actual) const;
    bool is_zero() const;
    int max_degree() const;
    std::string to_string() const;

    // same summand multisets in every degree
    bool same_summands(const GradedProfile& o) const;
    bool contained_in(const GradedProfile& o) const;
};

}  // namespace sl3coh

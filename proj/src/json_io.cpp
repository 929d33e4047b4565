#include "epiword/json_io.hpp"

namespace epiword {

using nlohmann::json;

json to_json(const BalanceReport& report) {
    json j;
    switch (report.verdict) {
        case BalanceVerdict::Balanced: j["verdict"] = "balanced"; break;
        case BalanceVerdict::Unbalanced: j["verdict"] = "unbalanced"; break;
        case BalanceVerdict::Inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["checked_lengths"] = {{"min", report.checked_min}, {"max", report.checked_max}};
    if (report.witness) {
        const auto& w = *report.witness;
        j["witness"] = {{"length", w.length},
                        {"letter", w.letter},
                        {"factor_u", w.factor_u.str()},
                        {"position_u", w.position_u},
                        {"factor_v", w.factor_v.str()},
                        {"position_v", w.position_v}};
    }
    return j;
}

json to_json(const FamilyClass& fc) {
    json j;
    switch (fc.kind) {
        case FamilyClass::Kind::FamilyA:
            j["family"] = "A";
            j["n"] = fc.n;
            j["k"] = fc.k;
            break;
        case FamilyClass::Kind::FamilyB:
            j["family"] = "B";
            j["k"] = fc.k;
            j["l"] = fc.l;
            break;
        case FamilyClass::Kind::FamilyC:
            j["family"] = "C";
            j["k"] = fc.k;
            break;
        case FamilyClass::Kind::NotBalanced: j["family"] = "not-balanced"; break;
        case FamilyClass::Kind::Unknown: j["family"] = "unknown"; break;
    }
    j["outside_theorem_scope"] = fc.outside_theorem_scope;
    if (fc.balance) j["balance"] = to_json(*fc.balance);
    return j;
}

json to_json(const VerificationReport& report) {
    json j;
    j["claim"] = report.claim;
    j["instances_checked"] = report.instances_checked;
    j["agreements"] = report.agreements;
    j["unknowns"] = report.unknowns;
    j["passed"] = report.passed();
    j["disagreements"] = json::array();
    for (const auto& d : report.disagreements)
        j["disagreements"].push_back(
            {{"instance", d.instance}, {"expected", d.expected}, {"observed", d.observed}});
    j["notes"] = report.notes;
    return j;
}

json to_json(const ComplexityProfile& profile) {
    json j;
    j["exact"] = profile.exact;
    j["values"] = json::array();
    for (const auto& [n, p] : profile.values)
        j["values"].push_back({{"n", n}, {"p", p}});
    return j;
}

json to_json(const std::map<Letter, Rational>& frequencies) {
    json j = json::array();
    for (const auto& [letter, value] : frequencies)
        j.push_back({{"letter", letter},
                     {"numerator", value.num()},
                     {"denominator", value.den()}});
    return j;
}

} // namespace epiword

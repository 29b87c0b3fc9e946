#include "schemefusion/json_io.hpp"

namespace schemefusion {

using nlohmann::json;

json scheme_report_json(const SchemeReport& report) {
    json axioms = json::array();
    for (const auto& ax : report.axioms) {
        json a{{"axiom", ax.axiom}, {"checked", ax.checked}, {"pass", ax.pass}};
        if (!ax.code.empty()) a["code"] = ax.code;
        if (!ax.detail.empty()) a["detail"] = ax.detail;
        axioms.push_back(std::move(a));
    }
    return json{{"pass", report.pass},
                {"order", report.order},
                {"rank", report.rank},
                {"identityIndex", report.identity_index},
                {"valencies", report.valencies},
                {"symmetric", report.symmetric},
                {"axioms", std::move(axioms)}};
}

json scheme_summary_json(const Scheme& scheme) {
    return json{{"order", scheme.order()},
                {"rank", scheme.rank()},
                {"valencies", scheme.valencies()},
                {"symmetric", scheme.symmetric()}};
}

json character_table_json(const CharacterTable& table) {
    json entries = json::array();
    for (const auto& row : table.entries) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        entries.push_back(std::move(r));
    }
    return json{{"order", table.order},
                {"rank", table.rank()},
                {"radicand", table.radicand()},
                {"entries", std::move(entries)},
                {"multiplicities", table.multiplicities}};
}

json spectrum_json(const Spectrum& sp) {
    return json{{"n", sp.n},          {"k", sp.k.str()}, {"ell", sp.ell.str()},
                {"r", sp.r.str()},    {"s", sp.s.str()}, {"f", sp.f.get_str()},
                {"g", sp.g.get_str()}};
}

json feasibility_json(const FeasibilityReport& rep) {
    json j{{"countingIdentity", rep.counting},
           {"positiveMultiplicities", rep.positive_multiplicities},
           {"integralMultiplicities", rep.integral_multiplicities},
           {"krein1", rep.krein1},
           {"krein2", rep.krein2},
           {"imprimitive", rep.imprimitive},
           {"degenerate", rep.degenerate},
           {"feasible", rep.feasible}};
    if (rep.spectrum) j["spectrum"] = spectrum_json(*rep.spectrum);
    return j;
}

json family_tag_json(const FamilyTag& tag) {
    return json{{"tag", tag.tag}, {"description", tag.description}, {"fusions", tag.fusions}};
}

json partition_json(const ClassPartition& partition) {
    json blocks = json::array();
    for (const auto& block : partition.blocks()) blocks.push_back(block);
    return blocks;
}

}  // namespace schemefusion

#pragma once

#include <json.hpp>

#include "schemefusion/fusion.hpp"
#include "schemefusion/scheme.hpp"
#include "schemefusion/spectra.hpp"
#include "schemefusion/srg.hpp"

namespace schemefusion {

// JSON views used by the CLI and the python bindings.  nlohmann's default
// object keeps keys sorted, which the CLI's byte-reproducibility relies on.
nlohmann::json scheme_report_json(const SchemeReport& report);
nlohmann::json scheme_summary_json(const Scheme& scheme);
nlohmann::json character_table_json(const CharacterTable& table);
nlohmann::json spectrum_json(const Spectrum& sp);
nlohmann::json feasibility_json(const FeasibilityReport& rep);
nlohmann::json family_tag_json(const FamilyTag& tag);
nlohmann::json partition_json(const ClassPartition& partition);

}  // namespace schemefusion

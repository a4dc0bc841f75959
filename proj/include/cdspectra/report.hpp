#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cdspectra/element.hpp"
#include "cdspectra/physics.hpp"
#include "cdspectra/properties.hpp"
#include "cdspectra/spectral.hpp"
#include "cdspectra/structure.hpp"

namespace cdspectra {

inline constexpr const char* kToolVersion = "0.1.0";

/// One named pass/fail line of a command report.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

nlohmann::json to_json(const CdElement& x);
nlohmann::json to_json(const SpectrumMultiset& s);
nlohmann::json to_json(const DegeneracyProfile& p);
nlohmann::json to_json(const ThetaFit& f);
nlohmann::json to_json(const InclusionReport& r);
nlohmann::json to_json(const DimensionReport& r);
nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const FormulaResult& r);
nlohmann::json to_json(const std::vector<Check>& checks);

/// Assembles the fixed report envelope. Field names are frozen in
/// docs/report_schema.md; key order in the emitted document is alphabetical.
nlohmann::json make_report(const std::string& command, nlohmann::json parameters,
                           nlohmann::json results, const std::vector<Check>& checks);

/// Canonical serialization used everywhere a report leaves the process
/// (identical runs must be byte-identical).
std::string render_report(const nlohmann::json& report);

}  // namespace cdspectra

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "diskfn/disk_point.hpp"

namespace diskfn {

nlohmann::json to_json(cplx z);
nlohmann::json to_json(const DiskPoint& z);
nlohmann::json to_json(const BoundaryPoint& zeta);
nlohmann::json angles_json(const std::vector<BoundaryPoint>& pts);

/// One named check of a report.
struct Check {
    std::string id;
    bool pass = false;
    nlohmann::json expected;
    nlohmann::json computed;
    double tolerance = 0.0;
    std::string note;

    nlohmann::json to_json() const;
};

bool all_pass(const std::vector<Check>& checks);
nlohmann::json checks_json(const std::vector<Check>& checks);

/// Wraps a report body with the schema version and, unless suppressed, run
/// metadata (library version, UTC timestamp).
nlohmann::json envelope(const std::string& command, bool pass, nlohmann::json body,
                        bool with_meta);

/// %.17g, the CSV counterpart of the JSON round-trip output.
std::string fmt17(double x);

}  // namespace diskfn

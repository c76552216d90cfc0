#include "diskfn/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace diskfn {

nlohmann::json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json to_json(const DiskPoint& z) {
    return {{"re", z.re()}, {"im", z.im()}, {"one_minus_abs", z.one_minus_abs()}, {"arg", z.arg()}};
}

nlohmann::json to_json(const BoundaryPoint& zeta) { return {{"angle", zeta.angle()}}; }

nlohmann::json angles_json(const std::vector<BoundaryPoint>& pts) {
    nlohmann::json out = nlohmann::json::array();
    for (const BoundaryPoint& p : pts) {
        out.push_back(p.angle());
    }
    return out;
}

nlohmann::json Check::to_json() const {
    nlohmann::json j = {{"id", id}, {"pass", pass}, {"expected", expected}, {"computed", computed},
                        {"tolerance", tolerance}};
    if (!note.empty()) {
        j["note"] = note;
    }
    return j;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const Check& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

nlohmann::json checks_json(const std::vector<Check>& checks) {
    nlohmann::json out = nlohmann::json::array();
    for (const Check& c : checks) {
        out.push_back(c.to_json());
    }
    return out;
}

nlohmann::json envelope(const std::string& command, bool pass, nlohmann::json body, bool with_meta) {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["pass"] = pass;
    if (with_meta) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["meta"] = {{"library", "diskfn"}, {"version", "0.1.0"}, {"timestamp", buf}};
    }
    j["report"] = std::move(body);
    return j;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace diskfn

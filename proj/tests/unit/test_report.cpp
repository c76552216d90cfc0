#include "doctest.h"

#include "diskfn/report.hpp"

using namespace diskfn;

TEST_CASE("report envelope") {
    const nlohmann::json body{{"x", 0.1}};
    const nlohmann::json a = envelope("demo", true, body, false);
    CHECK(a["schema"] == 1);
    CHECK(a["command"] == "demo");
    CHECK_FALSE(a.contains("meta"));
    CHECK(envelope("demo", true, body, true)["meta"]["library"] == "diskfn");
    // floats round-trip exactly
    const double x = 0.1 + 0.2;
    CHECK(nlohmann::json::parse(nlohmann::json{{"v", x}}.dump())["v"].get<double>() == x);
    CHECK(std::stod(fmt17(x)) == x);
}

TEST_CASE("checks") {
    std::vector<Check> checks{{"a", true, 1, 1, 0.0, ""}, {"b", false, 1, 2, 0.0, "off"}};
    CHECK_FALSE(all_pass(checks));
    checks[1].pass = true;
    CHECK(all_pass(checks));
    CHECK(checks_json(checks).size() == 2);
}

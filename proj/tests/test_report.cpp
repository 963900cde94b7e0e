#include "su3/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace su3;

TEST_CASE("report status and serialization") {
    Report r;
    r.subject = "demo";
    r.expect_eq<int>("exact", 3, 3);
    r.expect_close("close", 1.0, 1.0 + 1e-12, 1e-9);
    r.note("info", "x");
    r.unverified("later", "5448", "not reconstructed");
    CHECK(r.passed());
    const auto j = r.to_json();
    CHECK(j.at("exit_status") == "pass");
    CHECK(j.at("checks").size() == 4);
    CHECK(r.to_json().dump() == j.dump());
    r.expect_below("residual", 1e-3, 1e-9);
    CHECK_FALSE(r.passed());
    CHECK(r.to_json().at("exit_status") == "fail");
    std::ostringstream os;
    r.print(os);
    CHECK(os.str().find("FAIL") != std::string::npos);

    Report outer;
    outer.merge(r, "inner ");
    CHECK(outer.checks.front().name == "inner exact");
}

#include "su3/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>

namespace su3 {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "FAIL";
        case Status::unverified: return "unverified";
        case Status::info: return "info";
    }
    return "?";
}

std::string fmt_double(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

void Report::expect_true(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, "true", detail.empty() ? (ok ? "true" : "false") : detail, ok ? Status::pass : Status::fail});
}

void Report::expect_below(const std::string& name, double value, double bound) {
    bool ok = std::isfinite(value) && value < bound;
    checks.push_back({name, "< " + fmt_double(bound, 3), fmt_double(value, 3), ok ? Status::pass : Status::fail});
}

void Report::expect_close(const std::string& name, double expected, double actual, double rel_tol,
                          const std::string& expected_text) {
    double scale = std::max(1.0, std::abs(expected));
    bool ok = std::abs(expected - actual) <= rel_tol * scale;
    std::string e = fmt_double(expected);
    if (!expected_text.empty()) e = expected_text + " = " + e;
    checks.push_back({name, e, fmt_double(actual), ok ? Status::pass : Status::fail});
}

void Report::note(const std::string& name, const std::string& value) {
    checks.push_back({name, "", value, Status::info});
}

void Report::unverified(const std::string& name, const std::string& expected, const std::string& why) {
    checks.push_back({name, expected, why, Status::unverified});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        if (!prefix.empty()) c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

bool Report::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"status", to_string(c.status)}});
    j["exit_status"] = passed() ? "pass" : "fail";
    return j;
}

void Report::print(std::ostream& os) const {
    std::size_t w0 = 5, w1 = 8, w2 = 6;
    for (auto& c : checks) {
        w0 = std::max(w0, c.name.size());
        w1 = std::max(w1, c.expected.size());
        w2 = std::max(w2, c.actual.size());
    }
    w1 = std::min<std::size_t>(w1, 48);
    w2 = std::min<std::size_t>(w2, 48);
    os << subject << "\n";
    os << std::left << std::setw(w0 + 2) << "check" << std::setw(w1 + 2) << "expected" << std::setw(w2 + 2) << "actual"
       << "status\n";
    for (auto& c : checks)
        os << std::left << std::setw(w0 + 2) << c.name << std::setw(w1 + 2) << c.expected << std::setw(w2 + 2) << c.actual
           << to_string(c.status) << "\n";
    os << (passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace su3

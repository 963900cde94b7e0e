#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace su3 {

enum class Status { pass, fail, unverified, info };

std::string to_string(Status s);

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    Status status = Status::pass;
};

struct Report {
    std::string subject;
    std::vector<Check> checks;

    // exact comparison; value rendered with operator<<
    template <class T>
    void expect_eq(const std::string& name, const T& expected, const T& actual);
    void expect_true(const std::string& name, bool ok, const std::string& detail = {});
    void expect_below(const std::string& name, double value, double bound);
    void expect_close(const std::string& name, double expected, double actual, double rel_tol,
                      const std::string& expected_text = {});
    void note(const std::string& name, const std::string& value);
    void unverified(const std::string& name, const std::string& expected, const std::string& why);
    void merge(const Report& other, const std::string& prefix = {});

    bool passed() const;
    nlohmann::ordered_json to_json() const;
    void print(std::ostream& os) const;
};

std::string fmt_double(double x, int digits = 12);

template <class T>
std::string stringify(const T& v);

}  // namespace su3

#include <sstream>

namespace su3 {

template <class T>
std::string stringify(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

template <class T>
void Report::expect_eq(const std::string& name, const T& expected, const T& actual) {
    checks.push_back({name, stringify(expected), stringify(actual), expected == actual ? Status::pass : Status::fail});
}

}  // namespace su3

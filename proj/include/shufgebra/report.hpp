#ifndef SHUFGEBRA_REPORT_HPP
#define SHUFGEBRA_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace shufgebra {

enum class Status { Pass, Fail, Skip };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "PASS";
    case Status::Fail:
        return "FAIL";
    default:
        return "SKIP";
    }
}

/// One checked identity: what was checked, for which parameters, and on
/// failure a witness (usually a nonzero polynomial in canonical text).
struct CheckRecord {
    std::string statement;
    std::string parameters;
    Status status = Status::Pass;
    std::string witness;
    double elapsed_ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::string config;
    std::vector<CheckRecord> records;

    void pass(std::string statement, std::string parameters)
    {
        records.push_back({std::move(statement), std::move(parameters), Status::Pass, {}, 0});
    }
    void fail(std::string statement, std::string parameters, std::string witness)
    {
        records.push_back({std::move(statement), std::move(parameters), Status::Fail, std::move(witness), 0});
    }
    void check(bool ok, std::string statement, std::string parameters, std::string witness)
    {
        if (ok)
            pass(std::move(statement), std::move(parameters));
        else
            fail(std::move(statement), std::move(parameters), std::move(witness));
    }
    void append(const SuiteReport& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

    std::size_t count(Status s) const
    {
        return static_cast<std::size_t>(
            std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
    }
    bool passed() const { return count(Status::Fail) == 0; }

    const CheckRecord* first_failure() const
    {
        for (const auto& r : records)
            if (r.status == Status::Fail)
                return &r;
        return nullptr;
    }
};

} // namespace shufgebra

#endif // SHUFGEBRA_REPORT_HPP

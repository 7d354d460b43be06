#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ulsim {

/// Scenario or input validation failed. Carries one message per offending field.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    explicit ValidationError(const std::string& issue)
        : ValidationError(std::vector<std::string>{issue}) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& i : v) {
            if (!s.empty()) s += "; ";
            s += i;
        }
        return s.empty() ? std::string("validation failed") : s;
    }

    std::vector<std::string> issues_;
};

/// Integration produced a non-finite state; message carries step and time.
class SimulationAbort : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ulsim

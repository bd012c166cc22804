#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eit {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent input parameters.  Carries one message per
// violated invariant so callers can report them all at once.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}
    explicit ConfigError(const std::string& msg)
        : ConfigError(std::vector<std::string>{msg}) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& m : v) {
            if (!s.empty()) s += "; ";
            s += m;
        }
        return s.empty() ? std::string("invalid configuration") : s;
    }
    std::vector<std::string> violations_;
};

// A solver failed: singular system, residual above tolerance, unstable
// integration.
class NumericError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its stated domain (e.g. a resonant-only
// formula with nonzero detuning).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace eit

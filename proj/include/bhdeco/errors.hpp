#pragma once

#include <stdexcept>
#include <string>

namespace bhdeco {

/// Input outside an operation's mathematical domain (non-positive mass,
/// pole of a special function, time past the evaporation lifetime, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Numerical routine failed to reach the requested tolerance.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// Two routes that must agree did not; indicates a defect, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bhdeco

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gallai {

// Input exceeds a configured feasibility guard (dimension caps, node caps).
class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition failed; carries a printable witness of the
// violation (the offending edge, triple, vertex, ...).
class precondition_violation : public std::runtime_error {
public:
    precondition_violation(const std::string& what, std::string witness)
        : std::runtime_error(what + " [" + witness + "]"), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

} // namespace gallai

#pragma once

#include <stdexcept>
#include <string>

namespace toricsyz {

// A row-1 reconstruction came out negative: the selected formula variant is
// inconsistent with the table's support structure. Diagnostic, not fatal to
// callers that enumerate variants.
class negative_betti_error : public std::runtime_error {
public:
    negative_betti_error(long p, std::string value)
        : std::runtime_error("negative Betti number reconstructed at p=" +
                             std::to_string(p) + " (value " + value + ")"),
          p_(p),
          value_(std::move(value)) {}

    long p() const noexcept { return p_; }
    const std::string& value() const noexcept { return value_; }

private:
    long p_;
    std::string value_;
};

// An oracle computation would exceed the configured size bounds.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A reconciliation grid member is out of reach for the oracle.
class oracle_infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// decay_fit needs at least four samples with positive error.
class insufficient_data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace toricsyz

#pragma once

#include <stdexcept>
#include <string>

namespace gridcds {

/// Malformed input: out-of-range coordinates, unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (grid too small, set not a CDS, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact engine refused an instance that exceeds its configured limit.
class LimitExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

/// An exact engine ran past its deadline.
class Timeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gridcds

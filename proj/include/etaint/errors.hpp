#pragma once

#include <stdexcept>
#include <string>

namespace etaint {

// Every failure raised by the library derives from Error so callers can catch
// one type; the subclasses exist for exit-code mapping and tests.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct UnknownCheck : Error { using Error::Error; };
struct UnsupportedParameters : Error { using Error::Error; };

}  // namespace etaint

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semideal {

enum class Errc {
    InstanceMismatch,
    OutOfSupport,
    ZeroDivisorIdeal,
    EmptyIdeal,
    NotMaximal,
    UnknownLaw,
    NotFractional,
    Unsupported,
    UnknownPrime,
    NotAMember,
    InternalError,
    NotPrime,
    DMCapExceeded,
    ResourceLimit,
    NotIntegral,
    InvalidArgument,
    NotInvertible,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure carries one of the named codes above; the CLI maps
/// them onto exit codes and JSON reports.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace semideal

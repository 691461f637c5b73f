#pragma once

#include <stdexcept>
#include <string>

namespace tmkit {

/// Base error for all tmkit failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated an operation's stated precondition.
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

/// An enumeration would exceed its configured size cap.
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

} // namespace tmkit

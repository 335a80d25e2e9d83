#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace omalous {

/// Error raised for domain failures (as opposed to usage errors). The code
/// is a stable identifier such as "NoGoodD0" or "PointOffSurface" that the
/// CLI reports verbatim.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace omalous

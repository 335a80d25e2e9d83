#pragma once

#include <cstdint>

namespace omalous::exact {

/// C(n, k) for k >= 0, with C(n, k) = 0 whenever n < k (in particular for
/// every negative n). Throws DomainError("Overflow") past int64.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace omalous::exact

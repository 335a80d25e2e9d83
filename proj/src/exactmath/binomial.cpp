#include "omalous/exactmath/binomial.hpp"

#include <gmpxx.h>

#include "omalous/error.hpp"

namespace omalous::exact {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) throw DomainError("InvalidArgument", "binomial needs k >= 0");
    if (n < k) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!out.fits_slong_p()) throw DomainError("Overflow", "binomial coefficient exceeds 64 bits");
    return out.get_si();
}

}  // namespace omalous::exact

#include "sykspike/exact.hpp"

namespace sykspike {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(std::int64_t n) {
    BigInt r = 1;
    if (n > 1) mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt odd_double_factorial(std::int64_t n) {
    BigInt r = 1;
    for (std::int64_t i = 1; i < 2 * n; i += 2) r *= static_cast<unsigned long>(i);
    return r;
}

}  // namespace sykspike

#pragma once

// Exact integer/rational helpers on top of GMP's C++ interface.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sykspike {

using BigInt = mpz_class;
using Rational = mpq_class;

/// binom(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

/// (2n-1)!! = 1·3·5···(2n-1); equals 1 for n = 0.
BigInt odd_double_factorial(std::int64_t n);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace sykspike

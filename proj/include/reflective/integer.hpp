#pragma once

#include <gmpxx.h>

#include <string>

namespace reflective {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// (-1)^e for any integer e.
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace reflective

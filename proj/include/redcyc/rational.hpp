#ifndef REDCYC_RATIONAL_HPP
#define REDCYC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace redcyc {

using BigInt = mpz_class;
/// Always canonical: gcd(|num|, den) == 1, den > 0.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
BigInt ipow(const BigInt& base, unsigned long exp);
/// q^e for any integer e.
Rational qpow(unsigned long q, long e);

/// "num/den", or "num" when den == 1.
std::string fraction_string(const Rational& x);
Rational parse_fraction(std::string_view s);

/// Exact decimal rendering with `significant` digits, rounded half away from
/// zero, trailing zeros dropped (the layout of printf's %g).  Computed with
/// integer arithmetic only, so output is identical on every platform.
std::string decimal_string(const Rational& x, int significant = 12);

bool is_integer(const Rational& x);
BigInt floor(const Rational& x);

}  // namespace redcyc

#endif

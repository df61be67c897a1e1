#pragma once

#include <gmpxx.h>

#include <string>

namespace tuttelab {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws DomainError on malformed input.
Rational parse_rational(const std::string& s);

Integer factorial(long n);
// Product n (n-2) (n-4) ... down to 1 or 2; (-1)!! = 0!! = 1.
Integer double_factorial(long n);
// Zero when k < 0 or k > n; n must be nonnegative.
Integer binomial(long n, long k);
Integer catalan(long n);
Integer ipow(const Integer& base, unsigned long e);

}  // namespace tuttelab

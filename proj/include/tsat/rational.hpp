#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tsat {

// Thrown by parsers on malformed input; the message names the offending line
// or token.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when internal cross-checks fail. Reaching this is a bug, not a
// user error; the CLI maps it to exit code 3.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive path would exceed its enumeration guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline mpq_class make_q(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// "3/4", "-2", "7" -> exact rational. Rejects zero denominators and junk.
mpq_class parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when q == 1); inverse of parse_rational.
std::string rational_str(const mpq_class& q);

double to_double(const mpq_class& q);

// Smallest exponent e >= 0 with value <= 2^e; value must be positive.
// (Exact: works on the rational, no rounding.)
long ceil_log2(const mpq_class& value);

// The unique rational with smallest denominator in the open interval
// (lo, hi). Requires lo < hi. Stern-Brocot descent, exact.
mpq_class simplest_in_interval(const mpq_class& lo, const mpq_class& hi);

// Best rational approximation of x with denominator <= max_den
// (continued-fraction convergents/semiconvergents).
mpq_class approx_from_double(double x, unsigned long max_den);

// FNV-1a 64-bit over raw bytes, hex string. Used for manifest content
// fingerprints.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace tsat

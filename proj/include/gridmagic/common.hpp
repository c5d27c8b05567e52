#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridmagic {

// All counts and polynomial arithmetic are exact.
using Int = mpz_class;
using Rat = mpq_class;

// Domain errors: the input is well-formed but outside the operation's
// mathematical domain (non-bipartite graph, empty polytope, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded (state cap, enumeration cap,
// precision ceiling). Carries how far we got when that is meaningful.
class cap_exceeded : public domain_error {
public:
    cap_exceeded(const std::string& msg, std::uint64_t partial = 0)
        : domain_error(msg), partial_count(partial) {}
    std::uint64_t partial_count;
};

// An internal cross-check failed (held-out interpolation point, recurrence
// reproduction, dimension formula). Reaching this means a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

Int binomial(long n, long k);

// gmpxx has no long long constructors; these assume LP64 (checked).
static_assert(sizeof(long) == sizeof(long long));
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Rational p/q in canonical form, "p" when q == 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace gridmagic

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace canonical24 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class FormatError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Seeded generator used throughout; std::mt19937_64 output is fixed by the standard.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Written out by hand because the standard
/// distributions are implementation-defined and samples must be portable.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Uniform double in [0, 1).
double uniform_unit(Rng& rng);

/// Generator for stream `index` of a seeded family. Independent of call order.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; throws FormatError.
Rational parse_rational(const std::string& s);

}  // namespace canonical24

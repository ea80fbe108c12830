#ifndef FACEKIT_RATIONAL_HPP
#define FACEKIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace facekit {

/// Exact rational scalar. Always kept canonical (lowest terms, positive
/// denominator); every operation in the library is exact, there is no
/// rounding in any decision path.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or zero denominator. The result is canonicalized.
Rat parse_rat(std::string_view text);

/// Canonical string form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& value);

inline int sign(const Rat& value) { return value.sign(); }

/// floor(x) as a big integer.
BigInt rat_floor(const Rat& value);

}  // namespace facekit

#endif

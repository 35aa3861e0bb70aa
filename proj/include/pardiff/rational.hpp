#ifndef PARDIFF_RATIONAL_HPP
#define PARDIFF_RATIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pardiff {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when two values from different coefficient fields meet.
struct field_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown on malformed input text (maps, differentials, scalars).
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant fails; maps to CLI exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Exact square root of a nonnegative integer, or nullopt if not a square.
std::optional<Integer> integer_sqrt_exact(const Integer& n);

/// Exact square root in Q, or nullopt if the argument is not a rational square.
std::optional<Rational> rational_sqrt_exact(const Rational& r);

/// Power with integer exponent; e < 0 requires a nonzero base.
Rational rational_pow(const Rational& base, long e);

std::string rational_to_string(const Rational& r);

/// Bit length of the largest of numerator/denominator; crude height measure.
std::size_t rational_bits(const Rational& r);

} // namespace pardiff

#endif

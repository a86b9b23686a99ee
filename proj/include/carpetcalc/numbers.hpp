#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace carpetcalc {

// Expression templates off: values are stored through `auto` freely.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

/// Thrown for caller mistakes: out-of-range parameters, mismatched surfaces.
class InvalidInput : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// Thrown when two independent computations of the same quantity disagree.
/// Seeing one of these means a formula was transcribed wrongly somewhere.
class InvariantViolation : public std::logic_error
{
public:
	using std::logic_error::logic_error;
};

/// The long-exact-sequence constraints admit no solution.
class Contradiction : public InvariantViolation
{
public:
	using InvariantViolation::InvariantViolation;
};

inline void require(bool cond, const std::string &what)
{
	if (!cond)
		throw InvariantViolation(what);
}

/// Narrowing with a range check; dimensions fed to the sequence solver are small.
inline std::int64_t to_int64(const Integer &v)
{
	if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
		throw InvalidInput("value " + v.str() + " does not fit in 64 bits");
	return static_cast<std::int64_t>(v);
}

} // namespace carpetcalc

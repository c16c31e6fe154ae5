#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bosonorder {

// All exact quantities in this library are arbitrary-precision integers or
// rationals. Floating point only appears in the numeric evaluators, at the
// last conversion step.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);

/// C(n, k); zero for k > n.
Int binomial(unsigned n, unsigned k);

/// Falling factorial x(x-1)...(x-k+1), with the empty product equal to 1.
Rat falling_factorial(const Rat& x, unsigned k);
Int falling_factorial(long long x, unsigned k);
double falling_factorial(double x, unsigned k);

double to_double(const Rat& r);
Rat rat_from_double(double x);

/// Canonical "p" or "p/q" rendering used by every exact output path.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

}  // namespace bosonorder

#pragma once

#include <vector>

#include "bosonorder/rational.hpp"
#include "bosonorder/weyl.hpp"

namespace bosonorder {

/// Rational approximant num/den with den(0) = 1 whose Taylor expansion
/// matches the input series through order deg(num) + deg(den).
struct PadeApproximant {
    std::vector<Rat> numerator;    // length m + 1
    std::vector<Rat> denominator;  // length n + 1, constant term 1

    double evaluate_numerator(double lambda) const;
    double evaluate_denominator(double lambda) const;
};

/// Solves the Hankel system for the [m/n] approximant of the series with the
/// given m+n+1 leading coefficients, by exact Gaussian elimination. Throws
/// SingularSystemError on a degenerate Pade-table entry and OutOfRangeError
/// if the coefficient count is wrong.
PadeApproximant pade_approximant(const std::vector<Rat>& series, unsigned m, unsigned n);

/// Binary64 approximant for tables too large for exact solves. `residual` is
/// the largest mismatch between the re-expanded approximant and the input
/// coefficients (scaled by the coefficient magnitudes).
struct PadeApproximantFloat {
    std::vector<double> numerator;
    std::vector<double> denominator;
    double residual = 0.0;
};

PadeApproximantFloat pade_approximant_float(const std::vector<double>& series, unsigned m,
                                            unsigned n);

/// num(lambda)/den(lambda); throws PoleProximityError when |den(lambda)| is
/// below 1e-12 times the term-magnitude scale of the denominator.
double pade_eval(const PadeApproximant& p, double lambda);

/// Builds the EGF coefficients B(k,x)/k! exactly for an excess-0 polynomial,
/// forms the [m/n] approximant and evaluates it at lambda. This is the
/// generalized-summation device for the (typically divergent) EGF series;
/// compare against egf_d0_dobinski where that converges.
double pade_resum_egf(const HomogeneousPoly& poly, double lambda, double x, unsigned m,
                      unsigned n);

}  // namespace bosonorder

#pragma once

#include <complex>
#include <vector>

#include "bosonorder/polynomial.hpp"
#include "bosonorder/weyl.hpp"

namespace bosonorder {

/// Truncated series in lambda whose coefficients are exact polynomials in a
/// single commuting variable (the creation symbol inside normal-ordering
/// colons). slices[m] is the lambda^m coefficient.
class BivariateSeries {
public:
    explicit BivariateSeries(unsigned order) : slices_(order + 1) {}

    unsigned order() const { return static_cast<unsigned>(slices_.size()) - 1; }
    const Polynomial& slice(unsigned m) const { return slices_.at(m); }
    Polynomial& slice(unsigned m) { return slices_.at(m); }

    bool operator==(const BivariateSeries&) const = default;

    BivariateSeries& operator+=(const BivariateSeries& other);

    /// Product truncated at this series' order.
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

private:
    std::vector<Polynomial> slices_;
};

/// Formal-series solution of the characteristic flow dT/dlambda = q(T) with
/// T(0,x) = x, computed slice by slice. This is the substituted creation
/// argument of the normally ordered exponential below.
BivariateSeries flow_series(const Polynomial& q, unsigned order);

/// Formal-series solution of dg/dlambda = v(T(lambda,x)) g with g(0,x) = 1:
/// the multiplicative prefactor of the normally ordered exponential.
BivariateSeries prefactor_series(const Polynomial& q, const Polynomial& v, unsigned order);

/// Lambda-series of the normally ordered exponential
/// :g(lambda,ad) exp([T(lambda,ad) - ad] a):, element [m] = coefficient of
/// lambda^m as an exact NormalForm.
std::vector<NormalForm> exp_linear_normal_form_series(const Polynomial& q, const Polynomial& v,
                                                      unsigned order);

/// Checks exp(lambda [q(ad) a + v(ad)]) against the solved series form: the
/// left side is expanded with Weyl-algebra powers, the right side from
/// flow_series/prefactor_series, and every lambda coefficient must match
/// exactly. This equality is the arbiter for the ODE reconstruction.
bool verify_exp_normal_form(const Polynomial& q, const Polynomial& v, unsigned order);

/// Lambda-series of <z|exp(lambda [q(ad) a + v(ad)])|z> / <z|z>
///  = g(lambda, conj(z)) exp([T(lambda, conj(z)) - conj(z)] z).
std::vector<std::complex<double>> coherent_egf_series(const Polynomial& q, const Polynomial& v,
                                                      std::complex<double> z, unsigned order);

}  // namespace bosonorder

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bosonorder/fock.hpp"
#include "bosonorder/stirling.hpp"
#include "bosonorder/weyl.hpp"

namespace bosonorder {

/// Coherent-state label: the eigenvalue in a|z> = z|z>.
using CoherentLabel = std::complex<double>;

/// Inputs of the truncated exponential generating function
/// sum_n B(n,x) lambda^n / n!.
struct EgfQuery {
    HomogeneousPoly poly;
    double lambda = 0.0;
    double x = 1.0;
    unsigned truncation = 40;
};

/// Closed form e^{x(e^lambda - 1)} of the classical Bell-polynomial EGF.
/// Throws FloatOverflowError if the result leaves binary64 range.
double egf_bell_closed(double lambda, double x);

/// Partial sum of the generalized EGF. Bell values are computed exactly and
/// converted to binary64 only when each term is accumulated. For max_order
/// >= 2 polynomials the full series is divergent for every lambda != 0; the
/// partial sum is then only an asymptotic approximation.
double egf_truncated(const EgfQuery& query);

/// Convergent Dobinski form of the EGF for excess-0 polynomials:
///   e^{-x} sum_l exp(lambda sum_k alpha_k l^(k)) x^l / l!.
/// Requires alpha_N * lambda < 0 (or lambda = 0); otherwise throws
/// DivergenceConditionError.
double egf_d0_dobinski(const HomogeneousPoly& poly, double lambda, double x, double eps,
                       std::size_t max_terms = kDefaultMaxTerms);

/// Truncation of <z|e^{lambda H}|z> / <z|z> = sum_n B(n,|z|^2)
/// (conj(z)^d lambda)^n / n!. Real for excess 0.
Complex coherent_exp_element(const HomogeneousPoly& poly, double lambda, CoherentLabel z,
                             unsigned truncation);

/// Lambda-series of the normally ordered exponential of the number operator,
/// :exp(ad a (e^lambda - 1)):. Element [m] is the exact NormalForm
/// coefficient of lambda^m, i.e. sum_k S(m,k)/m! (ad)^k a^k.
std::vector<NormalForm> exp_number_operator_series(unsigned order);

/// Checks the coherent-state transfer principle <z'|F|z> = <z'|z> G(z'*, z)
/// on a truncated Fock space, where G substitutes ad -> conj(z'), a -> z
/// into the normal form. Returns true when both sides agree to rel_tol.
bool coherent_transfer_check(const NormalForm& nf, CoherentLabel z, CoherentLabel zprime,
                             std::size_t dim = 64, double rel_tol = 1e-8);

}  // namespace bosonorder

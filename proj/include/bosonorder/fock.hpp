#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bosonorder/weyl.hpp"

namespace bosonorder {

using Complex = std::complex<double>;

/// Truncated coherent state e^{-|z|^2/2} sum_{n<dim} z^n/sqrt(n!) |n>.
/// The dropped Poisson tail is negligible for |z| <= 2 at dim 64.
std::vector<Complex> coherent_vector(Complex z, std::size_t dim);

/// <u|v> with conjugation on the left argument.
Complex inner_product(const std::vector<Complex>& u, const std::vector<Complex>& v);

/// Closed-form overlap <z'|z> = exp(-(|z|^2+|z'|^2)/2 + conj(z') z).
Complex coherent_overlap(Complex zprime, Complex z);

/// Applies a normally ordered operator to a truncated Fock vector. Components
/// pushed past the truncation edge are dropped.
std::vector<Complex> apply_normal_form(const NormalForm& nf, const std::vector<Complex>& v);

/// Dense truncated-Fock matrix of a normally ordered operator.
std::vector<std::vector<Complex>> dense_matrix(const NormalForm& nf, std::size_t dim);

/// w = exp(scale * H) v on the truncated space, by Taylor summation with
/// sub-stepping so every step has norm below 1/2. Serves as the independent
/// numeric oracle for exponentials of operators.
std::vector<Complex> expm_apply(const NormalForm& h, Complex scale,
                                const std::vector<Complex>& v);

}  // namespace bosonorder

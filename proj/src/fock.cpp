#include "bosonorder/fock.hpp"

#include <algorithm>
#include <cmath>

namespace bosonorder {

std::vector<Complex> coherent_vector(Complex z, std::size_t dim) {
    std::vector<Complex> v(dim);
    Complex amp = std::exp(-0.5 * std::norm(z));
    for (std::size_t n = 0; n < dim; ++n) {
        v[n] = amp;
        amp *= z / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

Complex inner_product(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex acc = 0.0;
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

Complex coherent_overlap(Complex zprime, Complex z) {
    return std::exp(-0.5 * (std::norm(z) + std::norm(zprime)) + std::conj(zprime) * z);
}

namespace {

void apply_annihilate(std::vector<Complex>& v) {
    if (v.empty()) return;
    for (std::size_t n = 0; n + 1 < v.size(); ++n) {
        v[n] = std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
    }
    v.back() = 0.0;
}

void apply_create(std::vector<Complex>& v) {
    if (v.empty()) return;
    for (std::size_t n = v.size(); n-- > 1;) {
        v[n] = std::sqrt(static_cast<double>(n)) * v[n - 1];
    }
    v[0] = 0.0;
}

}  // namespace

std::vector<Complex> apply_normal_form(const NormalForm& nf, const std::vector<Complex>& v) {
    std::vector<Complex> out(v.size(), 0.0);
    for (const auto& [key, coeff] : nf.terms()) {
        std::vector<Complex> w = v;
        for (unsigned i = 0; i < key.annihilators; ++i) apply_annihilate(w);
        for (unsigned i = 0; i < key.creators; ++i) apply_create(w);
        const double c = to_double(coeff);
        for (std::size_t n = 0; n < out.size(); ++n) out[n] += c * w[n];
    }
    return out;
}

std::vector<std::vector<Complex>> dense_matrix(const NormalForm& nf, std::size_t dim) {
    std::vector<std::vector<Complex>> m(dim, std::vector<Complex>(dim, 0.0));
    std::vector<Complex> basis(dim, 0.0);
    for (std::size_t col = 0; col < dim; ++col) {
        basis.assign(dim, 0.0);
        basis[col] = 1.0;
        const std::vector<Complex> image = apply_normal_form(nf, basis);
        for (std::size_t row = 0; row < dim; ++row) m[row][col] = image[row];
    }
    return m;
}

std::vector<Complex> expm_apply(const NormalForm& h, Complex scale,
                                const std::vector<Complex>& v) {
    const std::size_t dim = v.size();
    const auto m = dense_matrix(h, dim);

    double norm1 = 0.0;  // max column sum
    for (std::size_t col = 0; col < dim; ++col) {
        double s = 0.0;
        for (std::size_t row = 0; row < dim; ++row) s += std::abs(m[row][col]);
        norm1 = std::max(norm1, s);
    }

    const double scaled = norm1 * std::abs(scale);
    const std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(scaled / 0.5)));
    const Complex h_step = scale / static_cast<double>(steps);

    auto matvec = [&](const std::vector<Complex>& x) {
        std::vector<Complex> y(dim, 0.0);
        for (std::size_t row = 0; row < dim; ++row) {
            Complex acc = 0.0;
            for (std::size_t col = 0; col < dim; ++col) acc += m[row][col] * x[col];
            y[row] = acc;
        }
        return y;
    };

    std::vector<Complex> state = v;
    for (std::size_t s = 0; s < steps; ++s) {
        std::vector<Complex> sum = state;
        std::vector<Complex> term = state;
        for (std::size_t k = 1; k <= 64; ++k) {
            term = matvec(term);
            const Complex factor = h_step / static_cast<double>(k);
            double term_norm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                term[i] *= factor;
                sum[i] += term[i];
                term_norm += std::norm(term[i]);
            }
            if (term_norm < 1e-36) break;
        }
        state = std::move(sum);
    }
    return state;
}

}  // namespace bosonorder

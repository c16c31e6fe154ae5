#include "bosonorder/genfun.hpp"

#include <cmath>

#include "bosonorder/errors.hpp"
#include "bosonorder/genstirling.hpp"

namespace bosonorder {

namespace {

// Integer powers of complex values; std::pow(0+0i, 0.0) is NaN, which this
// avoids for the empty monomial.
Complex cpow(Complex base, unsigned exponent) {
    Complex acc = 1.0;
    for (unsigned i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

}  // namespace

double egf_bell_closed(double lambda, double x) {
    const double value = std::exp(x * std::expm1(lambda));
    if (!std::isfinite(value)) {
        throw FloatOverflowError("e^{x(e^lambda-1)} exceeds binary64 range");
    }
    return value;
}

double egf_truncated(const EgfQuery& query) {
    const Rat x = rat_from_double(query.x);
    GenStirlingTable table(query.poly, std::max(query.truncation, 1u));

    double sum = 1.0;  // n = 0 term
    double lambda_pow_over_fact = 1.0;
    for (unsigned n = 1; n <= query.truncation; ++n) {
        lambda_pow_over_fact *= query.lambda / static_cast<double>(n);
        Rat bell = 0;
        for (const auto& [k, s] : table.row(n)) {
            Rat xk = 1;
            for (unsigned i = 0; i < k; ++i) xk *= x;
            bell += s * xk;
        }
        sum += to_double(bell) * lambda_pow_over_fact;
    }
    return sum;
}

double egf_d0_dobinski(const HomogeneousPoly& poly, double lambda, double x, double eps,
                       std::size_t max_terms) {
    if (poly.excess() != 0) {
        throw OutOfRangeError("the convergent Dobinski form needs an excess-0 polynomial");
    }
    if (x <= 0.0) throw OutOfRangeError("egf_d0_dobinski requires x > 0");
    if (eps <= 0.0) throw OutOfRangeError("egf_d0_dobinski requires eps > 0");

    const double leading = to_double(poly.coeffs().rbegin()->second);
    if (lambda != 0.0 && leading * lambda >= 0.0) {
        throw DivergenceConditionError(
            "series converges only for alpha_N * lambda < 0");
    }
    if (lambda == 0.0) return 1.0;

    const std::size_t tail_start =
        std::max<std::size_t>({static_cast<std::size_t>(std::ceil(x)), 10});
    double weight = 1.0;  // x^l / l!
    double sum = 0.0;
    for (std::size_t l = 0; l <= max_terms; ++l) {
        if (l > 0) weight *= x / static_cast<double>(l);
        double exponent = 0.0;
        for (const auto& [k, alpha] : poly.coeffs()) {
            exponent += to_double(alpha) * falling_factorial(static_cast<double>(l), k);
        }
        const double term = std::exp(lambda * exponent) * weight;
        sum += term;
        if (!std::isfinite(sum)) {
            throw NoConvergenceError("Dobinski-form EGF left binary64 range");
        }
        if (l > tail_start && term < eps * std::abs(sum)) {
            return std::exp(-x) * sum;
        }
    }
    throw NoConvergenceError("Dobinski-form EGF did not settle within the term cap");
}

Complex coherent_exp_element(const HomogeneousPoly& poly, double lambda, CoherentLabel z,
                             unsigned truncation) {
    const Rat mod2 = rat_from_double(std::norm(z));
    GenStirlingTable table(poly, std::max(truncation, 1u));

    const Complex base = cpow(std::conj(z), poly.excess()) * lambda;
    Complex sum = 1.0;
    Complex pow_over_fact = 1.0;
    for (unsigned n = 1; n <= truncation; ++n) {
        pow_over_fact *= base / static_cast<double>(n);
        Rat bell = 0;
        for (const auto& [k, s] : table.row(n)) {
            Rat xk = 1;
            for (unsigned i = 0; i < k; ++i) xk *= mod2;
            bell += s * xk;
        }
        sum += to_double(bell) * pow_over_fact;
    }
    return sum;
}

std::vector<NormalForm> exp_number_operator_series(unsigned order) {
    // :exp(ad a (e^lambda - 1)): = sum_k (ad)^k a^k (e^lambda - 1)^k / k!,
    // and (e^lambda - 1)^k / k! = sum_m S(m,k) lambda^m / m!.
    StirlingTable table(order);
    std::vector<NormalForm> series(order + 1);
    series[0] = NormalForm::identity();
    for (unsigned m = 1; m <= order; ++m) {
        const Rat inv_fact = Rat(1) / Rat(factorial(m));
        for (unsigned k = 1; k <= m; ++k) {
            series[m].add({k, k}, Rat(table.value(m, k)) * inv_fact);
        }
    }
    return series;
}

bool coherent_transfer_check(const NormalForm& nf, CoherentLabel z, CoherentLabel zprime,
                             std::size_t dim, double rel_tol) {
    const std::vector<Complex> ket = coherent_vector(z, dim);
    const std::vector<Complex> bra = coherent_vector(zprime, dim);

    const Complex lhs = inner_product(bra, apply_normal_form(nf, ket));

    Complex symbol = 0.0;
    for (const auto& [key, coeff] : nf.terms()) {
        symbol += to_double(coeff) * cpow(std::conj(zprime), key.creators) *
                  cpow(z, key.annihilators);
    }
    const Complex rhs = inner_product(bra, ket) * symbol;

    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) <= rel_tol * scale;
}

}  // namespace bosonorder

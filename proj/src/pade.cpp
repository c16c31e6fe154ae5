#include "bosonorder/pade.hpp"

#include <cmath>
#include <cstdlib>

#include "bosonorder/errors.hpp"
#include "bosonorder/genstirling.hpp"

namespace bosonorder {

namespace {

double eval_poly(const std::vector<Rat>& coeffs, double lambda) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * lambda + to_double(coeffs[i]);
    return acc;
}

}  // namespace

double PadeApproximant::evaluate_numerator(double lambda) const {
    return eval_poly(numerator, lambda);
}

double PadeApproximant::evaluate_denominator(double lambda) const {
    return eval_poly(denominator, lambda);
}

PadeApproximant pade_approximant(const std::vector<Rat>& series, unsigned m, unsigned n) {
    if (series.size() != static_cast<std::size_t>(m) + n + 1) {
        throw OutOfRangeError("pade_approximant needs exactly m+n+1 series coefficients");
    }
    auto c = [&](long long i) -> Rat {
        return (i >= 0 && i < static_cast<long long>(series.size()))
                   ? series[static_cast<std::size_t>(i)]
                   : Rat(0);
    };

    // Denominator coefficients b_1..b_n from
    //   sum_{j=0}^{n} b_j c_{m+i-j} = 0,  i = 1..n,  b_0 = 1.
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1));
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            aug[i - 1][j - 1] = c(static_cast<long long>(m) + i - j);
        }
        aug[i - 1][n] = -c(static_cast<long long>(m) + i);
    }

    // Exact Gauss-Jordan with nonzero pivoting.
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && aug[pivot][col] == 0) ++pivot;
        if (pivot == n) {
            throw SingularSystemError("degenerate Pade-table entry: singular Hankel system");
        }
        std::swap(aug[col], aug[pivot]);
        const Rat inv = Rat(1) / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (unsigned row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            const Rat f = aug[row][col];
            for (unsigned j = col; j <= n; ++j) aug[row][j] -= f * aug[col][j];
        }
    }

    PadeApproximant p;
    p.denominator.assign(n + 1, Rat(0));
    p.denominator[0] = 1;
    for (unsigned j = 1; j <= n; ++j) p.denominator[j] = aug[j - 1][n];

    p.numerator.assign(m + 1, Rat(0));
    for (unsigned i = 0; i <= m; ++i) {
        Rat acc = 0;
        for (unsigned j = 0; j <= std::min(i, n); ++j) acc += p.denominator[j] * c(i - j);
        p.numerator[i] = acc;
    }
    return p;
}

PadeApproximantFloat pade_approximant_float(const std::vector<double>& series, unsigned m,
                                            unsigned n) {
    if (series.size() != static_cast<std::size_t>(m) + n + 1) {
        throw OutOfRangeError("pade_approximant_float needs exactly m+n+1 series coefficients");
    }
    auto c = [&](long long i) -> double {
        return (i >= 0 && i < static_cast<long long>(series.size()))
                   ? series[static_cast<std::size_t>(i)]
                   : 0.0;
    };

    std::vector<std::vector<double>> aug(n, std::vector<double>(n + 1));
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            aug[i - 1][j - 1] = c(static_cast<long long>(m) + i - j);
        }
        aug[i - 1][n] = -c(static_cast<long long>(m) + i);
    }

    // Partial-pivot elimination.
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        for (unsigned row = col + 1; row < n; ++row) {
            if (std::abs(aug[row][col]) > std::abs(aug[pivot][col])) pivot = row;
        }
        if (aug[pivot][col] == 0.0) {
            throw SingularSystemError("numerically singular Hankel system");
        }
        std::swap(aug[col], aug[pivot]);
        const double inv = 1.0 / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (unsigned row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0.0) continue;
            const double f = aug[row][col];
            for (unsigned j = col; j <= n; ++j) aug[row][j] -= f * aug[col][j];
        }
    }

    PadeApproximantFloat p;
    p.denominator.assign(n + 1, 0.0);
    p.denominator[0] = 1.0;
    for (unsigned j = 1; j <= n; ++j) p.denominator[j] = aug[j - 1][n];
    p.numerator.assign(m + 1, 0.0);
    for (unsigned i = 0; i <= m; ++i) {
        double acc = 0.0;
        for (unsigned j = 0; j <= std::min(i, n); ++j) acc += p.denominator[j] * c(i - j);
        p.numerator[i] = acc;
    }

    // Re-expand num/den and compare with the input.
    double scale = 0.0;
    for (double x : series) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) scale = 1.0;
    std::vector<double> taylor(series.size(), 0.0);
    for (std::size_t k = 0; k < taylor.size(); ++k) {
        double acc = k < p.numerator.size() ? p.numerator[k] : 0.0;
        for (std::size_t j = 1; j < p.denominator.size() && j <= k; ++j) {
            acc -= p.denominator[j] * taylor[k - j];
        }
        taylor[k] = acc;
        p.residual = std::max(p.residual, std::abs(taylor[k] - series[k]) / scale);
    }
    return p;
}

double pade_eval(const PadeApproximant& p, double lambda) {
    const double den = p.evaluate_denominator(lambda);
    double scale = 0.0;
    double lambda_pow = 1.0;
    for (const Rat& b : p.denominator) {
        scale += std::abs(to_double(b)) * std::abs(lambda_pow);
        lambda_pow *= lambda;
    }
    if (std::abs(den) < 1e-12 * scale) {
        throw PoleProximityError("evaluation point is too close to a denominator zero");
    }
    return p.evaluate_numerator(lambda) / den;
}

double pade_resum_egf(const HomogeneousPoly& poly, double lambda, double x, unsigned m,
                      unsigned n) {
    if (poly.excess() != 0) {
        throw OutOfRangeError("EGF resummation is defined for excess-0 polynomials");
    }
    const unsigned terms = m + n + 1;
    const Rat xr = rat_from_double(x);
    GenStirlingTable table(poly, std::max(terms, 2u) - 1);

    std::vector<Rat> coeffs(terms);
    coeffs[0] = 1;
    Rat inv_fact = 1;
    for (unsigned k = 1; k < terms; ++k) {
        inv_fact /= k;
        Rat bell = 0;
        for (const auto& [j, s] : table.row(k)) {
            Rat xj = 1;
            for (unsigned i = 0; i < j; ++i) xj *= xr;
            bell += s * xj;
        }
        coeffs[k] = bell * inv_fact;
    }
    return pade_eval(pade_approximant(coeffs, m, n), lambda);
}

}  // namespace bosonorder

#include "bosonorder/stirling.hpp"

#include <cmath>

#include "bosonorder/errors.hpp"
#include "bosonorder/polynomial.hpp"

namespace bosonorder {

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n) {
    rows_.reserve(max_n);
    for (unsigned n = 1; n <= max_n; ++n) {
        std::vector<Int> row(n);
        row[0] = 1;      // S(n,1)
        row[n - 1] = 1;  // S(n,n)
        for (unsigned k = 2; k < n; ++k) {
            row[k - 1] = Int(k) * rows_[n - 2][k - 1] + rows_[n - 2][k - 2];
        }
        rows_.push_back(std::move(row));
    }
}

Int StirlingTable::value(unsigned n, unsigned k) const {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n || n > max_n_) return 0;
    return rows_[n - 1][k - 1];
}

std::map<unsigned, Int> StirlingTable::row(unsigned n) const {
    std::map<unsigned, Int> out;
    for (unsigned k = 1; k <= n; ++k) out.emplace(k, value(n, k));
    return out;
}

Rat BellPolynomial::evaluate(const Rat& x) const {
    if (n == 0) return 1;
    Rat acc = 0;
    for (const auto& [k, s] : coefficients) {
        Rat xk = 1;
        for (unsigned i = 0; i < k; ++i) xk *= x;
        acc += Rat(s) * xk;
    }
    return acc;
}

BellPolynomial bell_polynomial_coefficients(unsigned n) {
    return BellPolynomial{n, StirlingTable(n).row(n)};
}

Int stirling2_recurrence(unsigned n, unsigned k) {
    if (k < 1 || k > n) {
        throw OutOfRangeError("stirling2 requires 1 <= k <= n");
    }
    return StirlingTable(n).value(n, k);
}

Int stirling2_explicit(unsigned n, unsigned k) {
    if (k < 1 || k > n) {
        throw OutOfRangeError("stirling2 requires 1 <= k <= n");
    }
    Int sum = 0;
    for (unsigned j = 1; j <= k; ++j) {
        Int term = binomial(k, j) * pow(Int(j), n);
        if ((k - j) % 2 == 1) term = -term;
        sum += term;
    }
    Int q, r;
    divide_qr(sum, factorial(k), q, r);
    if (r != 0) {
        throw NonIntegerResultError("explicit Stirling sum not divisible by k!");
    }
    return q;
}

Rat bell_polynomial(unsigned n, const Rat& x) {
    if (n == 0) return 1;
    StirlingTable table(n);
    Rat acc = 0;
    Rat xk = 1;
    for (unsigned k = 1; k <= n; ++k) {
        xk *= x;
        acc += Rat(table.value(n, k)) * xk;
    }
    return acc;
}

Int bell_number(unsigned n) {
    if (n == 0) return 1;
    StirlingTable table(n);
    Int acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += table.value(n, k);
    return acc;
}

namespace {

// k^n by repeated squaring in binary64; exact for the small exponents the
// n <= 50 guard admits.
double int_pow(double base, unsigned exp) {
    double acc = 1.0;
    while (exp > 0) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

}  // namespace

double dobinski_eval(unsigned n, double x, double eps, std::size_t max_terms) {
    if (x <= 0.0) throw OutOfRangeError("dobinski_eval requires x > 0");
    if (eps <= 0.0) throw OutOfRangeError("dobinski_eval requires eps > 0");
    if (n > 50) throw OutOfRangeError("dobinski_eval requires n <= 50");

    const std::size_t tail_start =
        std::max<std::size_t>({2 * static_cast<std::size_t>(n),
                               static_cast<std::size_t>(std::ceil(x)), 10});
    double weight = 1.0;  // x^k / k!
    double sum = (n == 0) ? 1.0 : 0.0;  // k = 0 term: 0^n
    for (std::size_t k = 1; k <= max_terms; ++k) {
        weight *= x / static_cast<double>(k);
        const double term = int_pow(static_cast<double>(k), n) * weight;
        sum += term;
        if (!std::isfinite(sum)) {
            throw NoConvergenceError("dobinski series left binary64 range");
        }
        if (k > tail_start && term < eps * std::abs(sum)) {
            return std::exp(-x) * sum;
        }
    }
    throw NoConvergenceError("dobinski series did not settle within the term cap");
}

bool stirling_transform_check(unsigned n) {
    std::vector<Rat> monomial(n + 1, Rat(0));
    monomial[n] = 1;
    const std::vector<Rat> coeffs =
        falling_factorial_coefficients(Polynomial(std::move(monomial)));

    StirlingTable table(n);
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] != Rat(table.value(n, k))) return false;
    }
    if (coeffs.size() != n + 1) return false;  // top coefficient S(n,n)=1 present
    return true;
}

}  // namespace bosonorder

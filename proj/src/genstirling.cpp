#include "bosonorder/genstirling.hpp"

#include <cmath>

#include "bosonorder/errors.hpp"
#include "bosonorder/polynomial.hpp"

namespace bosonorder {

GenStirlingTable::GenStirlingTable(HomogeneousPoly poly, unsigned max_n)
    : poly_(std::move(poly)), max_n_(max_n) {
    const unsigned d = poly_.excess();
    const unsigned lo = poly_.min_order();
    const unsigned hi = poly_.max_order();

    // Row 1 is the polynomial itself.
    for (const auto& [k, alpha] : poly_.coeffs()) entries_[{1, k}] = alpha;

    for (unsigned n = 1; n < max_n_; ++n) {
        for (unsigned k = lo; k <= (n + 1) * hi; ++k) {
            Rat sum = 0;
            for (const auto& [l, alpha] : poly_.coeffs()) {
                for (unsigned p = 0; p <= l; ++p) {
                    const long long arg = static_cast<long long>(n) * d +
                                          static_cast<long long>(k) - l + p;
                    const long long source_k = static_cast<long long>(k) - l + p;
                    if (source_k < lo || source_k > static_cast<long long>(n) * hi) continue;
                    auto it = entries_.find({n, static_cast<unsigned>(source_k)});
                    if (it == entries_.end()) continue;
                    sum += alpha * Rat(binomial(l, p)) * Rat(falling_factorial(arg, p)) *
                           it->second;
                }
            }
            if (sum != 0) entries_[{n + 1, k}] = std::move(sum);
        }
    }
}

Rat GenStirlingTable::value(unsigned n, long long k) const {
    if (k < 0) return 0;
    auto it = entries_.find({n, static_cast<unsigned>(k)});
    return it == entries_.end() ? Rat(0) : it->second;
}

std::map<unsigned, Rat> GenStirlingTable::row(unsigned n) const {
    std::map<unsigned, Rat> out;
    for (const auto& [key, v] : entries_) {
        if (key.first == n) out.emplace(key.second, v);
    }
    return out;
}

Rat gen_stirling_recurrence(const HomogeneousPoly& poly, unsigned n, long long k) {
    if (n < 1) throw OutOfRangeError("generalized Stirling numbers start at n = 1");
    return GenStirlingTable(poly, n).value(n, k);
}

namespace {

// prod_{i=1}^{n} sum_l alpha_l (j+(i-1)d)^(l), the building block shared by
// the explicit formula and the Dobinski relation.
Rat sieve_product(const HomogeneousPoly& poly, unsigned n, long long j) {
    Rat prod = 1;
    for (unsigned i = 1; i <= n; ++i) {
        const long long base = j + static_cast<long long>(i - 1) * poly.excess();
        Rat inner = 0;
        for (const auto& [l, alpha] : poly.coeffs()) {
            inner += alpha * Rat(falling_factorial(base, l));
        }
        prod *= inner;
        if (prod == 0) break;
    }
    return prod;
}

}  // namespace

Rat gen_stirling_explicit(const HomogeneousPoly& poly, unsigned n, unsigned k) {
    if (n < 1) throw OutOfRangeError("generalized Stirling numbers start at n = 1");
    Rat sum = 0;
    for (unsigned j = 0; j <= k; ++j) {
        Rat term = Rat(binomial(k, j)) * sieve_product(poly, n, j);
        if ((k - j) % 2 == 1) term = -term;
        sum += term;
    }
    return sum / Rat(factorial(k));
}

Rat gen_bell_polynomial(const HomogeneousPoly& poly, unsigned n, const Rat& x) {
    if (n == 0) return 1;
    GenStirlingTable table(poly, n);
    Rat acc = 0;
    for (const auto& [k, s] : table.row(n)) {
        Rat xk = 1;
        for (unsigned i = 0; i < k; ++i) xk *= x;
        acc += s * xk;
    }
    return acc;
}

Rat gen_bell_number(const HomogeneousPoly& poly, unsigned n) {
    return gen_bell_polynomial(poly, n, Rat(1));
}

double gen_dobinski_eval(const HomogeneousPoly& poly, unsigned n, double x, double eps,
                         std::size_t max_terms) {
    if (x <= 0.0) throw OutOfRangeError("gen_dobinski_eval requires x > 0");
    if (eps <= 0.0) throw OutOfRangeError("gen_dobinski_eval requires eps > 0");

    const std::size_t tail_start =
        std::max<std::size_t>({2 * static_cast<std::size_t>(n),
                               static_cast<std::size_t>(std::ceil(x)), 10});
    double weight = 1.0;  // x^l / l!
    double sum = 0.0;
    for (std::size_t l = 0; l <= max_terms; ++l) {
        if (l > 0) weight *= x / static_cast<double>(l);
        const double bracket = to_double(sieve_product(poly, n, static_cast<long long>(l)));
        const double term = bracket * weight;
        sum += term;
        if (!std::isfinite(sum)) {
            throw NoConvergenceError("generalized Dobinski series left binary64 range");
        }
        if (l > tail_start && std::abs(term) < eps * std::abs(sum)) {
            return std::exp(-x) * sum;
        }
    }
    throw NoConvergenceError("generalized Dobinski series did not settle within the term cap");
}

bool connection_identity_check(const HomogeneousPoly& poly, unsigned n) {
    // Left side: prod_i sum_k alpha_k (x+(i-1)d)^(k) as an exact polynomial.
    Polynomial lhs = Polynomial::constant(1);
    for (unsigned i = 1; i <= n; ++i) {
        Polynomial inner;
        for (const auto& [k, alpha] : poly.coeffs()) {
            // (x + (i-1)d)^(k) expanded: substitute x -> x + shift in the
            // falling-factorial polynomial.
            const long long shift = static_cast<long long>(i - 1) * poly.excess();
            Polynomial ff = Polynomial::constant(1);
            for (unsigned t = 0; t < k; ++t) {
                ff = ff * Polynomial({Rat(shift - static_cast<long long>(t)), Rat(1)});
            }
            inner += ff * alpha;
        }
        lhs = lhs * inner;
    }

    const std::vector<Rat> coeffs = falling_factorial_coefficients(lhs);
    GenStirlingTable table(poly, n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] != table.value(n, static_cast<long long>(k))) return false;
    }
    // Entries beyond the polynomial's degree must be absent from the table.
    for (const auto& [k, v] : table.row(n)) {
        if (k >= coeffs.size() && v != 0) return false;
    }
    return true;
}

std::map<unsigned, Rat> gen_stirling_from_operator(const HomogeneousPoly& poly, unsigned n) {
    const NormalForm powered = power(poly.normal_form(), n);
    const unsigned prefactor = poly.excess() * n;
    std::map<unsigned, Rat> out;
    for (const auto& [key, coeff] : powered.terms()) {
        if (key.creators != key.annihilators + prefactor) {
            throw MixedExcessError("operator power is not homogeneous of the expected excess");
        }
        out.emplace(key.annihilators, coeff);
    }
    return out;
}

}  // namespace bosonorder

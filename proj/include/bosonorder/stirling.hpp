#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bosonorder/rational.hpp"

namespace bosonorder {

inline constexpr std::size_t kDefaultMaxTerms = 1000000;

/// Triangular table of Stirling numbers of the second kind, built from the
/// recurrence S(n+1,k) = k S(n,k) + S(n,k-1).
class StirlingTable {
public:
    explicit StirlingTable(unsigned max_n);

    unsigned max_n() const { return max_n_; }

    /// S(n,k); zero outside 1 <= k <= n <= max_n (and S(0,0) = 1).
    Int value(unsigned n, unsigned k) const;

    /// Row n as a map k -> S(n,k).
    std::map<unsigned, Int> row(unsigned n) const;

private:
    unsigned max_n_;
    std::vector<std::vector<Int>> rows_;  // rows_[n-1][k-1] = S(n,k)
};

/// Coefficients of the Bell polynomial B(n,x) = sum_k S(n,k) x^k.
struct BellPolynomial {
    unsigned n = 0;
    std::map<unsigned, Int> coefficients;

    Rat evaluate(const Rat& x) const;
};

BellPolynomial bell_polynomial_coefficients(unsigned n);

/// S(n,k) via the recurrence table. Throws OutOfRangeError unless 1 <= k <= n.
Int stirling2_recurrence(unsigned n, unsigned k);

/// S(n,k) via (1/k!) sum_j C(k,j) (-1)^(k-j) j^n. The division by k! must be
/// exact; a remainder throws NonIntegerResultError (an implementation bug,
/// not a user error).
Int stirling2_explicit(unsigned n, unsigned k);

/// B(n,x) = sum_{k=1}^n S(n,k) x^k, with B(0,x) = 1.
Rat bell_polynomial(unsigned n, const Rat& x);

/// B(n) = B(n,1).
Int bell_number(unsigned n);

/// Truncated Dobinski series e^{-x} sum_k k^n x^k / k!. Stops at the first
/// index K > max(2n, ceil(x), 10) with term(K) < eps * |partial sum|; throws
/// NoConvergenceError at the iteration cap. Requires n <= 50 (k^n is formed
/// in binary64 by repeated squaring).
double dobinski_eval(unsigned n, double x, double eps,
                     std::size_t max_terms = kDefaultMaxTerms);

/// Expands x^n in the falling-factorial basis by exact division and checks
/// the coefficients against row n of the Stirling table.
bool stirling_transform_check(unsigned n);

}  // namespace bosonorder

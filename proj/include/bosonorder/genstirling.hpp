#pragma once

#include <cstddef>
#include <map>

#include "bosonorder/rational.hpp"
#include "bosonorder/stirling.hpp"
#include "bosonorder/weyl.hpp"

namespace bosonorder {

/// Exact table of generalized Stirling numbers for one homogeneous boson
/// polynomial: (H)^n = (ad)^(n d) sum_k S(n,k) (ad)^k a^k. Rows are built by
/// the generalized recurrence seeded with S(1,k) = alpha_k. Entries vanish
/// outside min_order <= k <= n * max_order.
class GenStirlingTable {
public:
    GenStirlingTable(HomogeneousPoly poly, unsigned max_n);

    const HomogeneousPoly& poly() const { return poly_; }
    unsigned max_n() const { return max_n_; }

    /// S(n,k); zero outside the legal range (including negative k).
    Rat value(unsigned n, long long k) const;

    /// Nonzero entries of row n.
    std::map<unsigned, Rat> row(unsigned n) const;

private:
    HomogeneousPoly poly_;
    unsigned max_n_;
    std::map<std::pair<unsigned, unsigned>, Rat> entries_;
};

/// One entry via the recurrence (table-backed). Out-of-range k gives 0.
Rat gen_stirling_recurrence(const HomogeneousPoly& poly, unsigned n, long long k);

/// One entry via the explicit alternating-sum formula
///   S(n,k) = (1/k!) sum_j C(k,j) (-1)^(k-j) prod_i sum_l alpha_l
///            (j+(i-1)d)(j+(i-1)d-1)...(j+(i-1)d-l+1),
/// exact throughout.
Rat gen_stirling_explicit(const HomogeneousPoly& poly, unsigned n, unsigned k);

/// B(n,x) = sum_k S(n,k) x^k; 1 for n = 0.
Rat gen_bell_polynomial(const HomogeneousPoly& poly, unsigned n, const Rat& x);

/// B(n) = B(n,1).
Rat gen_bell_number(const HomogeneousPoly& poly, unsigned n);

/// Generalized Dobinski series: e^{-x} sum_l [prod_i sum_k alpha_k
/// (l+(i-1)d)^(k)] x^l / l!, truncated with the same criterion as
/// dobinski_eval. The bracket is a polynomial in l, so the series always
/// converges for fixed n.
double gen_dobinski_eval(const HomogeneousPoly& poly, unsigned n, double x, double eps,
                         std::size_t max_terms = kDefaultMaxTerms);

/// Expands prod_i sum_k alpha_k (x+(i-1)d)^(k) exactly, rewrites it in the
/// falling-factorial basis, and compares the coefficients with table row n.
bool connection_identity_check(const HomogeneousPoly& poly, unsigned n);

/// Independent oracle: builds H as a NormalForm, raises it to the n-th power
/// in the Weyl algebra, strips the (ad)^(n d) prefactor and returns the
/// coefficient map k -> S(n,k).
std::map<unsigned, Rat> gen_stirling_from_operator(const HomogeneousPoly& poly, unsigned n);

}  // namespace bosonorder

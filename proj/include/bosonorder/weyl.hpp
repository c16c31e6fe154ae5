#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bosonorder/rational.hpp"

namespace bosonorder {

/// One boson ladder operator. [a, ad] = 1 is the only relation in play.
enum class Generator : std::uint8_t { kCreate, kAnnihilate };

/// An operator word: letters multiply left to right in written order, so
/// {kCreate, kAnnihilate} is the number operator ad a.
using Word = std::vector<Generator>;

/// #creators - #annihilators; conserved by the commutation relation.
long long excess(const Word& w);

/// Key of a normally ordered monomial (ad)^creators a^annihilators.
struct NormalMonomial {
    unsigned creators = 0;
    unsigned annihilators = 0;
    auto operator<=>(const NormalMonomial&) const = default;
};

/// Exact finite linear combination of normally ordered monomials. Canonical:
/// zero coefficients are never stored, so structural equality is operator
/// equality. The empty map is the zero operator.
class NormalForm {
public:
    NormalForm() = default;

    static NormalForm identity() { return monomial(0, 0, Rat(1)); }

    static NormalForm monomial(unsigned creators, unsigned annihilators, Rat coeff = Rat(1)) {
        NormalForm nf;
        nf.add({creators, annihilators}, std::move(coeff));
        return nf;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<NormalMonomial, Rat>& terms() const { return terms_; }

    Rat coefficient(unsigned creators, unsigned annihilators) const {
        auto it = terms_.find({creators, annihilators});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Merges a term into the map, pruning the key if the sum vanishes.
    void add(NormalMonomial key, Rat coeff);

    bool operator==(const NormalForm&) const = default;

    NormalForm& operator+=(const NormalForm& other);
    NormalForm& operator-=(const NormalForm& other);
    NormalForm& operator*=(const Rat& scalar);

    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
    friend NormalForm operator*(NormalForm a, const Rat& c) { return a *= c; }

    /// Human-readable rendering, terms ordered by (creators, annihilators).
    std::string to_string() const;

private:
    std::map<NormalMonomial, Rat> terms_;
};

/// Ground-truth normal ordering: exhaustively applies a ad -> ad a + 1 to a
/// multiset of weighted words (leftmost redex first) until every word is
/// normally ordered. Exponential-looking, but identical intermediate words
/// are merged, which keeps the reachable set small.
NormalForm normal_order(const Word& w);

/// Product of two normal forms via the contraction identity
///   a^s (ad)^r = sum_i C(s,i) * r(r-1)...(r-i+1) * (ad)^(r-i) a^(s-i).
/// Cross-checked against normal_order in the test suite; never trusted alone.
NormalForm multiply(const NormalForm& lhs, const NormalForm& rhs);

/// n-fold product; power(nf, 0) is the identity.
NormalForm power(const NormalForm& nf, unsigned n);

/// The data (excess d, coefficients alpha_k) of a homogeneous boson
/// polynomial sum_k alpha_k (ad)^(d+k) a^k. Stored coefficients are nonzero
/// and the map is never empty.
class HomogeneousPoly {
public:
    HomogeneousPoly(unsigned excess, std::map<unsigned, Rat> coeffs);

    unsigned excess() const { return excess_; }
    const std::map<unsigned, Rat>& coeffs() const { return coeffs_; }

    unsigned min_order() const { return coeffs_.begin()->first; }
    unsigned max_order() const { return coeffs_.rbegin()->first; }

    Rat coefficient(unsigned k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    NormalForm normal_form() const;

    bool operator==(const HomogeneousPoly&) const = default;

private:
    unsigned excess_;
    std::map<unsigned, Rat> coeffs_;
};

/// Inverse of HomogeneousPoly::normal_form. Throws MixedExcessError when the
/// terms do not share one excess, NegativeExcessError when that excess is
/// negative (conjugate words are out of scope).
HomogeneousPoly extract_homogeneous(const NormalForm& nf);

}  // namespace bosonorder

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bosonorder/errors.hpp"
#include "bosonorder/rational.hpp"

namespace bosonorder {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree order with trailing zeros trimmed. The zero polynomial
/// has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rat> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Polynomial constant(Rat c) { return Polynomial({std::move(c)}); }
    static Polynomial variable() { return Polynomial({Rat(0), Rat(1)}); }

    /// x(x-1)...(x-k+1) expanded into the monomial basis.
    static Polynomial falling_factorial_basis(unsigned k) {
        Polynomial p = constant(1);
        for (unsigned i = 0; i < k; ++i) {
            p = p * Polynomial({Rat(-static_cast<long long>(i)), Rat(1)});
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Rat coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rat(0);
    }

    bool operator==(const Polynomial& other) const = default;

    Polynomial& operator+=(const Polynomial& other) {
        if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rat& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    Rat evaluate(const Rat& x) const {
        Rat acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + to_double(coeffs_[i]);
        return acc;
    }

    std::complex<double> evaluate(std::complex<double> x) const {
        std::complex<double> acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + to_double(coeffs_[i]);
        return acc;
    }

    /// Synthetic division by (x - root), discarding the remainder. Exact
    /// whenever root is a root of the polynomial.
    Polynomial deflate(const Rat& root) const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rat> q(coeffs_.size() - 1, Rat(0));
        Rat carry = coeffs_.back();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = coeffs_[i] + carry * root;
        }
        return Polynomial(std::move(q));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

/// Coefficients c_k with p = sum_k c_k x(x-1)...(x-k+1), computed by nested
/// exact division: c_k = q_k(k), q_{k+1} = (q_k - c_k) / (x - k).
inline std::vector<Rat> falling_factorial_coefficients(const Polynomial& p) {
    std::vector<Rat> out;
    Polynomial q = p;
    for (unsigned k = 0; !q.is_zero(); ++k) {
        Rat c = q.evaluate(Rat(k));
        out.push_back(c);
        q -= Polynomial::constant(c);
        q = q.deflate(Rat(k));
    }
    return out;
}

}  // namespace bosonorder

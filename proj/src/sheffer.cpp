#include "bosonorder/sheffer.hpp"

#include <complex>

#include "bosonorder/rational.hpp"

namespace bosonorder {

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
    for (unsigned m = 0; m <= order() && m <= other.order(); ++m) {
        slices_[m] += other.slices_[m];
    }
    return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(a.order());
    for (unsigned m = 0; m <= a.order(); ++m) {
        for (unsigned i = 0; i <= m && i <= b.order(); ++i) {
            out.slices_[m] += a.slices_[m - i] * b.slices_[i];
        }
    }
    return out;
}

namespace {

// p(s) for a series argument, truncated at s's order (Horner over slices).
BivariateSeries compose_poly(const Polynomial& p, const BivariateSeries& s) {
    BivariateSeries acc(s.order());
    const auto& coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * s;
        acc.slice(0) += Polynomial::constant(coeffs[i]);
    }
    return acc;
}

}  // namespace

BivariateSeries flow_series(const Polynomial& q, unsigned order) {
    BivariateSeries t(order);
    t.slice(0) = Polynomial::variable();
    for (unsigned m = 0; m < order; ++m) {
        // Slice m of q(T) only involves slices 0..m of T, all known here.
        const BivariateSeries rhs = compose_poly(q, t);
        t.slice(m + 1) = rhs.slice(m) * Rat(1, m + 1);
    }
    return t;
}

BivariateSeries prefactor_series(const Polynomial& q, const Polynomial& v, unsigned order) {
    const BivariateSeries t = flow_series(q, order);
    const BivariateSeries vt = compose_poly(v, t);
    BivariateSeries g(order);
    g.slice(0) = Polynomial::constant(1);
    for (unsigned m = 0; m < order; ++m) {
        Polynomial slice;  // lambda^m coefficient of v(T) g
        for (unsigned i = 0; i <= m; ++i) slice += vt.slice(m - i) * g.slice(i);
        g.slice(m + 1) = slice * Rat(1, m + 1);
    }
    return g;
}

std::vector<NormalForm> exp_linear_normal_form_series(const Polynomial& q, const Polynomial& v,
                                                      unsigned order) {
    const BivariateSeries t = flow_series(q, order);
    const BivariateSeries g = prefactor_series(q, v, order);

    // u = T - x starts at lambda^1, so u^j contributes from lambda^j on and
    // the double sum below is finite.
    BivariateSeries u = t;
    u.slice(0) -= Polynomial::variable();

    // Expand :g exp(u a): = sum_j :g u^j a^j / j!: and read each lambda^m
    // slice off as a NormalForm.
    std::vector<NormalForm> series(order + 1);
    BivariateSeries uj(order);
    uj.slice(0) = Polynomial::constant(1);
    Rat inv_fact = 1;
    for (unsigned j = 0; j <= order; ++j) {
        if (j > 0) {
            uj = uj * u;
            inv_fact /= j;
        }
        const BivariateSeries h = g * uj;
        for (unsigned m = j; m <= order; ++m) {
            const Polynomial& p = h.slice(m);
            for (std::size_t r = 0; r < p.coefficients().size(); ++r) {
                series[m].add({static_cast<unsigned>(r), j},
                              p.coefficients()[r] * inv_fact);
            }
        }
    }
    return series;
}

bool verify_exp_normal_form(const Polynomial& q, const Polynomial& v, unsigned order) {
    // Left side: powers of A = q(ad) a + v(ad), already normally ordered.
    NormalForm a_op;
    for (std::size_t r = 0; r < q.coefficients().size(); ++r) {
        a_op.add({static_cast<unsigned>(r), 1}, q.coefficients()[r]);
    }
    for (std::size_t r = 0; r < v.coefficients().size(); ++r) {
        a_op.add({static_cast<unsigned>(r), 0}, v.coefficients()[r]);
    }

    const std::vector<NormalForm> rhs = exp_linear_normal_form_series(q, v, order);

    NormalForm lhs = NormalForm::identity();
    Rat inv_fact = 1;
    for (unsigned m = 0; m <= order; ++m) {
        if (m > 0) {
            lhs = multiply(lhs, a_op);
            inv_fact /= m;
        }
        NormalForm scaled = lhs;
        scaled *= inv_fact;
        if (!(scaled == rhs[m])) return false;
    }
    return true;
}

std::vector<std::complex<double>> coherent_egf_series(const Polynomial& q, const Polynomial& v,
                                                      std::complex<double> z, unsigned order) {
    using Cx = std::complex<double>;
    const BivariateSeries t = flow_series(q, order);
    const BivariateSeries g = prefactor_series(q, v, order);
    const Cx zbar = std::conj(z);

    // w(lambda) = [T(lambda, zbar) - zbar] z, a series with w_0 = 0.
    std::vector<Cx> w(order + 1, Cx(0.0));
    for (unsigned m = 1; m <= order; ++m) w[m] = t.slice(m).evaluate(zbar) * z;

    // exp(w) by accumulating w^j / j!.
    std::vector<Cx> expw(order + 1, Cx(0.0));
    expw[0] = 1.0;
    std::vector<Cx> wj(order + 1, Cx(0.0));
    wj[0] = 1.0;
    double fact = 1.0;
    for (unsigned j = 1; j <= order; ++j) {
        std::vector<Cx> next(order + 1, Cx(0.0));
        for (unsigned m = j; m <= order; ++m) {
            Cx acc = 0.0;
            for (unsigned i = 1; i <= m; ++i) acc += w[i] * wj[m - i];
            next[m] = acc;
        }
        wj = std::move(next);
        fact *= j;
        for (unsigned m = j; m <= order; ++m) expw[m] += wj[m] / fact;
    }

    std::vector<Cx> out(order + 1, Cx(0.0));
    for (unsigned m = 0; m <= order; ++m) {
        Cx acc = 0.0;
        for (unsigned i = 0; i <= m; ++i) acc += g.slice(i).evaluate(zbar) * expw[m - i];
        out[m] = acc;
    }
    return out;
}

}  // namespace bosonorder

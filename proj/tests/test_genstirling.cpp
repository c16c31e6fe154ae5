#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bosonorder/errors.hpp"
#include "bosonorder/genstirling.hpp"
#include "bosonorder/stirling.hpp"
#include "bosonorder/weyl.hpp"

using namespace bosonorder;

namespace {

const Generator AD = Generator::kCreate;
const Generator A = Generator::kAnnihilate;

// The polynomials exercised throughout: number operator, (ad)^2 a^2,
// (ad)^2 a, (ad)^3 a^2, (ad)^3 a, and a two-term combination.
std::vector<HomogeneousPoly> suite() {
    return {
        HomogeneousPoly(0, {{1, Rat(1)}}),
        HomogeneousPoly(0, {{2, Rat(1)}}),
        HomogeneousPoly(1, {{1, Rat(1)}}),
        HomogeneousPoly(1, {{2, Rat(1)}}),
        HomogeneousPoly(2, {{1, Rat(1)}}),
        HomogeneousPoly(0, {{1, Rat(1)}, {2, Rat(1)}}),
    };
}

// Word of the monomial (ad)^(d+k) a^k repeated n times.
Word repeated_monomial_word(unsigned d, unsigned k, unsigned n) {
    Word w;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < d + k; ++j) w.push_back(AD);
        for (unsigned j = 0; j < k; ++j) w.push_back(A);
    }
    return w;
}

}  // namespace

TEST_CASE("recurrence seed and worked values") {
    const HomogeneousPoly squared(0, {{2, Rat(1)}});
    CHECK(gen_stirling_recurrence(squared, 1, 2) == 1);
    CHECK(gen_stirling_recurrence(squared, 2, 2) == 2);
    CHECK(gen_stirling_recurrence(squared, 2, 3) == 4);
    CHECK(gen_stirling_recurrence(squared, 2, 4) == 1);
    CHECK(gen_stirling_recurrence(squared, 2, 1) == 0);
    CHECK(gen_stirling_recurrence(squared, 2, 5) == 0);
    CHECK(gen_stirling_recurrence(squared, 2, -1) == 0);

    const HomogeneousPoly raised(1, {{1, Rat(1)}});
    CHECK(gen_stirling_recurrence(raised, 2, 1) == 2);
    CHECK(gen_stirling_recurrence(raised, 2, 2) == 1);
}

TEST_CASE("number operator reduces to the classical table") {
    const HomogeneousPoly number_op(0, {{1, Rat(1)}});
    GenStirlingTable table(number_op, 12);
    StirlingTable classical(12);
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(table.value(n, k) == Rat(classical.value(n, k)));
        }
        CHECK(table.row(n).size() == n);
    }
}

TEST_CASE("explicit formula reduces to the classical one") {
    const HomogeneousPoly number_op(0, {{1, Rat(1)}});
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(gen_stirling_explicit(number_op, n, k) == Rat(stirling2_explicit(n, k)));
        }
    }
}

TEST_CASE("triple agreement: recurrence, explicit formula, operator oracle") {
    for (const HomogeneousPoly& poly : suite()) {
        GenStirlingTable table(poly, 5);
        for (unsigned n = 1; n <= 5; ++n) {
            const auto oracle = gen_stirling_from_operator(poly, n);
            for (unsigned k = 0; k <= n * poly.max_order() + 1; ++k) {
                const Rat from_recurrence = table.value(n, k);
                const Rat from_explicit = gen_stirling_explicit(poly, n, k);
                auto it = oracle.find(k);
                const Rat from_operator = it == oracle.end() ? Rat(0) : it->second;
                CHECK(from_recurrence == from_explicit);
                CHECK(from_recurrence == from_operator);
            }
        }
    }
}

TEST_CASE("operator oracle against raw word rewriting") {
    // Single-monomial polynomials expand to one word; its n-fold repetition
    // must normal order to the table row (with the excess prefactor).
    struct Case {
        unsigned d, k, n;
    };
    for (const Case c : {Case{0, 2, 4}, Case{1, 1, 4}, Case{2, 1, 4}, Case{1, 2, 3}}) {
        const HomogeneousPoly poly(c.d, {{c.k, Rat(1)}});
        const NormalForm brute = normal_order(repeated_monomial_word(c.d, c.k, c.n));
        const auto row = gen_stirling_from_operator(poly, c.n);
        CHECK(!row.empty());
        for (const auto& [k, v] : row) {
            CHECK(brute.coefficient(c.d * c.n + k, k) == v);
        }
        CHECK(brute.terms().size() == row.size());
    }
}

TEST_CASE("two-term polynomial against expanded words") {
    // (ad a + ad^2 a^2)^n expanded into all 2^n word concatenations.
    const HomogeneousPoly poly(0, {{1, Rat(1)}, {2, Rat(1)}});
    const Word w1 = {AD, A};
    const Word w2 = {AD, AD, A, A};
    for (unsigned n = 1; n <= 4; ++n) {
        NormalForm sum;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Word concat;
            for (unsigned i = 0; i < n; ++i) {
                const Word& piece = (mask >> i) & 1 ? w2 : w1;
                concat.insert(concat.end(), piece.begin(), piece.end());
            }
            sum += normal_order(concat);
        }
        CHECK(sum == power(poly.normal_form(), n));
    }
}

TEST_CASE("row one echoes the coefficients") {
    for (const HomogeneousPoly& poly : suite()) {
        const auto row = gen_stirling_from_operator(poly, 1);
        CHECK(row == poly.coeffs());
    }
}

TEST_CASE("summation range") {
    for (const HomogeneousPoly& poly : suite()) {
        GenStirlingTable table(poly, 5);
        for (unsigned n = 1; n <= 5; ++n) {
            for (const auto& [k, v] : table.row(n)) {
                CHECK(k >= poly.min_order());
                CHECK(k <= n * poly.max_order());
                CHECK(v != 0);
            }
            CHECK(gen_stirling_explicit(poly, n, n * poly.max_order() + 1) == 0);
            if (poly.min_order() > 0) {
                CHECK(gen_stirling_explicit(poly, n, poly.min_order() - 1) == 0);
            }
        }
    }
}

TEST_CASE("integrality for single-word polynomials") {
    for (const HomogeneousPoly& poly : suite()) {
        GenStirlingTable table(poly, 5);
        for (unsigned n = 1; n <= 5; ++n) {
            for (const auto& [k, v] : table.row(n)) {
                CHECK(denominator(v) == 1);
                CHECK(v > 0);
            }
        }
    }
}

TEST_CASE("generalized bell polynomials and numbers") {
    const HomogeneousPoly squared(0, {{2, Rat(1)}});
    CHECK(gen_bell_polynomial(squared, 2, Rat(1)) == 7);
    CHECK(gen_bell_number(squared, 2) == 7);
    CHECK(gen_bell_number(squared, 3) == 87);
    CHECK(gen_bell_polynomial(squared, 0, Rat(5)) == 1);

    const HomogeneousPoly number_op(0, {{1, Rat(1)}});
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(gen_bell_polynomial(number_op, n, Rat(1, 2)) == bell_polynomial(n, Rat(1, 2)));
        CHECK(gen_bell_number(number_op, n) == Rat(bell_number(n)));
    }
}

TEST_CASE("rational coefficients stay exact") {
    const HomogeneousPoly half(0, {{1, Rat(1, 2)}});
    GenStirlingTable table(half, 3);
    CHECK(table.value(2, 1) == Rat(1, 4));
    CHECK(table.value(2, 2) == Rat(1, 4));
    for (unsigned n = 1; n <= 3; ++n) {
        const auto oracle = gen_stirling_from_operator(half, n);
        for (const auto& [k, v] : oracle) {
            CHECK(table.value(n, k) == v);
            CHECK(gen_stirling_explicit(half, n, k) == v);
        }
    }
}

TEST_CASE("constant term is admitted") {
    // H = 1 + ad a: min_order 0 exercises the k = 0 column.
    const HomogeneousPoly shifted(0, {{0, Rat(1)}, {1, Rat(1)}});
    for (unsigned n = 1; n <= 3; ++n) {
        const auto oracle = gen_stirling_from_operator(shifted, n);
        GenStirlingTable table(shifted, n);
        for (unsigned k = 0; k <= n; ++k) {
            auto it = oracle.find(k);
            const Rat expected = it == oracle.end() ? Rat(0) : it->second;
            CHECK(table.value(n, k) == expected);
            CHECK(gen_stirling_explicit(shifted, n, k) == expected);
        }
    }
    CHECK(gen_stirling_from_operator(shifted, 2).at(0) == 1);
}

TEST_CASE("generalized dobinski agrees with exact bell polynomials") {
    const HomogeneousPoly number_op(0, {{1, Rat(1)}});
    CHECK(gen_dobinski_eval(number_op, 3, 1.0, 1e-12) == doctest::Approx(5.0).epsilon(1e-9));
    const HomogeneousPoly squared(0, {{2, Rat(1)}});
    CHECK(gen_dobinski_eval(squared, 2, 1.0, 1e-12) == doctest::Approx(7.0).epsilon(1e-9));
    const HomogeneousPoly raised(1, {{1, Rat(1)}});
    CHECK(gen_dobinski_eval(raised, 2, 1.0, 1e-12) == doctest::Approx(3.0).epsilon(1e-9));

    for (const HomogeneousPoly& poly : suite()) {
        for (unsigned n = 0; n <= 5; ++n) {
            for (double x : {0.5, 1.0, 2.0}) {
                const double exact =
                    to_double(gen_bell_polynomial(poly, n, rat_from_double(x)));
                const double series = gen_dobinski_eval(poly, n, x, 1e-12);
                CHECK(std::abs(series - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
            }
        }
    }
}

TEST_CASE("connection identity") {
    for (const HomogeneousPoly& poly : suite()) {
        for (unsigned n = 1; n <= 6; ++n) CHECK(connection_identity_check(poly, n));
    }
    CHECK(connection_identity_check(HomogeneousPoly(0, {{1, Rat(1, 2)}, {3, Rat(-2)}}), 4));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bosonorder/errors.hpp"
#include "bosonorder/stirling.hpp"
#include "bosonorder/weyl.hpp"

using namespace bosonorder;

TEST_CASE("recurrence values") {
    CHECK(stirling2_recurrence(3, 2) == 3);
    CHECK(stirling2_recurrence(4, 2) == 7);
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(stirling2_recurrence(n, n) == 1);
        CHECK(stirling2_recurrence(n, 1) == 1);
    }
    CHECK_THROWS_AS(stirling2_recurrence(3, 0), OutOfRangeError);
    CHECK_THROWS_AS(stirling2_recurrence(3, 4), OutOfRangeError);
}

TEST_CASE("explicit formula values") {
    CHECK(stirling2_explicit(3, 2) == 3);
    CHECK(stirling2_explicit(5, 1) == 1);
    CHECK(stirling2_explicit(6, 3) == 90);
}

TEST_CASE("recurrence and explicit formula agree up to n = 25") {
    StirlingTable table(25);
    for (unsigned n = 1; n <= 25; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(table.value(n, k) == stirling2_explicit(n, k));
        }
    }
}

TEST_CASE("table rows match powers of the number operator") {
    const NormalForm number_op = NormalForm::monomial(1, 1);
    StirlingTable table(12);
    for (unsigned n = 1; n <= 12; ++n) {
        const NormalForm nf = power(number_op, n);
        CHECK(nf.terms().size() == n);
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(nf.coefficient(k, k) == Rat(table.value(n, k)));
        }
    }
}

TEST_CASE("rewriting oracle reproduces rows directly") {
    StirlingTable table(8);
    Word w;
    for (unsigned n = 1; n <= 8; ++n) {
        w.push_back(Generator::kCreate);
        w.push_back(Generator::kAnnihilate);
        const NormalForm nf = normal_order(w);
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(nf.coefficient(k, k) == Rat(table.value(n, k)));
        }
    }
}

TEST_CASE("bell polynomials") {
    CHECK(bell_polynomial(3, Rat(1)) == 5);
    CHECK(bell_polynomial(2, Rat(2)) == 6);
    CHECK(bell_polynomial(0, Rat(9)) == 1);
    for (unsigned n = 1; n <= 8; ++n) CHECK(bell_polynomial(n, Rat(0)) == 0);
    CHECK(bell_polynomial(5, Rat(2)) == 454);
    CHECK(bell_polynomial(4, Rat(1, 2)) == Rat(1, 2) + Rat(7, 4) + Rat(6, 8) + Rat(1, 16));

    const BellPolynomial bp = bell_polynomial_coefficients(6);
    CHECK(bp.evaluate(Rat(1)) == Rat(bell_number(6)));
}

TEST_CASE("bell numbers and row sums") {
    CHECK(bell_number(0) == 1);
    CHECK(bell_number(4) == 15);
    CHECK(bell_number(6) == 203);
    StirlingTable table(25);
    for (unsigned n = 1; n <= 25; ++n) {
        Int row_sum = 0;
        for (unsigned k = 1; k <= n; ++k) row_sum += table.value(n, k);
        CHECK(row_sum == bell_number(n));
    }
}

TEST_CASE("dobinski series evaluation") {
    CHECK(dobinski_eval(3, 1.0, 1e-12) == doctest::Approx(5.0).epsilon(1e-11));
    for (double x : {0.5, 1.0, 2.0, 7.0}) {
        CHECK(dobinski_eval(0, x, 1e-12) == doctest::Approx(1.0).epsilon(1e-11));
    }
    CHECK(dobinski_eval(5, 2.0, 1e-12) == doctest::Approx(454.0).epsilon(1e-9));
}

TEST_CASE("dobinski matches exact bell polynomials over the (n, x) box") {
    for (unsigned n = 0; n <= 10; ++n) {
        for (double x : {0.5, 1.0, 2.0, 5.0}) {
            const double exact = to_double(bell_polynomial(n, rat_from_double(x)));
            const double series = dobinski_eval(n, x, 1e-12);
            CHECK(std::abs(series - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("dobinski input guards") {
    CHECK_THROWS_AS(dobinski_eval(3, 0.0, 1e-12), OutOfRangeError);
    CHECK_THROWS_AS(dobinski_eval(3, -1.0, 1e-12), OutOfRangeError);
    CHECK_THROWS_AS(dobinski_eval(3, 1.0, 0.0), OutOfRangeError);
    CHECK_THROWS_AS(dobinski_eval(51, 1.0, 1e-12), OutOfRangeError);
    CHECK_THROWS_AS(dobinski_eval(3, 1.0, 1e-12, 5), NoConvergenceError);
}

TEST_CASE("stirling transform") {
    for (unsigned n = 1; n <= 12; ++n) CHECK(stirling_transform_check(n));
}

#include "bosonorder/rational.hpp"

#include <sstream>

namespace bosonorder {

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: r is C(n, i+1) * (product of later factors)
    }
    return r;
}

Rat falling_factorial(const Rat& x, unsigned k) {
    Rat r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (x - i);
    return r;
}

Int falling_factorial(long long x, unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (Int(x) - i);
    return r;
}

double falling_factorial(double x, unsigned k) {
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i) r *= (x - i);
    return r;
}

double to_double(const Rat& r) { return static_cast<double>(r); }

Rat rat_from_double(double x) { return Rat(x); }

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

}  // namespace bosonorder

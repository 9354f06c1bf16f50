#pragma once

#include <cstdint>

#include "dgvertex/errors.hpp"
#include "dgvertex/rational.hpp"

namespace dgv {

/// Cohomological degree. All Koszul signs depend only on the parity of the
/// value: every degree shift in the mode calculus is by a multiple of 2N,
/// so parities are invariant under loop shifts and the [2N] regrading.
struct Degree {
    int value = 0;

    bool odd() const { return value & 1; }

    friend Degree operator+(Degree a, Degree b) { return Degree{a.value + b.value}; }
    friend bool operator==(Degree a, Degree b) { return a.value == b.value; }
    friend bool operator!=(Degree a, Degree b) { return a.value != b.value; }
};

inline int koszul_sign_int(bool a_odd, bool b_odd) {
    return (a_odd && b_odd) ? -1 : 1;
}

/// (-1)^{|a||b|}: -1 exactly when both degrees are odd.
inline Rational koszul_sign(Degree a, Degree b) {
    return Rational(koszul_sign_int(a.odd(), b.odd()));
}

inline Rational factorial(long long k) {
    Rational r(1);
    for (long long j = 2; j <= k; ++j)
        r *= Rational(j);
    return r;
}

/// n(n-1)...(n-k+1) for any integer n, k >= 0.
inline Rational falling_factorial(long long n, long long k) {
    Rational r(1);
    for (long long j = 0; j < k; ++j)
        r *= Rational(n - j);
    return r;
}

/// Generalized binomial coefficient C(n, k) = n(n-1)...(n-k+1)/k!, defined
/// for every integer n and natural k.
inline Rational binomial(long long n, long long k) {
    if (k < 0)
        throw error(errc::bad_argument, "binomial with negative lower index");
    if (n >= 0 && k > n)
        return Rational(0);
    return falling_factorial(n, k) / factorial(k);
}

}  // namespace dgv

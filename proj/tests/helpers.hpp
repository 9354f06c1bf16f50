#pragma once

// Shared fixtures for the test suites: mutated presentations and small
// independent oracles.

#include <map>

#include "dgvertex/catalog.hpp"
#include "dgvertex/presentation.hpp"

namespace testing_fixtures {

using namespace dgv;

/// Virasoro with one product replaced; still structurally valid.
inline Presentation mutated_virasoro(long long which_n, const UElement& value,
                                     int N = 0) {
    PresentationBuilder b;
    b.set_name("mutated-virasoro").set_loop_param(N);
    int w = b.add_generator("omega", Degree{4 * N}, Rational(2));
    int c = b.add_central("c", Degree{0});
    if (which_n != 0)
        b.set_product(w, 0, w, UElement::generator(w, 1));
    if (which_n != 1)
        b.set_product(w, 1, w, UElement::generator(w, 0, Rational(2)));
    if (which_n != 3)
        b.set_product(w, 3, w, UElement::central(c, Rational(1, 2)));
    b.set_product(w, which_n, w, value);
    return b.build();
}

/// omega_(1) omega = 3 omega: homogeneous but the mode algebra fails
/// antisymmetry.
inline Presentation mutated_virasoro_scale1() {
    return mutated_virasoro(1, UElement::generator(0, 0, Rational(3)));
}

/// tau_(2) tau = c instead of (2/3) c: the central cocycle ratio between the
/// even and odd sectors is rigid, so the Jacobi identity fails.
inline Presentation mutated_ns_cocycle() {
    PresentationBuilder b;
    b.set_name("mutated-ns").set_loop_param(1);
    int w = b.add_generator("omega", Degree{4}, Rational(2));
    int t = b.add_generator("tau", Degree{3}, Rational(3, 2));
    int c = b.add_central("c", Degree{0});
    b.set_product(w, 0, w, UElement::generator(w, 1));
    b.set_product(w, 1, w, UElement::generator(w, 0, Rational(2)));
    b.set_product(w, 3, w, UElement::central(c, Rational(1, 2)));
    b.set_product(w, 0, t, UElement::generator(t, 1));
    b.set_product(w, 1, t, UElement::generator(t, 0, Rational(3, 2)));
    b.set_product(t, 0, w, UElement::generator(t, 1, Rational(1, 2)));
    b.set_product(t, 1, w, UElement::generator(t, 0, Rational(3, 2)));
    b.set_product(t, 0, t, UElement::generator(w, 0, Rational(2)));
    b.set_product(t, 2, t, UElement::central(c, Rational(1)));
    return b.build();
}

/// Nonabelian dg Lie algebra with nonzero differential: x even, y odd,
/// [x, y] = y = d(x), <x, x> = 1. Exercises d-Leibniz against real products.
inline Presentation g2_affine() {
    DgLieData g;
    g.bracket_degree = 0;
    g.generators = {DgLieGenerator{"x", Degree{0}}, DgLieGenerator{"y", Degree{1}}};
    g.bracket[{0, 1}] = GVec{{1, Rational(1)}};
    g.bracket[{1, 0}] = GVec{{1, Rational(-1)}};
    g.differential[0] = GVec{{1, Rational(1)}};
    BilinearForm form;
    form.entries[{0, 0}] = Rational(1);
    return build_affine(g, form, 0, "g2");
}

/// Brute-force oracle: partitions of n into parts >= min_part.
inline long long count_partitions(long long n, long long min_part) {
    if (n == 0)
        return 1;
    if (n < min_part)
        return 0;
    long long total = 0;
    for (long long first = min_part; first <= n; ++first)
        total += count_partitions(n - first, first);
    return total;
}

}  // namespace testing_fixtures

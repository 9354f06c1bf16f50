#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "dgvertex/dglie.hpp"
#include "dgvertex/element.hpp"
#include "dgvertex/errors.hpp"
#include "dgvertex/grading.hpp"
#include "dgvertex/presentation.hpp"

namespace dgv {

namespace detail {

inline int max_dpower(const UElement& u) {
    int m = 0;
    for (const auto& [k, c] : u.dterms())
        m = std::max(m, k.second);
    return m;
}

}  // namespace detail

/// a_(m) (D^k b) for a generator pair, m >= 0:
///   sum_{i=0}^{k} (-1)^i k!/(k-i)! C(m,i) D^{k-i}(a_(m-i) b).
inline UElement nth_product_gen_dterm(const Presentation& p, int a, long long m,
                                      int b, int k) {
    UElement r;
    for (int i = 0; i <= k && i <= m; ++i) {
        const UElement* tab = p.product(a, m - i, b);
        if (!tab)
            continue;
        Rational coeff = falling_factorial(k, i) * binomial(m, i);
        if (i & 1)
            coeff = -coeff;
        UElement t = apply_D_power(*tab, k - i);
        t *= coeff;
        r += t;
    }
    return r;
}

/// Bilinear extension of the generator product table to all of U via the two
/// sesquilinearity rules
///   (D^j a)_(n)      = (-1)^j n(n-1)...(n-j+1) a_(n-j),
///   a_(m) (D^k b)    per nth_product_gen_dterm.
/// Centrals annihilate and are annihilated. Total for n >= 0.
inline UElement nth_product(const Presentation& p, const UElement& u, long long n,
                            const UElement& v) {
    if (n < 0)
        throw error(errc::bad_argument, "nth_product needs n >= 0");
    UElement r;
    for (const auto& [ku, cu] : u.dterms()) {
        auto [a, j] = ku;
        if (j > n)
            continue;  // falling factorial vanishes
        Rational left = cu * falling_factorial(n, j);
        if (j & 1)
            left = -left;
        if (left.is_zero())
            continue;
        for (const auto& [kv, cv] : v.dterms()) {
            auto [b, k] = kv;
            UElement t = nth_product_gen_dterm(p, a, n - j, b, k);
            t *= left * cv;
            r += t;
        }
    }
    return r;
}

/// Leibniz rule for d_U across the n-th product; defined here for reuse in
/// property tests: d(u_(n)v) - d(u)_(n)v - (-1)^{|u|} u_(n)d(v).
inline UElement leibniz_defect(const Presentation& p, int u, long long n, int v) {
    UElement lhs = p.apply_differential(
        p.product(u, n, v) ? *p.product(u, n, v) : UElement());
    UElement rhs = nth_product(p, p.apply_differential(UElement::generator(u)), n,
                               UElement::generator(v));
    UElement mixed = nth_product(p, UElement::generator(u), n,
                                 p.apply_differential(UElement::generator(v)));
    if (p.gen_odd(u))
        mixed *= Rational(-1);
    return lhs - rhs - mixed;
}

/// Half skew-symmetry defects for a generator pair: for each n >= 0 up to the
/// truncation bound,
///   u_(n)v - (-1)^{|u||v|} sum_{i>=0} ((-1)^{n+1+i}/i!) D^i (v_(n+i)u).
/// Empty result iff half skew-symmetry holds on (u, v).
inline std::map<long long, UElement> half_skew_defect(const Presentation& p, int u,
                                                      int v) {
    std::map<long long, UElement> defects;
    long long bound =
        std::max(p.product_support_max(u, v), p.product_support_max(v, u));
    int sgn_uv = koszul_sign_int(p.gen_odd(u), p.gen_odd(v));
    for (long long n = 0; n <= bound; ++n) {
        UElement defect;
        if (const UElement* t = p.product(u, n, v))
            defect = *t;
        for (long long i = 0; n + i <= bound; ++i) {
            const UElement* t = p.product(v, n + i, u);
            if (!t)
                continue;
            Rational coeff = Rational(sgn_uv) / factorial(i);
            if ((n + 1 + i) & 1)
                coeff = -coeff;
            UElement corr = apply_D_power(*t, static_cast<int>(i));
            corr *= coeff;
            defect -= corr;
        }
        if (!defect.is_zero())
            defects.emplace(n, std::move(defect));
    }
    return defects;
}

/// Representative of u_(0)v in U/DU: all D-power >= 1 terms dropped, so the
/// coset normal form lives in span(generators) + centrals.
inline UElement zero_mode_bracket(const Presentation& p, const UElement& u,
                                  const UElement& v) {
    UElement w = nth_product(p, u, 0, v);
    UElement r;
    for (const auto& [k, c] : w.dterms())
        if (k.second == 0)
            r.add_dterm(k.first, 0, c);
    for (const auto& [k, c] : w.cterms())
        r.add_cterm(k, c);
    return r;
}

/// Lie bracket carried by U itself under the identification with the n < 0
/// modes: sum_{i>=0} ((-1)^i/(i+1)!) D^{i+1}(u_(i)v).
inline UElement derived_lie_bracket(const Presentation& p, const UElement& u,
                                    const UElement& v) {
    long long bound = p.global_support_max() + detail::max_dpower(u) +
                      detail::max_dpower(v);
    UElement r;
    for (long long i = 0; i <= bound; ++i) {
        UElement t = nth_product(p, u, i, v);
        if (t.is_zero())
            continue;
        Rational coeff = Rational(1) / factorial(i + 1);
        if (i & 1)
            coeff = -coeff;
        t = apply_D_power(t, static_cast<int>(i) + 1);
        t *= coeff;
        r += t;
    }
    return r;
}

/// The presentation of the vertex Lie algebra attached to an even dg Lie
/// algebra: a_(0)b = [a,b], all higher products zero, differential from g.
/// Generators must have even degree.
inline Presentation build_vla_from_even_dglie(const DgLieData& g, int N,
                                              const std::string& name = "vla") {
    g.validate();
    if (g.bracket_degree != -2 * N)
        throw error(errc::bad_argument, "bracket degree must be -2N");
    for (const auto& gen : g.generators)
        if (gen.degree.odd())
            throw error(errc::odd_generator,
                        "generator '" + gen.id + "' has odd degree");
    PresentationBuilder b;
    b.set_name(name).set_loop_param(N);
    for (const auto& gen : g.generators)
        b.add_generator(gen.id, gen.degree, Rational(1));
    const int n = static_cast<int>(g.generators.size());
    for (int i = 0; i < n; ++i) {
        GVec d = g.differential_of(i);
        if (!d.empty()) {
            UElement e;
            for (const auto& [gidx, c] : d)
                e.add_dterm(gidx, 0, c);
            b.set_differential(i, e);
        }
        for (int j = 0; j < n; ++j) {
            GVec br = g.bracket_of(i, j);
            if (br.empty())
                continue;
            UElement e;
            for (const auto& [gidx, c] : br)
                e.add_dterm(gidx, 0, c);
            b.set_product(i, 0, j, e);
        }
    }
    return b.build();
}

}  // namespace dgv

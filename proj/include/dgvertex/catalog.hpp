#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgvertex/dglie.hpp"
#include "dgvertex/envelope.hpp"
#include "dgvertex/errors.hpp"
#include "dgvertex/loop.hpp"
#include "dgvertex/presentation.hpp"
#include "dgvertex/report.hpp"
#include "dgvertex/vla.hpp"

namespace dgv {

/// Virasoro vertex Lie algebra: one generator omega of degree 4N and weight
/// 2, one central c, zero differential.
inline Presentation build_virasoro(int N) {
    PresentationBuilder b;
    b.set_name("virasoro").set_loop_param(N);
    int w = b.add_generator("omega", Degree{4 * N}, Rational(2));
    int c = b.add_central("c", Degree{0});
    b.set_product(w, 0, w, UElement::generator(w, 1));
    b.set_product(w, 1, w, UElement::generator(w, 0, Rational(2)));
    b.set_product(w, 3, w, UElement::central(c, Rational(1, 2)));
    return b.build();
}

/// Neveu-Schwarz vertex Lie algebra: omega (degree 4N, weight 2) and tau
/// (degree 3N, weight 3/2) over a central c. The products only close the
/// axioms for odd N, where tau is an odd generator.
inline Presentation build_neveu_schwarz(int N) {
    PresentationBuilder b;
    b.set_name("neveu-schwarz").set_loop_param(N);
    int w = b.add_generator("omega", Degree{4 * N}, Rational(2));
    int t = b.add_generator("tau", Degree{3 * N}, Rational(3, 2));
    int c = b.add_central("c", Degree{0});
    b.set_product(w, 0, w, UElement::generator(w, 1));
    b.set_product(w, 1, w, UElement::generator(w, 0, Rational(2)));
    b.set_product(w, 3, w, UElement::central(c, Rational(1, 2)));
    b.set_product(w, 0, t, UElement::generator(t, 1));
    b.set_product(w, 1, t, UElement::generator(t, 0, Rational(3, 2)));
    b.set_product(t, 0, w, UElement::generator(t, 1, Rational(1, 2)));
    b.set_product(t, 1, w, UElement::generator(t, 0, Rational(3, 2)));
    b.set_product(t, 0, t, UElement::generator(w, 0, Rational(2)));
    b.set_product(t, 2, t, UElement::central(c, Rational(2, 3)));
    return b.build();
}

/// Affine vertex Lie algebra of a dg Lie algebra with invariant form:
/// a_(0)b = [a,b], a_(1)b = <a,b>K, nothing higher; weights are all 1.
inline Presentation build_affine(const DgLieData& g, const BilinearForm& form, int N,
                                 const std::string& name = "affine") {
    g.validate();
    if (g.bracket_degree != -2 * N)
        throw error(errc::bad_argument, "bracket degree must be -2N");
    check_form(g, form);
    PresentationBuilder b;
    b.set_name(name).set_loop_param(N);
    for (const auto& gen : g.generators)
        b.add_generator(gen.id, gen.degree, Rational(1));
    int K = b.add_central("K", Degree{0});
    const int n = static_cast<int>(g.generators.size());
    for (int i = 0; i < n; ++i) {
        GVec d = g.differential_of(i);
        if (!d.empty()) {
            UElement e;
            for (const auto& [gi, c] : d)
                e.add_dterm(gi, 0, c);
            b.set_differential(i, e);
        }
        for (int j = 0; j < n; ++j) {
            GVec br = g.bracket_of(i, j);
            if (!br.empty()) {
                UElement e;
                for (const auto& [gi, c] : br)
                    e.add_dterm(gi, 0, c);
                b.set_product(i, 0, j, e);
            }
            Rational f = form.value(i, j);
            if (!f.is_zero())
                b.set_product(i, 1, j, UElement::central(K, f));
        }
    }
    b.mark_form_present();
    for (const auto& [key, value] : form.entries)
        b.set_form_entry(key.first, key.second, value);
    return b.build();
}

inline DgLieData dglie_sl2() {
    DgLieData g;
    g.bracket_degree = 0;
    g.generators = {DgLieGenerator{"e", Degree{0}}, DgLieGenerator{"f", Degree{0}},
                    DgLieGenerator{"h", Degree{0}}};
    const int e = 0, f = 1, h = 2;
    auto set = [&](int a, int b, std::initializer_list<std::pair<int, long long>> v) {
        GVec r;
        for (auto [g2, c] : v)
            gvec_add(r, g2, Rational(c));
        g.bracket[{a, b}] = r;
    };
    set(e, f, {{h, 1}});
    set(f, e, {{h, -1}});
    set(h, e, {{e, 2}});
    set(e, h, {{e, -2}});
    set(h, f, {{f, -2}});
    set(f, h, {{f, 2}});
    return g;
}

/// Trace form of the defining representation: <e,f> = 1, <h,h> = 2. The
/// highest root has squared length 2, so h_vee comes out as 2.
inline BilinearForm sl2_trace_form() {
    BilinearForm form;
    form.entries[{0, 1}] = Rational(1);
    form.entries[{1, 0}] = Rational(1);
    form.entries[{2, 2}] = Rational(2);
    return form;
}

inline DgLieData dglie_abelian_rank1() {
    DgLieData g;
    g.bracket_degree = 0;
    g.generators = {DgLieGenerator{"a", Degree{0}}};
    return g;
}

inline BilinearForm unit_form_rank1() {
    BilinearForm form;
    form.entries[{0, 0}] = Rational(1);
    return form;
}

/// Two-generator abelian dg Lie algebra with d(a) = b; its affine envelope
/// is acyclic in positive weights.
inline DgLieData dglie_acyclic_pair() {
    DgLieData g;
    g.bracket_degree = 0;
    g.generators = {DgLieGenerator{"a", Degree{0}}, DgLieGenerator{"b", Degree{1}}};
    g.differential[0] = GVec{{1, Rational(1)}};
    return g;
}

inline Presentation build_heisenberg(int N = 0) {
    return build_affine(dglie_abelian_rank1(), unit_form_rank1(), N, "heisenberg");
}

inline Presentation build_affine_sl2(int N = 0) {
    return build_affine(dglie_sl2(), sl2_trace_form(), N, "affine-sl2");
}

inline Presentation build_acyclic_affine(int N = 0) {
    return build_affine(dglie_acyclic_pair(), BilinearForm{}, N, "acyclic");
}

/// Super-dimension: even-degree dimension total minus odd-degree total.
inline long long sdim(const DgLieData& g) {
    long long s = 0;
    for (const auto& gen : g.generators)
        s += gen.degree.odd() ? -1 : 1;
    return s;
}

struct CasimirResult {
    std::vector<GVec> dual_basis;  // b^(i) with <b^(i), a^(j)> = delta_ij
    Rational two_h_vee;            // scalar by which Omega acts on g
};

/// Dual bases for a nondegenerate form and the scalar by which the Casimir
/// Omega = sum a^(i) b^(i) acts on the adjoint representation.
inline CasimirResult casimir_h_dual(const DgLieData& g, const BilinearForm& form) {
    const int n = static_cast<int>(g.generators.size());
    if (n == 0)
        throw error(errc::degenerate_form, "empty algebra has no nondegenerate form");

    // invert the Gram matrix G_ij = <a_i, a_j>
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = form.value(i, j);
        m[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw error(errc::degenerate_form, "bilinear form is degenerate");
        std::swap(m[col], m[pivot]);
        Rational inv = Rational(1) / m[col][col];
        for (int c2 = 0; c2 < 2 * n; ++c2)
            m[col][c2] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero())
                continue;
            Rational f = m[r][col];
            for (int c2 = 0; c2 < 2 * n; ++c2)
                m[r][c2] -= f * m[col][c2];
        }
    }

    CasimirResult result;
    result.dual_basis.resize(n);
    // b^(i) = sum_j C_ij a_j with C G = I
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gvec_add(result.dual_basis[i], j, m[i][n + j]);

    // adjoint action of Omega: x -> sum_i [a_i, [b_i, x]]
    std::optional<Rational> scalar;
    for (int x = 0; x < n; ++x) {
        GVec img;
        for (int i = 0; i < n; ++i) {
            GVec inner = g.bracket_of(result.dual_basis[i], GVec{{x, Rational(1)}});
            for (const auto& [gi, c] : g.bracket_of(GVec{{i, Rational(1)}}, inner))
                gvec_add(img, gi, c);
        }
        for (int y = 0; y < n; ++y) {
            Rational entry(0);
            if (auto it = img.find(y); it != img.end())
                entry = it->second;
            if (y == x) {
                if (!scalar)
                    scalar = entry;
                else if (*scalar != entry)
                    throw error(errc::casimir_not_scalar,
                                "Casimir does not act as a scalar on the adjoint "
                                "representation");
            } else if (!entry.is_zero()) {
                throw error(errc::casimir_not_scalar,
                            "Casimir does not act as a scalar on the adjoint "
                            "representation");
            }
        }
    }
    result.two_h_vee = *scalar;
    return result;
}

namespace detail {

/// Recovers the dg Lie algebra data from an affine-shaped presentation:
/// a_(0)b in span(generators), a_(1)b a multiple of the central, nothing
/// higher, differential into span(generators).
inline DgLieData extract_dglie(const Presentation& p) {
    DgLieData g;
    g.bracket_degree = -2 * p.loop_param();
    const int n = static_cast<int>(p.num_generators());
    for (int i = 0; i < n; ++i)
        g.generators.push_back(
            DgLieGenerator{p.generator(i).id, p.generator(i).degree});
    auto as_gvec = [&](const UElement& u, const std::string& where) {
        GVec r;
        for (const auto& [k, c] : u.dterms()) {
            if (k.second != 0)
                throw error(errc::bad_argument,
                            where + " has a D-power term; not an affine presentation");
            gvec_add(r, k.first, c);
        }
        if (!u.cterms().empty())
            throw error(errc::bad_argument,
                        where + " has a central term; not an affine presentation");
        return r;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (p.product_support_max(i, j) > 1)
                throw error(errc::bad_argument,
                            "products above n = 1; not an affine presentation");
            if (const UElement* t = p.product(i, 0, j))
                g.bracket[{i, j}] =
                    as_gvec(*t, "product (" + p.generator(i).id + ", 0, " +
                                    p.generator(j).id + ")");
        }
        const UElement& d = p.differential_of(i);
        if (!d.is_zero())
            g.differential[i] =
                as_gvec(d, "differential of '" + p.generator(i).id + "'");
    }
    return g;
}

/// Reads the form off an affine presentation and cross-checks it against the
/// n = 1 products.
inline BilinearForm extract_form(const Presentation& p) {
    if (!p.form())
        throw error(errc::degenerate_form,
                    "presentation carries no bilinear form");
    if (p.num_centrals() != 1)
        throw error(errc::bad_argument,
                    "affine presentation must have exactly one central");
    BilinearForm form;
    form.entries = *p.form();
    const int n = static_cast<int>(p.num_generators());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational from_products(0);
            if (const UElement* t = p.product(i, 1, j)) {
                if (!t->dterms().empty())
                    throw error(errc::bad_argument,
                                "n = 1 product is not central; not an affine "
                                "presentation");
                for (const auto& [k, c] : t->cterms())
                    from_products = c;
            }
            if (form.value(i, j) != from_products)
                throw error(errc::form_invariant_violation,
                            "form field disagrees with the n = 1 products on (" +
                                p.generator(i).id + ", " + p.generator(j).id + ")");
        }
    return form;
}

}  // namespace detail

struct SugawaraResult {
    VVector omega;
    Rational central_charge;
    Rational h_vee;
};

/// Sugawara conformal vector of an affine envelope at noncritical level:
/// omega = (1/(2(k+h_vee))) sum_i a^(i)_{-1} b^(i)_{-1} |0>, with central
/// charge k sdim(g) / (k + h_vee).
inline SugawaraResult sugawara(const EnvelopeContext& ctx, const Rational& k) {
    const Presentation& p = ctx.presentation();
    DgLieData g = detail::extract_dglie(p);
    BilinearForm form = detail::extract_form(p);
    if (ctx.level(0) != k)
        throw error(errc::bad_argument,
                    "level of the context does not match k = " + k.str());

    CasimirResult cas = casimir_h_dual(g, form);
    Rational h_vee = cas.two_h_vee / Rational(2);
    if (k == -h_vee)
        throw error(errc::critical_level,
                    "k = -h_vee = " + k.str() + " is the critical level");

    const int n = static_cast<int>(p.num_generators());
    VVector omega;
    for (int i = 0; i < n; ++i)
        for (const auto& [j, c] : cas.dual_basis[i]) {
            std::vector<Mode> word{Mode{false, i, -1}, Mode{false, j, -1}};
            omega += normal_order(ctx, std::move(word), c);
        }
    omega *= Rational(1) / (Rational(2) * (k + h_vee));

    // Every monomial of omega must sit in degree 4N.
    for (const auto& [mono, c] : omega.terms())
        if (ctx.degree_of(mono) != 4 * p.loop_param())
            throw error(errc::degree_mismatch,
                        "Sugawara vector is not concentrated in degree 4N");

    Rational c = k * Rational(sdim(g)) / (k + h_vee);
    return SugawaraResult{std::move(omega), std::move(c), std::move(h_vee)};
}

/// Verifies that L(n) = (omega)_{n+1} generates a Virasoro action of central
/// charge c on every PBW basis vector of weight <= basis_cap:
/// [L(m), L(n)] = (m-n) L(m+n) + delta_{m+n,0} ((m^3-m)/12) c, with
/// L(-1) agreeing with the translation operator and L(0) with the weight
/// grading. d(omega) is recorded without judgment.
inline AxiomReport verify_virasoro_action(const EnvelopeContext& ctx,
                                          const VVector& omega, const Rational& c,
                                          long long window_lo, long long window_hi,
                                          const Rational& basis_cap) {
    AxiomReport rep;
    rep.window_lo = window_lo;
    rep.window_hi = window_hi;
    rep.scope = "Virasoro action on PBW basis vectors of weight <= " +
                basis_cap.str() + "; window [" + std::to_string(window_lo) + ", " +
                std::to_string(window_hi) + "]";
    rep.notes.push_back("d(omega) = " +
                        to_string(ctx, differential_on_V(ctx, omega)));

    auto L = [&](long long n, const VVector& v) {
        return vertex_mode(ctx, omega, n + 1, v);
    };

    auto basis = enumerate_basis(ctx);
    for (const auto& [w, monos] : basis) {
        if (w > basis_cap)
            continue;
        for (const PbwMonomial& mono : monos) {
            VVector v;
            v.add(mono, Rational(1));
            std::string vec_label = to_string(ctx, v);

            std::map<long long, VVector> Lv;
            for (long long n = window_lo; n <= window_hi; ++n)
                Lv[n] = L(n, v);

            for (long long m = window_lo; m <= window_hi; ++m)
                for (long long n = window_lo; n <= window_hi; ++n) {
                    VVector comm = L(m, Lv[n]) - L(n, Lv[m]);
                    VVector expect;
                    if (m + n >= window_lo && m + n <= window_hi) {
                        expect = Lv[m + n];
                    } else {
                        expect = L(m + n, v);
                    }
                    expect *= Rational(m - n);
                    if (m + n == 0) {
                        VVector central = v;
                        central *= Rational(m * m * m - m) / Rational(12) * c;
                        expect += central;
                    }
                    VVector defect = comm - expect;
                    rep.record("Virasoro-bracket",
                               "[L(" + std::to_string(m) + "), L(" + std::to_string(n) +
                                   ")] on " + vec_label,
                               defect.is_zero(), to_string(ctx, defect));
                }

            VVector d_translate = L(-1, v) - translate(ctx, v);
            rep.record("L(-1)=translation", vec_label, d_translate.is_zero(),
                       to_string(ctx, d_translate));

            VVector weighted = v;
            weighted *= w;
            VVector d_weight = L(0, v) - weighted;
            rep.record("L(0)=weight", vec_label, d_weight.is_zero(),
                       to_string(ctx, d_weight));
        }
    }
    return rep;
}

/// Catalog lookup used by the command-line tool; names map to the worked
/// examples at their natural loop parameter.
inline std::optional<Presentation> catalog_presentation(const std::string& name,
                                                        std::optional<int> N = {}) {
    if (name == "virasoro")
        return build_virasoro(N.value_or(1));
    if (name == "ns" || name == "neveu-schwarz")
        return build_neveu_schwarz(N.value_or(1));
    if (name == "sl2" || name == "affine-sl2")
        return build_affine_sl2(N.value_or(0));
    if (name == "heisenberg")
        return build_heisenberg(N.value_or(0));
    if (name == "acyclic")
        return build_acyclic_affine(N.value_or(0));
    return std::nullopt;
}

}  // namespace dgv

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgvertex/errors.hpp"
#include "dgvertex/grading.hpp"
#include "dgvertex/rational.hpp"

namespace dgv {

/// Combination of dg Lie algebra generators: index -> coefficient.
using GVec = std::map<int, Rational>;

inline GVec& gvec_add(GVec& v, int g, const Rational& c) {
    if (c.is_zero())
        return v;
    auto it = v.find(g);
    if (it == v.end()) {
        v.emplace(g, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
    return v;
}

inline GVec gvec_scale(GVec v, const Rational& s) {
    if (s.is_zero())
        return {};
    for (auto& [g, c] : v)
        c *= s;
    return v;
}

inline GVec gvec_sub(GVec a, const GVec& b) {
    for (const auto& [g, c] : b)
        gvec_add(a, g, -c);
    return a;
}

struct DgLieGenerator {
    std::string id;
    Degree degree;
};

/// Finite-dimensional dg Lie algebra given by structure constants. The
/// bracket has degree p = -2N; the full table (both orders) is stored,
/// absent pairs are zero.
struct DgLieData {
    std::vector<DgLieGenerator> generators;
    std::map<std::pair<int, int>, GVec> bracket;
    std::map<int, GVec> differential;
    int bracket_degree = 0;  // p = -2N

    GVec bracket_of(int a, int b) const {
        auto it = bracket.find(std::make_pair(a, b));
        return it == bracket.end() ? GVec{} : it->second;
    }

    GVec differential_of(int a) const {
        auto it = differential.find(a);
        return it == differential.end() ? GVec{} : it->second;
    }

    GVec bracket_of(const GVec& x, const GVec& y) const {
        GVec r;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y)
                for (const auto& [g, c] : bracket_of(a, b))
                    gvec_add(r, g, ca * cb * c);
        return r;
    }

    GVec differential_of(const GVec& x) const {
        GVec r;
        for (const auto& [a, ca] : x)
            for (const auto& [g, c] : differential_of(a))
                gvec_add(r, g, ca * c);
        return r;
    }

    bool gen_odd(int a) const { return generators[a].degree.odd(); }

    /// Checks antisymmetry, the Jacobi identity, degree homogeneity of the
    /// bracket, and that d is a square-zero chain derivation.
    void validate() const {
        const int n = static_cast<int>(generators.size());
        const int p = bracket_degree;
        for (const auto& [key, val] : bracket) {
            auto [a, b] = key;
            Degree want{generators[a].degree.value + generators[b].degree.value + p};
            for (const auto& [g, c] : val)
                if (generators[g].degree != want)
                    throw error(errc::degree_mismatch,
                                "bracket [" + generators[a].id + ", " + generators[b].id +
                                    "] is not homogeneous of degree p");
        }
        for (const auto& [a, d] : differential) {
            Degree want{generators[a].degree.value + 1};
            for (const auto& [g, c] : d)
                if (generators[g].degree != want)
                    throw error(errc::degree_mismatch,
                                "d(" + generators[a].id + ") must raise degree by 1");
        }
        auto sgn = [&](int a, int b) {
            return koszul_sign_int((generators[a].degree.value + p) & 1,
                                   (generators[b].degree.value + p) & 1);
        };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                GVec anti = bracket_of(a, b);
                for (const auto& [g, c] : bracket_of(b, a))
                    gvec_add(anti, g, Rational(sgn(a, b)) * c);
                if (!anti.empty())
                    throw error(errc::bad_argument,
                                "bracket fails antisymmetry on (" + generators[a].id +
                                    ", " + generators[b].id + ")");
            }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    GVec lhs = bracket_of(GVec{{a, Rational(1)}}, bracket_of(b, c));
                    GVec rhs = bracket_of(bracket_of(a, b), GVec{{c, Rational(1)}});
                    GVec mid = gvec_scale(bracket_of(GVec{{b, Rational(1)}}, bracket_of(a, c)),
                                          Rational(sgn(a, b)));
                    GVec defect = gvec_sub(gvec_sub(lhs, rhs), mid);
                    if (!defect.empty())
                        throw error(errc::bad_argument,
                                    "bracket fails the Jacobi identity on (" +
                                        generators[a].id + ", " + generators[b].id + ", " +
                                        generators[c].id + ")");
                }
        for (int a = 0; a < n; ++a) {
            if (!differential_of(differential_of(a)).empty())
                throw error(errc::differential_not_square_zero,
                            "d(d(" + generators[a].id + ")) is nonzero");
            for (int b = 0; b < n; ++b) {
                GVec lhs = differential_of(bracket_of(a, b));
                GVec rhs = bracket_of(differential_of(a), GVec{{b, Rational(1)}});
                int s = ((generators[a].degree.value + p) & 1) ? -1 : 1;
                GVec rhs2 = gvec_scale(bracket_of(GVec{{a, Rational(1)}}, differential_of(b)),
                                       Rational(s));
                GVec defect = gvec_sub(gvec_sub(lhs, rhs), rhs2);
                if (!defect.empty())
                    throw error(errc::bad_argument,
                                "d is not a derivation of the bracket on (" +
                                    generators[a].id + ", " + generators[b].id + ")");
            }
        }
    }
};

/// Invariant bilinear form on a dg Lie algebra, as a matrix over generator
/// pairs. Absent entries are zero.
struct BilinearForm {
    std::map<std::pair<int, int>, Rational> entries;

    Rational value(int a, int b) const {
        auto it = entries.find(std::make_pair(a, b));
        return it == entries.end() ? Rational(0) : it->second;
    }

    Rational value(const GVec& x, const GVec& y) const {
        Rational r(0);
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y)
                r += ca * cb * value(a, b);
        return r;
    }
};

/// Checks the invariance conditions of the form against g: d-invariance,
/// graded symmetry, associativity, and the degree support constraint
/// <a,b> != 0 => |a| + |b| + 2p = 0.
inline void check_form(const DgLieData& g, const BilinearForm& form) {
    const int n = static_cast<int>(g.generators.size());
    const int p = g.bracket_degree;
    for (const auto& [key, val] : form.entries) {
        auto [a, b] = key;
        if (val.is_zero())
            continue;
        if (g.generators[a].degree.value + g.generators[b].degree.value + 2 * p != 0)
            throw error(errc::form_invariant_violation,
                        "<" + g.generators[a].id + ", " + g.generators[b].id +
                            "> is nonzero but |a|+|b|+2p != 0");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int s = (g.generators[a].degree.value & 1) ? -1 : 1;  // (-1)^{|a|+2p}
            if (form.value(a, b) != Rational(s) * form.value(b, a))
                throw error(errc::form_invariant_violation,
                            "form is not graded-symmetric on (" + g.generators[a].id +
                                ", " + g.generators[b].id + ")");
            if (form.value(g.differential_of(a), GVec{{b, Rational(1)}}) +
                    Rational(s) * form.value(GVec{{a, Rational(1)}}, g.differential_of(b)) !=
                Rational(0))
                throw error(errc::form_invariant_violation,
                            "form is not d-invariant on (" + g.generators[a].id + ", " +
                                g.generators[b].id + ")");
            for (int c = 0; c < n; ++c) {
                if (form.value(g.bracket_of(a, b), GVec{{c, Rational(1)}}) !=
                    form.value(GVec{{a, Rational(1)}}, g.bracket_of(b, c)))
                    throw error(errc::form_invariant_violation,
                                "form is not invariant on (" + g.generators[a].id + ", " +
                                    g.generators[b].id + ", " + g.generators[c].id + ")");
            }
        }
}

}  // namespace dgv

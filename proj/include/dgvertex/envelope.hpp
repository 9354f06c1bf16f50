#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgvertex/errors.hpp"
#include "dgvertex/grading.hpp"
#include "dgvertex/loop.hpp"
#include "dgvertex/presentation.hpp"
#include "dgvertex/rational.hpp"

namespace dgv {

inline long long ceil_ll(const Rational& r) { return -(-r).floor_ll(); }

/// Normal-ordered monomial a^(1)_{n_1} ... a^(r)_{n_r} |0> with every
/// n_i <= -1, modes sorted ascending by (n, generator). Equal adjacent odd
/// modes never appear: straightening rewrites them to (1/2)[x, x].
struct PbwMonomial {
    std::vector<Mode> modes;  // generator modes only

    friend bool operator<(const PbwMonomial& a, const PbwMonomial& b) {
        return a.modes < b.modes;
    }
    friend bool operator==(const PbwMonomial& a, const PbwMonomial& b) {
        return a.modes == b.modes;
    }
};

/// Element of the enveloping vacuum module: canonical combination of PBW
/// monomials, all within the context weight cap.
class VVector {
public:
    using Terms = std::map<PbwMonomial, Rational>;

    VVector() = default;

    static VVector vacuum(Rational coeff = Rational(1)) {
        VVector v;
        v.add(PbwMonomial{}, coeff);
        return v;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const PbwMonomial& m, const Rational& coeff) {
        if (coeff.is_zero())
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    VVector& operator+=(const VVector& o) {
        for (const auto& [m, c] : o.terms_)
            add(m, c);
        return *this;
    }
    VVector& operator-=(const VVector& o) {
        for (const auto& [m, c] : o.terms_)
            add(m, -c);
        return *this;
    }
    VVector& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend VVector operator+(VVector a, const VVector& b) { return a += b; }
    friend VVector operator-(VVector a, const VVector& b) { return a -= b; }
    friend VVector operator*(const Rational& s, VVector a) { return a *= s; }

    friend bool operator==(const VVector& a, const VVector& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const VVector& a, const VVector& b) { return !(a == b); }

private:
    Terms terms_;
};

/// Weight-truncated enveloping algebra context: presentation, a level for
/// every central (the quotient by <K_{-1} - k 1> is total), and the weight
/// cap. Every operation either completes exactly within the cap or raises
/// WeightOverflow; nothing is silently truncated.
class EnvelopeContext {
public:
    EnvelopeContext(Presentation pres, const std::map<std::string, Rational>& levels,
                    Rational weight_cap)
        : pres_(std::move(pres)), cap_(std::move(weight_cap)) {
        if (cap_ < Rational(0))
            throw error(errc::bad_argument, "weight cap must be >= 0");
        levels_.resize(pres_.num_centrals(), Rational(0));
        std::vector<bool> have(pres_.num_centrals(), false);
        for (const auto& [id, value] : levels) {
            auto idx = pres_.find_central(id);
            if (!idx)
                throw error(errc::unknown_central, "unknown central '" + id + "'");
            levels_[*idx] = value;
            have[*idx] = true;
            if (!value.is_zero() && pres_.central(*idx).degree.value != 0)
                throw error(errc::bad_argument,
                            "central '" + id + "' has nonzero degree; a nonzero "
                            "level would break the grading");
        }
        for (std::size_t c = 0; c < pres_.num_centrals(); ++c)
            if (!have[c])
                throw error(errc::missing_level,
                            "no level given for central '" + pres_.central(c).id + "'");
        for (std::size_t g = 0; g < pres_.num_generators(); ++g)
            if (pres_.generator(g).weight <= Rational(0))
                throw error(errc::nonpositive_weight,
                            "generator '" + pres_.generator(g).id +
                                "' has weight <= 0; weight spaces would be infinite");
    }

    const Presentation& presentation() const { return pres_; }
    const Rational& weight_cap() const { return cap_; }
    const Rational& level(int central) const { return levels_[central]; }

    Rational mode_weight(const Mode& m) const {
        Rational delta = m.central ? Rational(0) : pres_.generator(m.id).weight;
        return delta - Rational(m.n) - Rational(1);
    }

    Rational weight_of(const PbwMonomial& mono) const {
        Rational w(0);
        for (const Mode& m : mono.modes)
            w += mode_weight(m);
        return w;
    }

    int degree_of(const PbwMonomial& mono) const {
        // degree in the [2N]-shifted regrading, summed over modes
        int d = 0;
        for (const Mode& m : mono.modes)
            d += pres_.generator(m.id).degree.value -
                 2 * pres_.loop_param() * static_cast<int>(m.n + 1);
        return d;
    }

    bool parity_of(const PbwMonomial& mono) const {
        bool odd = false;
        for (const Mode& m : mono.modes)
            odd ^= pres_.gen_odd(m.id);
        return odd;
    }

    /// Parity of a homogeneous vector; throws on mixed parity.
    bool parity_of(const VVector& v) const {
        std::optional<bool> parity;
        for (const auto& [m, c] : v.terms()) {
            bool p = parity_of(m);
            if (!parity)
                parity = p;
            else if (*parity != p)
                throw error(errc::bad_argument, "vector has mixed parity");
        }
        return parity.value_or(false);
    }

    /// Weight of a homogeneous vector; throws on mixed weight.
    Rational weight_of(const VVector& v) const {
        std::optional<Rational> w;
        for (const auto& [m, c] : v.terms()) {
            Rational x = weight_of(m);
            if (!w)
                w = x;
            else if (*w != x)
                throw error(errc::bad_argument, "vector has mixed weight");
        }
        return w.value_or(Rational(0));
    }

private:
    Presentation pres_;
    std::vector<Rational> levels_;
    Rational cap_;
};

/// Straightening: rewrites an arbitrary word of modes applied to the vacuum
/// into the canonical PBW basis. Out-of-order adjacent pairs are transposed
/// against the supercommutator; modes with n >= 0 annihilate the vacuum;
/// central modes K_{-1} are replaced by their level. Terminates because each
/// rewrite lowers (length, inversions) lexicographically.
inline VVector normal_order(const EnvelopeContext& ctx, std::vector<Mode> word,
                            Rational coeff = Rational(1)) {
    const Presentation& p = ctx.presentation();
    VVector result;

    struct Item {
        Rational c;
        std::vector<Mode> w;
    };
    std::deque<Item> pending;
    pending.push_back(Item{std::move(coeff), std::move(word)});

    while (!pending.empty()) {
        Item item = std::move(pending.back());
        pending.pop_back();
        if (item.c.is_zero())
            continue;

        // centrals: K_{-1} -> level, K_{n != -1} -> 0; degree-0 centrals
        // carry no Koszul sign, so extraction from any position is free
        bool killed = false;
        for (std::size_t i = 0; i < item.w.size();) {
            if (item.w[i].central) {
                if (item.w[i].n != -1) {
                    killed = true;
                    break;
                }
                item.c *= ctx.level(item.w[i].id);
                item.w.erase(item.w.begin() + static_cast<std::ptrdiff_t>(i));
                if (item.c.is_zero()) {
                    killed = true;
                    break;
                }
            } else {
                ++i;
            }
        }
        if (killed)
            continue;

        if (!item.w.empty() && item.w.back().n >= 0)
            continue;  // annihilates the vacuum

        // weight is conserved by every rewrite below
        Rational w(0);
        for (const Mode& m : item.w)
            w += ctx.mode_weight(m);
        if (w < Rational(0))
            continue;  // no PBW monomial has negative weight

        std::size_t swap_at = item.w.size();
        bool odd_square = false;
        for (std::size_t i = 0; i + 1 < item.w.size(); ++i) {
            const Mode& x = item.w[i];
            const Mode& y = item.w[i + 1];
            if (y < x) {
                swap_at = i;
                break;
            }
            if (x == y && mode_odd(p, x)) {
                swap_at = i;
                odd_square = true;
                break;
            }
        }

        if (swap_at == item.w.size()) {
            if (w > ctx.weight_cap())
                throw error(errc::weight_overflow,
                            "monomial of weight " + w.str() + " exceeds cap " +
                                ctx.weight_cap().str() + "; raise the cap");
            result.add(PbwMonomial{std::move(item.w)}, item.c);
            continue;
        }

        const Mode x = item.w[swap_at];
        const Mode y = item.w[swap_at + 1];
        LElement br = loop_bracket(p, LElement::mode(x), LElement::mode(y));

        if (odd_square) {
            // x x = (1/2)[x, x] for odd x
            for (const auto& [m, c] : br.terms()) {
                Item t;
                t.c = item.c * c / Rational(2);
                t.w = item.w;
                t.w[swap_at] = m;
                t.w.erase(t.w.begin() + static_cast<std::ptrdiff_t>(swap_at) + 1);
                pending.push_back(std::move(t));
            }
            continue;
        }

        Item swapped;
        swapped.c = item.c *
                    Rational(koszul_sign_int(mode_odd(p, x), mode_odd(p, y)));
        swapped.w = item.w;
        std::swap(swapped.w[swap_at], swapped.w[swap_at + 1]);
        pending.push_back(std::move(swapped));

        for (const auto& [m, c] : br.terms()) {
            Item t;
            t.c = item.c * c;
            t.w = item.w;
            t.w[swap_at] = m;
            t.w.erase(t.w.begin() + static_cast<std::ptrdiff_t>(swap_at) + 1);
            pending.push_back(std::move(t));
        }
    }

    return result;
}

/// Left multiplication by the mode a_n, exactly.
inline VVector mode_apply(const EnvelopeContext& ctx, int gen, long long n,
                          const VVector& v) {
    VVector r;
    for (const auto& [mono, c] : v.terms()) {
        std::vector<Mode> word;
        word.reserve(mono.modes.size() + 1);
        word.push_back(Mode{false, gen, n});
        word.insert(word.end(), mono.modes.begin(), mono.modes.end());
        r += normal_order(ctx, std::move(word), c);
    }
    return r;
}

/// Action of an element of L(U); central modes act by their level.
inline VVector apply_lelement(const EnvelopeContext& ctx, const LElement& x,
                              const VVector& v) {
    VVector r;
    for (const auto& [m, c] : x.terms()) {
        if (m.central) {
            if (m.n == -1) {
                VVector t = v;
                t *= c * ctx.level(m.id);
                r += t;
            }
            continue;
        }
        VVector t = mode_apply(ctx, m.id, m.n, v);
        t *= c;
        r += t;
    }
    return r;
}

/// kappa: U -> V(U), u -> u_{-1} |0>.
inline VVector kappa(const EnvelopeContext& ctx, const UElement& u) {
    return apply_lelement(ctx, iota(ctx.presentation(), u), VVector::vacuum());
}

/// Translation operator D: derivation over the modes with D(a_n) = -n a_{n-1}
/// and D|0> = 0.
inline VVector translate(const EnvelopeContext& ctx, const VVector& v) {
    VVector r;
    for (const auto& [mono, c] : v.terms()) {
        for (std::size_t j = 0; j < mono.modes.size(); ++j) {
            Rational coeff = c * Rational(-mono.modes[j].n);
            if (coeff.is_zero())
                continue;
            std::vector<Mode> word = mono.modes;
            word[j].n -= 1;
            r += normal_order(ctx, std::move(word), coeff);
        }
    }
    return r;
}

/// Differential of the envelope: graded derivation over the modes induced by
/// the presentation differential, d(a_n) = (d_U a)_n, d|0> = 0.
inline VVector differential_on_V(const EnvelopeContext& ctx, const VVector& v) {
    const Presentation& p = ctx.presentation();
    VVector r;
    for (const auto& [mono, c] : v.terms()) {
        bool sign_odd = false;
        for (std::size_t j = 0; j < mono.modes.size(); ++j) {
            const Mode& mj = mono.modes[j];
            const UElement& d = p.differential_of(mj.id);
            if (!d.is_zero()) {
                LElement dm = mode_normal_form(p, d, mj.n);
                for (const auto& [m, mc] : dm.terms()) {
                    Rational coeff = c * mc;
                    if (sign_odd)
                        coeff = -coeff;
                    std::vector<Mode> word = mono.modes;
                    word[j] = m;
                    r += normal_order(ctx, std::move(word), coeff);
                }
            }
            sign_odd ^= p.gen_odd(mj.id);
        }
    }
    return r;
}

namespace detail {

/// m-th mode of Y(monomial |0>, x) applied to v, by structural recursion on
/// the leading (smallest-index) mode: with u = a_n w,
///   (a_(n) w)_m = sum_{i>=0} C(n,i) [ (-1)^i a_{n-i} o w_{m+i}
///                                     - (-1)^{|a||w|+n+i} w_{m+n-i} o a_i ],
/// evaluated lazily on v so both sums truncate by weight positivity.
inline VVector vertex_mode_mono(const EnvelopeContext& ctx,
                                const std::vector<Mode>& modes, std::size_t from,
                                long long m, const VVector& v) {
    const Presentation& p = ctx.presentation();
    if (v.is_zero())
        return VVector();
    if (from == modes.size()) {
        // Y(|0>, x) = id
        return m == -1 ? v : VVector();
    }

    const Mode& lead = modes[from];
    const long long n = lead.n;

    if (from + 1 == modes.size() && n == -1)
        return mode_apply(ctx, lead.id, m, v);

    Rational tail_weight(0);
    bool tail_odd = false;
    for (std::size_t j = from + 1; j < modes.size(); ++j) {
        tail_weight += ctx.mode_weight(modes[j]);
        tail_odd ^= p.gen_odd(modes[j].id);
    }
    const bool lead_odd = p.gen_odd(lead.id);
    const Rational v_weight = ctx.weight_of(v);

    VVector result;

    // first sum: a_{n-i} ( Y(w)_{m+i} v ); zero once wt(w)+wt(v)-m-i-1 < 0
    long long i_max1 = (tail_weight + v_weight - Rational(m) - Rational(1)).floor_ll();
    for (long long i = 0; i <= i_max1; ++i) {
        VVector inner = vertex_mode_mono(ctx, modes, from + 1, m + i, v);
        if (inner.is_zero())
            continue;
        Rational coeff = binomial(n, i);
        if (i & 1)
            coeff = -coeff;
        VVector t = mode_apply(ctx, lead.id, n - i, inner);
        t *= coeff;
        result += t;
    }

    // second sum: Y(w)_{m+n-i} ( a_i v ); zero once wt(a)+wt(v)-i-1 < 0
    long long i_max2 =
        (p.generator(lead.id).weight + v_weight - Rational(1)).floor_ll();
    int base_sign = koszul_sign_int(lead_odd, tail_odd);
    for (long long i = 0; i <= i_max2; ++i) {
        VVector av = mode_apply(ctx, lead.id, i, v);
        if (av.is_zero())
            continue;
        Rational coeff = binomial(n, i) * Rational(base_sign);
        if ((n + i) % 2 != 0)
            coeff = -coeff;
        VVector t = vertex_mode_mono(ctx, modes, from + 1, m + n - i, av);
        t *= coeff;
        result -= t;
    }

    return result;
}

}  // namespace detail

/// m-th mode of the vertex operator Y(u, x) applied to v.
inline VVector vertex_mode(const EnvelopeContext& ctx, const VVector& u, long long m,
                           const VVector& v) {
    VVector r;
    for (const auto& [mono, c] : u.terms()) {
        VVector t = detail::vertex_mode_mono(ctx, mono.modes, 0, m, v);
        t *= c;
        r += t;
    }
    return r;
}

/// Skew-symmetry defects u_n v - (-1)^{|u||v|} sum_i ((-1)^{n+1+i}/i!)
/// D^i(v_{n+i} u), for every mode n whose result fits the weight cap.
/// Empty result iff skew symmetry holds on the scanned range.
inline std::map<long long, VVector> skew_symmetry_defect(const EnvelopeContext& ctx,
                                                         const VVector& u,
                                                         const VVector& v) {
    std::map<long long, VVector> defects;
    Rational wu = ctx.weight_of(u), wv = ctx.weight_of(v);
    int sgn = koszul_sign_int(ctx.parity_of(u), ctx.parity_of(v));
    long long n_max = (wu + wv - Rational(1)).floor_ll();
    long long n_min = ceil_ll(wu + wv - Rational(1) - ctx.weight_cap());
    for (long long n = n_min; n <= n_max; ++n) {
        VVector defect = vertex_mode(ctx, u, n, v);
        long long i_max = (wu + wv - Rational(n) - Rational(1)).floor_ll();
        for (long long i = 0; i <= i_max; ++i) {
            VVector t = vertex_mode(ctx, v, n + i, u);
            for (long long j = 0; j < i; ++j)
                t = translate(ctx, t);
            Rational coeff = Rational(sgn) / factorial(i);
            if ((n + 1 + i) % 2 != 0)
                coeff = -coeff;
            t *= coeff;
            defect -= t;
        }
        if (!defect.is_zero())
            defects.emplace(n, std::move(defect));
    }
    return defects;
}

/// Measured locality order: the least k <= k_max such that every coefficient
/// of (x1-x2)^k [Y(u,x1), Y(v,x2)]^s annihilates every probe, over all mode
/// pairs whose evaluation stays within the weight cap.
inline long long locality_order(const EnvelopeContext& ctx, const VVector& u,
                                const VVector& v,
                                const std::vector<VVector>& probes,
                                long long k_max) {
    Rational wu = ctx.weight_of(u), wv = ctx.weight_of(v);
    int sgn = koszul_sign_int(ctx.parity_of(u), ctx.parity_of(v));
    const Rational& cap = ctx.weight_cap();

    for (long long k = 0; k <= k_max; ++k) {
        bool all_zero = true;
        for (const VVector& w : probes) {
            Rational ww = ctx.weight_of(w);
            Rational wsum = wu + wv + ww;
            long long n_lo = ceil_ll(wv + ww - Rational(1) - cap);
            long long n_hi = (wv + ww - Rational(1)).floor_ll();
            long long m_lo = ceil_ll(wu + ww - Rational(1) - cap);
            long long mn_hi = (wsum - Rational(k) - Rational(2)).floor_ll();
            long long mn_lo = ceil_ll(wsum - Rational(k) - Rational(2) - cap);
            for (long long n = n_lo; n <= n_hi && all_zero; ++n) {
                for (long long m = std::max(m_lo, mn_lo - n); m + n <= mn_hi; ++m) {
                    VVector g;
                    for (long long j = 0; j <= k; ++j) {
                        Rational coeff = binomial(k, j);
                        if (j & 1)
                            coeff = -coeff;
                        if (coeff.is_zero())
                            continue;
                        VVector t1 =
                            vertex_mode(ctx, u, m + k - j, vertex_mode(ctx, v, n + j, w));
                        t1 *= coeff;
                        g += t1;
                        VVector t2 =
                            vertex_mode(ctx, v, n + j, vertex_mode(ctx, u, m + k - j, w));
                        t2 *= coeff * Rational(sgn);
                        g -= t2;
                    }
                    if (!g.is_zero()) {
                        all_zero = false;
                        break;
                    }
                }
            }
            if (!all_zero)
                break;
        }
        if (all_zero)
            return k;
    }
    throw error(errc::window_exceeded,
                "no locality order found up to k_max = " + std::to_string(k_max));
}

/// All PBW basis monomials of weight <= cap, grouped by weight.
inline std::map<Rational, std::vector<PbwMonomial>> enumerate_basis(
    const EnvelopeContext& ctx) {
    const Presentation& p = ctx.presentation();
    std::map<Rational, std::vector<PbwMonomial>> basis;
    std::vector<Mode> current;

    auto record = [&](const Rational& w) { basis[w].push_back(PbwMonomial{current}); };

    // Depth-first enumeration of sorted mode lists; each added mode has
    // weight >= its generator weight > 0, so the recursion is finite.
    auto rec = [&](auto&& self, const Rational& used) -> void {
        record(used);
        const bool has_last = !current.empty();
        const Mode last = has_last ? current.back() : Mode{};
        for (long long n = -1;; --n) {
            bool any_fits = false;
            for (std::size_t g = 0; g < p.num_generators(); ++g) {
                Mode m{false, static_cast<int>(g), n};
                Rational w = ctx.mode_weight(m);
                if (used + w > ctx.weight_cap())
                    continue;
                any_fits = true;
                if (has_last) {
                    if (m < last)
                        continue;
                    if (m == last && p.gen_odd(m.id))
                        continue;  // odd squares straighten away
                }
                current.push_back(m);
                self(self, used + w);
                current.pop_back();
            }
            if (!any_fits)
                break;  // weights only grow as n decreases
        }
    };
    rec(rec, Rational(0));

    for (auto& [w, monos] : basis)
        std::sort(monos.begin(), monos.end());
    return basis;
}

struct CharacterRow {
    Rational weight;
    std::map<int, std::size_t> dims_by_degree;
    std::size_t total = 0;
};

namespace detail {

/// Weight step of the grading: 1 / lcm of generator-weight denominators.
inline Rational weight_step(const Presentation& p) {
    Rational::Int l(1);
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
        Rational::Int d = p.generator(g).weight.den();
        l = boost::multiprecision::lcm(l, d);
    }
    return Rational(Rational::Int(1), l);
}

}  // namespace detail

/// Graded dimensions of the PBW basis per weight up to the cap, refined by
/// cohomological degree. Rows step through every multiple of the weight
/// quantum so zero dimensions are visible.
inline std::vector<CharacterRow> character(const EnvelopeContext& ctx) {
    auto basis = enumerate_basis(ctx);
    Rational step = detail::weight_step(ctx.presentation());
    std::vector<CharacterRow> rows;
    for (Rational w(0); w <= ctx.weight_cap(); w += step) {
        CharacterRow row;
        row.weight = w;
        auto it = basis.find(w);
        if (it != basis.end()) {
            for (const PbwMonomial& m : it->second) {
                ++row.dims_by_degree[ctx.degree_of(m)];
                ++row.total;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct CohomologyRow {
    Rational weight;
    int degree;
    std::size_t dim;
};

namespace detail {

/// Exact rank over Q by Gaussian elimination; destroys the matrix.
inline std::size_t exact_rank(std::vector<std::vector<Rational>>& mat) {
    std::size_t rank = 0;
    if (mat.empty())
        return 0;
    std::size_t rows = mat.size(), cols = mat[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && mat[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(mat[rank], mat[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (mat[r][col].is_zero())
                continue;
            Rational f = mat[r][col] / mat[rank][col];
            for (std::size_t c2 = col; c2 < cols; ++c2)
                mat[r][c2] -= f * mat[rank][c2];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Exact cohomology dimensions of (V, d) per weight and degree, up to the
/// cap. d preserves weight and raises degree by 1.
inline std::vector<CohomologyRow> cohomology_dims(const EnvelopeContext& ctx) {
    auto basis = enumerate_basis(ctx);
    Rational step = detail::weight_step(ctx.presentation());
    std::vector<CohomologyRow> rows;

    for (Rational w(0); w <= ctx.weight_cap(); w += step) {
        auto it = basis.find(w);
        if (it == basis.end())
            continue;

        std::map<int, std::vector<PbwMonomial>> by_degree;
        for (const PbwMonomial& m : it->second)
            by_degree[ctx.degree_of(m)].push_back(m);

        std::map<int, std::size_t> rank_from;  // rank of d: degree q -> q+1
        for (const auto& [q, monos] : by_degree) {
            auto target = by_degree.find(q + 1);
            if (target == by_degree.end()) {
                rank_from[q] = 0;
                continue;
            }
            std::map<PbwMonomial, std::size_t> index;
            for (std::size_t i = 0; i < target->second.size(); ++i)
                index.emplace(target->second[i], i);
            std::vector<std::vector<Rational>> mat(
                monos.size(), std::vector<Rational>(target->second.size(), Rational(0)));
            for (std::size_t i = 0; i < monos.size(); ++i) {
                VVector image = differential_on_V(
                    ctx, [&] {
                        VVector v;
                        v.add(monos[i], Rational(1));
                        return v;
                    }());
                for (const auto& [m, c] : image.terms())
                    mat[i][index.at(m)] = c;
            }
            rank_from[q] = detail::exact_rank(mat);
        }

        for (const auto& [q, monos] : by_degree) {
            std::size_t into = 0;
            if (auto pr = rank_from.find(q - 1); pr != rank_from.end())
                into = pr->second;
            std::size_t dim_h = monos.size() - rank_from[q] - into;
            rows.push_back(CohomologyRow{w, q, dim_h});
        }
    }
    return rows;
}

inline std::string to_string(const EnvelopeContext& ctx, const VVector& v) {
    const Presentation& p = ctx.presentation();
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [mono, c] : v.terms()) {
        std::string sym;
        for (const Mode& m : mono.modes)
            sym += p.generator(m.id).id + "_" + std::to_string(m.n) + " ";
        sym += "|0>";
        terms.emplace_back(c, sym);
    }
    return detail::join_signed(std::move(terms));
}

}  // namespace dgv

#pragma once

#include <map>
#include <utility>

#include "dgvertex/rational.hpp"

namespace dgv {

/// Element of the vertex Lie algebra U = C[D] (x) generators (+) centrals,
/// kept in canonical form: terms sorted by key, zero coefficients erased.
/// Generator and central ids are indices into a Presentation.
class UElement {
public:
    // (generator, D-power) -> coefficient
    using DTerms = std::map<std::pair<int, int>, Rational>;
    // central -> coefficient
    using CTerms = std::map<int, Rational>;

    UElement() = default;

    static UElement generator(int gen, int dpower = 0, Rational coeff = Rational(1)) {
        UElement u;
        u.add_dterm(gen, dpower, coeff);
        return u;
    }

    static UElement central(int cen, Rational coeff = Rational(1)) {
        UElement u;
        u.add_cterm(cen, coeff);
        return u;
    }

    const DTerms& dterms() const { return dterms_; }
    const CTerms& cterms() const { return cterms_; }

    bool is_zero() const { return dterms_.empty() && cterms_.empty(); }

    void add_dterm(int gen, int dpower, const Rational& coeff) {
        if (coeff.is_zero())
            return;
        auto key = std::make_pair(gen, dpower);
        auto it = dterms_.find(key);
        if (it == dterms_.end()) {
            dterms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                dterms_.erase(it);
        }
    }

    void add_cterm(int cen, const Rational& coeff) {
        if (coeff.is_zero())
            return;
        auto it = cterms_.find(cen);
        if (it == cterms_.end()) {
            cterms_.emplace(cen, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                cterms_.erase(it);
        }
    }

    UElement& operator+=(const UElement& o) {
        for (const auto& [k, c] : o.dterms_)
            add_dterm(k.first, k.second, c);
        for (const auto& [k, c] : o.cterms_)
            add_cterm(k, c);
        return *this;
    }

    UElement& operator-=(const UElement& o) {
        for (const auto& [k, c] : o.dterms_)
            add_dterm(k.first, k.second, -c);
        for (const auto& [k, c] : o.cterms_)
            add_cterm(k, -c);
        return *this;
    }

    UElement& operator*=(const Rational& s) {
        if (s.is_zero()) {
            dterms_.clear();
            cterms_.clear();
            return *this;
        }
        for (auto& [k, c] : dterms_)
            c *= s;
        for (auto& [k, c] : cterms_)
            c *= s;
        return *this;
    }

    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(const Rational& s, UElement a) { return a *= s; }

    friend bool operator==(const UElement& a, const UElement& b) {
        return a.dterms_ == b.dterms_ && b.cterms_ == a.cterms_;
    }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

private:
    DTerms dterms_;
    CTerms cterms_;
};

/// Translation operator D: D^k a -> D^{k+1} a, centrals -> 0.
inline UElement apply_D(const UElement& u) {
    UElement r;
    for (const auto& [k, c] : u.dterms())
        r.add_dterm(k.first, k.second + 1, c);
    return r;
}

inline UElement apply_D_power(UElement u, int k) {
    for (int j = 0; j < k; ++j)
        u = apply_D(u);
    return u;
}

}  // namespace dgv

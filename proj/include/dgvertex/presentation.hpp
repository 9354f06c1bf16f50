#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dgvertex/element.hpp"
#include "dgvertex/errors.hpp"
#include "dgvertex/grading.hpp"
#include "dgvertex/rational.hpp"

namespace dgv {

struct GeneratorDecl {
    std::string id;
    Degree degree;
    Rational weight;  // conformal weight, required input
};

struct CentralDecl {
    std::string id;
    Degree degree;
};

/// Bilinear form entries over generator pairs; absent pairs are zero.
using FormEntries = std::map<std::pair<int, int>, Rational>;

class PresentationBuilder;

/// Validated presentation of a dg vertex Lie algebra: loop parameter N
/// (|x| = -2N), generators spanning a free C[D]-module, centrals killed by D,
/// the differential table and the n-product table on generator pairs for
/// n >= 0. All other products follow from the two sesquilinearity rules.
class Presentation {
public:
    const std::string& name() const { return name_; }
    int loop_param() const { return N_; }

    std::size_t num_generators() const { return gens_.size(); }
    std::size_t num_centrals() const { return cens_.size(); }
    const GeneratorDecl& generator(int i) const { return gens_[i]; }
    const CentralDecl& central(int i) const { return cens_[i]; }

    std::optional<int> find_generator(std::string_view id) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].id == id)
                return static_cast<int>(i);
        return std::nullopt;
    }
    std::optional<int> find_central(std::string_view id) const {
        for (std::size_t i = 0; i < cens_.size(); ++i)
            if (cens_[i].id == id)
                return static_cast<int>(i);
        return std::nullopt;
    }

    bool gen_odd(int i) const { return gens_[i].degree.odd(); }
    bool cen_odd(int i) const { return cens_[i].degree.odd(); }

    /// a_(n) b for generators; null when zero. Stored for n >= 0 only.
    const UElement* product(int a, long long n, int b) const {
        auto it = products_.find(std::make_tuple(a, n, b));
        return it == products_.end() ? nullptr : &it->second;
    }

    /// Largest n with a_(n) b nonzero, or -1.
    long long product_support_max(int a, int b) const {
        auto it = support_max_.find(std::make_pair(a, b));
        return it == support_max_.end() ? -1 : it->second;
    }

    long long global_support_max() const { return global_support_max_; }

    const UElement& differential_of(int gen) const { return differential_[gen]; }

    bool has_nonzero_differential() const {
        for (const auto& d : differential_)
            if (!d.is_zero())
                return true;
        return false;
    }

    const FormEntries* form() const { return form_ ? &*form_ : nullptr; }

    Degree dterm_degree(int gen, int dpower) const {
        return Degree{gens_[gen].degree.value + 2 * N_ * dpower};
    }
    Rational dterm_weight(int gen, int dpower) const {
        return gens_[gen].weight + Rational(dpower);
    }

    /// Degree of a homogeneous element; nullopt if mixed or zero.
    std::optional<Degree> element_degree(const UElement& u) const {
        std::optional<Degree> deg;
        bool mixed = false;
        auto visit = [&](Degree d) {
            if (!deg)
                deg = d;
            else if (*deg != d)
                mixed = true;
        };
        for (const auto& [k, c] : u.dterms())
            visit(dterm_degree(k.first, k.second));
        for (const auto& [k, c] : u.cterms())
            visit(cens_[k].degree);
        if (mixed)
            return std::nullopt;
        return deg;
    }

    /// Weight of a homogeneous element; centrals have weight 0.
    std::optional<Rational> element_weight(const UElement& u) const {
        std::optional<Rational> w;
        bool mixed = false;
        auto visit = [&](const Rational& x) {
            if (!w)
                w = x;
            else if (*w != x)
                mixed = true;
        };
        for (const auto& [k, c] : u.dterms())
            visit(dterm_weight(k.first, k.second));
        for (const auto& [k, c] : u.cterms())
            visit(Rational(0));
        if (mixed)
            return std::nullopt;
        return w;
    }

    /// Linear extension of the differential table; commutes with D, kills
    /// centrals.
    UElement apply_differential(const UElement& u) const {
        UElement r;
        for (const auto& [k, c] : u.dterms()) {
            UElement d = apply_D_power(differential_[k.first], k.second);
            d *= c;
            r += d;
        }
        return r;
    }

private:
    friend class PresentationBuilder;
    Presentation() = default;

    std::string name_;
    int N_ = 0;
    std::vector<GeneratorDecl> gens_;
    std::vector<CentralDecl> cens_;
    std::vector<UElement> differential_;
    std::map<std::tuple<int, long long, int>, UElement> products_;
    std::map<std::pair<int, int>, long long> support_max_;
    long long global_support_max_ = -1;
    std::optional<FormEntries> form_;
};

class PresentationBuilder {
public:
    PresentationBuilder& set_name(std::string name) {
        p_.name_ = std::move(name);
        return *this;
    }
    PresentationBuilder& set_loop_param(int N) {
        p_.N_ = N;
        return *this;
    }

    int add_generator(const std::string& id, Degree degree, Rational weight) {
        check_fresh_id(id);
        p_.gens_.push_back(GeneratorDecl{id, degree, std::move(weight)});
        p_.differential_.emplace_back();
        return static_cast<int>(p_.gens_.size()) - 1;
    }

    int add_central(const std::string& id, Degree degree) {
        check_fresh_id(id);
        p_.cens_.push_back(CentralDecl{id, degree});
        return static_cast<int>(p_.cens_.size()) - 1;
    }

    int gen_index(std::string_view id) const {
        if (auto i = p_.find_generator(id))
            return *i;
        throw error(errc::unknown_generator, "unknown generator '" + std::string(id) + "'");
    }
    int cen_index(std::string_view id) const {
        if (auto i = p_.find_central(id))
            return *i;
        throw error(errc::unknown_central, "unknown central '" + std::string(id) + "'");
    }

    std::size_t num_generators() const { return p_.gens_.size(); }

    void set_differential(int gen, UElement d) {
        if (!p_.differential_[gen].is_zero())
            throw error(errc::duplicate_id,
                        "differential of '" + p_.gens_[gen].id + "' declared twice");
        p_.differential_[gen] = std::move(d);
    }

    void set_product(int left, long long n, int right, UElement result) {
        if (n < 0)
            throw error(errc::truncation_violation,
                        "product (" + p_.gens_[left].id + ", " + std::to_string(n) +
                            ", " + p_.gens_[right].id + ") has negative mode index");
        auto key = std::make_tuple(left, n, right);
        if (p_.products_.count(key))
            throw error(errc::duplicate_id,
                        "product (" + p_.gens_[left].id + ", " + std::to_string(n) +
                            ", " + p_.gens_[right].id + ") declared twice");
        if (result.is_zero())
            return;  // absent means zero
        p_.products_.emplace(key, std::move(result));
    }

    void set_form_entry(int left, int right, Rational value) {
        if (!p_.form_)
            p_.form_.emplace();
        auto key = std::make_pair(left, right);
        if (p_.form_->count(key))
            throw error(errc::duplicate_id,
                        "form entry (" + p_.gens_[left].id + ", " + p_.gens_[right].id +
                            ") declared twice");
        if (!value.is_zero())
            p_.form_->emplace(key, std::move(value));
    }

    void mark_form_present() {
        if (!p_.form_)
            p_.form_.emplace();
    }

    /// Checks every presentation invariant and returns the validated
    /// presentation.
    Presentation build() {
        const int N = p_.N_;
        for (const auto& [key, result] : p_.products_) {
            auto [a, n, b] = key;
            Degree want_deg{p_.gens_[a].degree.value + p_.gens_[b].degree.value -
                            2 * N * static_cast<int>(n + 1)};
            Rational want_wt = p_.gens_[a].weight + p_.gens_[b].weight -
                               Rational(n) - Rational(1);
            std::string where = "product (" + p_.gens_[a].id + ", " +
                                std::to_string(n) + ", " + p_.gens_[b].id + ")";
            for (const auto& [k, c] : result.dterms()) {
                if (p_.dterm_degree(k.first, k.second) != want_deg)
                    throw error(errc::degree_mismatch, where + " is not degree-homogeneous");
                if (p_.dterm_weight(k.first, k.second) != want_wt)
                    throw error(errc::weight_mismatch, where + " is not weight-homogeneous");
            }
            for (const auto& [k, c] : result.cterms()) {
                if (p_.cens_[k].degree != want_deg)
                    throw error(errc::degree_mismatch, where + " is not degree-homogeneous");
                if (Rational(0) != want_wt)
                    throw error(errc::weight_mismatch, where + " is not weight-homogeneous");
            }
        }

        for (std::size_t g = 0; g < p_.gens_.size(); ++g) {
            const UElement& d = p_.differential_[g];
            if (d.is_zero())
                continue;
            Degree want_deg{p_.gens_[g].degree.value + 1};
            const Rational& want_wt = p_.gens_[g].weight;
            std::string where = "differential of '" + p_.gens_[g].id + "'";
            for (const auto& [k, c] : d.dterms()) {
                if (p_.dterm_degree(k.first, k.second) != want_deg)
                    throw error(errc::degree_mismatch, where + " must raise degree by 1");
                if (p_.dterm_weight(k.first, k.second) != want_wt)
                    throw error(errc::weight_mismatch, where + " must preserve weight");
            }
            for (const auto& [k, c] : d.cterms()) {
                if (p_.cens_[k].degree != want_deg)
                    throw error(errc::degree_mismatch, where + " must raise degree by 1");
                if (Rational(0) != want_wt)
                    throw error(errc::weight_mismatch, where + " must preserve weight");
            }
        }

        for (std::size_t g = 0; g < p_.gens_.size(); ++g) {
            UElement dd = p_.apply_differential(p_.differential_[g]);
            if (!dd.is_zero())
                throw error(errc::differential_not_square_zero,
                            "d(d(" + p_.gens_[g].id + ")) is nonzero");
        }

        // Generators with nonpositive conformal weight cannot carry products:
        // their creation modes would make every weight space infinite.
        for (const auto& [key, result] : p_.products_) {
            auto [a, n, b] = key;
            for (int g : {a, b})
                if (p_.gens_[g].weight <= Rational(0))
                    throw error(errc::nonpositive_weight,
                                "generator '" + p_.gens_[g].id +
                                    "' has weight <= 0 but carries a nonzero product");
        }

        p_.support_max_.clear();
        p_.global_support_max_ = -1;
        for (const auto& [key, result] : p_.products_) {
            auto [a, n, b] = key;
            auto pk = std::make_pair(a, b);
            auto it = p_.support_max_.find(pk);
            if (it == p_.support_max_.end())
                p_.support_max_.emplace(pk, n);
            else if (n > it->second)
                it->second = n;
            if (n > p_.global_support_max_)
                p_.global_support_max_ = n;
        }

        return std::move(p_);
    }

private:
    void check_fresh_id(const std::string& id) {
        if (id.empty())
            throw error(errc::parse_error, "empty id");
        if (p_.find_generator(id) || p_.find_central(id))
            throw error(errc::duplicate_id, "id '" + id + "' declared twice");
    }

    Presentation p_;
};

}  // namespace dgv

#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgvertex/element.hpp"
#include "dgvertex/errors.hpp"
#include "dgvertex/presentation.hpp"
#include "dgvertex/rational.hpp"

namespace dgv {

namespace detail {

using json = nlohmann::ordered_json;

inline void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw error(errc::parse_error,
                        "unknown key '" + it.key() + "' in " + where);
}

/// Rational literals in files are strings "p" or "p/q"; anything else
/// (including JSON numbers) is rejected so round-trips stay bit-exact.
inline Rational rational_from_json(const json& j, const std::string& where) {
    if (!j.is_string())
        throw error(errc::parse_error,
                    "rational in " + where + " must be a string \"p\" or \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

inline long long int_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw error(errc::parse_error, where + " must be an integer");
    return j.get<long long>();
}

inline UElement element_from_json(const json& j, const PresentationBuilder& b,
                                  const std::string& where) {
    if (!j.is_array())
        throw error(errc::parse_error, where + " must be an array of terms");
    UElement u;
    for (const auto& term : j) {
        if (!term.is_object())
            throw error(errc::parse_error, "term in " + where + " must be an object");
        if (term.contains("gen")) {
            reject_unknown_keys(term, {"coeff", "dpower", "gen"}, where);
            Rational coeff = rational_from_json(term.at("coeff"), where);
            long long dpower =
                term.contains("dpower") ? int_from_json(term.at("dpower"), where) : 0;
            if (dpower < 0)
                throw error(errc::parse_error, "negative D-power in " + where);
            u.add_dterm(b.gen_index(term.at("gen").get<std::string>()),
                        static_cast<int>(dpower), coeff);
        } else if (term.contains("central")) {
            reject_unknown_keys(term, {"coeff", "central"}, where);
            Rational coeff = rational_from_json(term.at("coeff"), where);
            u.add_cterm(b.cen_index(term.at("central").get<std::string>()), coeff);
        } else {
            throw error(errc::parse_error,
                        "term in " + where + " needs a 'gen' or 'central' key");
        }
    }
    return u;
}

inline json element_to_json(const Presentation& p, const UElement& u) {
    json terms = json::array();
    for (const auto& [k, c] : u.dterms()) {
        json t;
        t["coeff"] = c.str();
        t["dpower"] = k.second;
        t["gen"] = p.generator(k.first).id;
        terms.push_back(std::move(t));
    }
    for (const auto& [k, c] : u.cterms()) {
        json t;
        t["coeff"] = c.str();
        t["central"] = p.central(k).id;
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace detail

/// Parses and validates a presentation file. Structure:
///   { "name": ..., "N": int,
///     "generators": [{"id", "degree", "weight"}...],
///     "centrals":   [{"id", "degree"}...],
///     "differential": {"<gen>": [term...]},
///     "products":   [{"left", "n", "right", "result": [term...]}...],
///     "form":       [{"left", "right", "value"}...] }   (optional)
/// with term = {"coeff": "p/q", "dpower": int, "gen": id}
///           | {"coeff": "p/q", "central": id}.
/// Unknown keys are rejected everywhere.
inline Presentation parse_presentation(const std::string& text) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
    if (!j.is_object())
        throw error(errc::parse_error, "presentation file must be a JSON object");
    detail::reject_unknown_keys(
        j, {"name", "N", "generators", "centrals", "differential", "products", "form"},
        "presentation");
    if (!j.contains("name") || !j.at("name").is_string())
        throw error(errc::parse_error, "presentation needs a string 'name'");
    if (!j.contains("N"))
        throw error(errc::parse_error, "presentation needs an integer 'N'");

    PresentationBuilder b;
    b.set_name(j.at("name").get<std::string>());
    b.set_loop_param(static_cast<int>(detail::int_from_json(j.at("N"), "N")));

    if (j.contains("generators")) {
        if (!j.at("generators").is_array())
            throw error(errc::parse_error, "'generators' must be an array");
        for (const auto& g : j.at("generators")) {
            detail::reject_unknown_keys(g, {"id", "degree", "weight"}, "generator");
            if (!g.contains("id") || !g.at("id").is_string())
                throw error(errc::parse_error, "generator needs a string 'id'");
            if (!g.contains("weight"))
                throw error(errc::parse_error,
                            "generator '" + g.at("id").get<std::string>() +
                                "' needs a conformal weight");
            b.add_generator(
                g.at("id").get<std::string>(),
                Degree{static_cast<int>(detail::int_from_json(
                    g.contains("degree") ? g.at("degree") : detail::json(0),
                    "generator degree"))},
                detail::rational_from_json(g.at("weight"), "generator weight"));
        }
    }
    if (j.contains("centrals")) {
        if (!j.at("centrals").is_array())
            throw error(errc::parse_error, "'centrals' must be an array");
        for (const auto& c : j.at("centrals")) {
            detail::reject_unknown_keys(c, {"id", "degree"}, "central");
            if (!c.contains("id") || !c.at("id").is_string())
                throw error(errc::parse_error, "central needs a string 'id'");
            b.add_central(c.at("id").get<std::string>(),
                          Degree{static_cast<int>(detail::int_from_json(
                              c.contains("degree") ? c.at("degree") : detail::json(0),
                              "central degree"))});
        }
    }
    if (j.contains("differential")) {
        if (!j.at("differential").is_object())
            throw error(errc::parse_error, "'differential' must be an object");
        for (auto it = j.at("differential").begin(); it != j.at("differential").end();
             ++it) {
            int gen = b.gen_index(it.key());
            b.set_differential(
                gen, detail::element_from_json(it.value(), b,
                                               "differential of '" + it.key() + "'"));
        }
    }
    if (j.contains("products")) {
        if (!j.at("products").is_array())
            throw error(errc::parse_error, "'products' must be an array");
        for (const auto& pr : j.at("products")) {
            detail::reject_unknown_keys(pr, {"left", "n", "right", "result"},
                                        "product");
            for (const char* key : {"left", "right"})
                if (!pr.contains(key) || !pr.at(key).is_string())
                    throw error(errc::parse_error,
                                std::string("product needs a string '") + key + "'");
            if (!pr.contains("n"))
                throw error(errc::parse_error, "product needs an integer 'n'");
            if (!pr.contains("result"))
                throw error(errc::parse_error, "product needs a 'result' element");
            b.set_product(b.gen_index(pr.at("left").get<std::string>()),
                          detail::int_from_json(pr.at("n"), "product index"),
                          b.gen_index(pr.at("right").get<std::string>()),
                          detail::element_from_json(pr.at("result"), b,
                                                    "product result"));
        }
    }
    if (j.contains("form")) {
        if (!j.at("form").is_array())
            throw error(errc::parse_error, "'form' must be an array");
        b.mark_form_present();
        for (const auto& entry : j.at("form")) {
            detail::reject_unknown_keys(entry, {"left", "right", "value"}, "form entry");
            for (const char* key : {"left", "right"})
                if (!entry.contains(key) || !entry.at(key).is_string())
                    throw error(errc::parse_error,
                                std::string("form entry needs a string '") + key + "'");
            if (!entry.contains("value"))
                throw error(errc::parse_error, "form entry needs a 'value'");
            b.set_form_entry(b.gen_index(entry.at("left").get<std::string>()),
                             b.gen_index(entry.at("right").get<std::string>()),
                             detail::rational_from_json(entry.at("value"),
                                                        "form value"));
        }
    }
    return b.build();
}

/// Canonical serialization; emitting then re-parsing is the identity, byte
/// for byte.
inline std::string emit_presentation(const Presentation& p) {
    detail::json j;
    j["name"] = p.name();
    j["N"] = p.loop_param();
    j["generators"] = detail::json::array();
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
        detail::json e;
        e["id"] = p.generator(g).id;
        e["degree"] = p.generator(g).degree.value;
        e["weight"] = p.generator(g).weight.str();
        j["generators"].push_back(std::move(e));
    }
    j["centrals"] = detail::json::array();
    for (std::size_t c = 0; c < p.num_centrals(); ++c) {
        detail::json e;
        e["id"] = p.central(c).id;
        e["degree"] = p.central(c).degree.value;
        j["centrals"].push_back(std::move(e));
    }
    j["differential"] = detail::json::object();
    for (std::size_t g = 0; g < p.num_generators(); ++g)
        if (!p.differential_of(static_cast<int>(g)).is_zero())
            j["differential"][p.generator(g).id] = detail::element_to_json(
                p, p.differential_of(static_cast<int>(g)));
    j["products"] = detail::json::array();
    for (std::size_t a = 0; a < p.num_generators(); ++a)
        for (std::size_t bg = 0; bg < p.num_generators(); ++bg) {
            long long top = p.product_support_max(static_cast<int>(a),
                                                  static_cast<int>(bg));
            for (long long n = 0; n <= top; ++n) {
                const UElement* t =
                    p.product(static_cast<int>(a), n, static_cast<int>(bg));
                if (!t)
                    continue;
                detail::json e;
                e["left"] = p.generator(a).id;
                e["n"] = n;
                e["right"] = p.generator(bg).id;
                e["result"] = detail::element_to_json(p, *t);
                j["products"].push_back(std::move(e));
            }
        }
    if (p.form()) {
        j["form"] = detail::json::array();
        for (const auto& [key, value] : *p.form()) {
            detail::json e;
            e["left"] = p.generator(key.first).id;
            e["right"] = p.generator(key.second).id;
            e["value"] = value.str();
            j["form"].push_back(std::move(e));
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace dgv

// Command-line front end for the dg vertex algebra engine: axiom checks,
// mode brackets, envelope tables, characters, cohomology, Sugawara
// verification, and locality probes over presentation files or catalog
// names.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dgvertex/dgvertex.hpp"

namespace {

using json = nlohmann::ordered_json;

struct CommonOptions {
    std::string format = "human";
    std::string window = "-5:5";
    std::string cap = "8";
    std::vector<std::string> levels;
    std::optional<int> catalog_N;
};

bool machine(const CommonOptions& o) { return o.format == "machine"; }

std::pair<long long, long long> parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw dgv::error(dgv::errc::bad_argument,
                         "window must be LO:HI, got '" + text + "'");
    try {
        long long lo = std::stoll(text.substr(0, colon));
        long long hi = std::stoll(text.substr(colon + 1));
        if (lo > hi)
            throw dgv::error(dgv::errc::bad_argument, "window has LO > HI");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw dgv::error(dgv::errc::bad_argument,
                         "window must be LO:HI, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw dgv::error(dgv::errc::bad_argument,
                         "window must be LO:HI, got '" + text + "'");
    }
}

std::map<std::string, dgv::Rational> parse_levels(
    const std::vector<std::string>& entries) {
    std::map<std::string, dgv::Rational> levels;
    for (const std::string& e : entries) {
        auto eq = e.find('=');
        if (eq == std::string::npos)
            throw dgv::error(dgv::errc::bad_argument,
                             "level must be NAME=p/q, got '" + e + "'");
        levels[e.substr(0, eq)] = dgv::Rational::parse(e.substr(eq + 1));
    }
    return levels;
}

dgv::Presentation load_presentation(const std::string& input,
                                    std::optional<int> catalog_N) {
    if (std::filesystem::exists(input)) {
        std::ifstream in(input);
        if (!in)
            throw dgv::error(dgv::errc::parse_error, "cannot read '" + input + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return dgv::parse_presentation(text.str());
    }
    if (auto p = dgv::catalog_presentation(input, catalog_N))
        return std::move(*p);
    throw dgv::error(dgv::errc::parse_error,
                     "'" + input + "' is neither a file nor a catalog name "
                     "(virasoro, ns, sl2, heisenberg, acyclic)");
}

int classify_exit(dgv::errc code) {
    return code == dgv::errc::window_exceeded ? 1 : 2;
}

void print_report(const dgv::AxiomReport& rep, const CommonOptions& opt,
                  const std::string& kind) {
    if (machine(opt)) {
        json j;
        j["type"] = kind;
        j["pass"] = rep.pass;
        j["window"] = {rep.window_lo, rep.window_hi};
        j["scope"] = rep.scope;
        j["cells_checked"] = rep.cells_checked;
        j["failures"] = json::array();
        for (const auto& f : rep.failures)
            j["failures"].push_back({{"check", f.check}, {"cell", f.cell},
                                     {"defect", f.defect}});
        j["notes"] = rep.notes;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << " (" << rep.scope << "; "
              << rep.cells_checked << " cells checked)\n";
    for (const std::string& note : rep.notes)
        std::cout << "note: " << note << "\n";
    std::size_t shown = 0;
    for (const auto& f : rep.failures) {
        if (shown == 20) {
            std::cout << "... and " << (rep.failures.size() - shown)
                      << " more failures\n";
            break;
        }
        std::cout << "defect " << f.check << " " << f.cell << ": " << f.defect
                  << "\n";
        ++shown;
    }
}

dgv::EnvelopeContext make_context(const dgv::Presentation& pres,
                                  const CommonOptions& opt,
                                  std::optional<dgv::Rational> cap_override = {}) {
    return dgv::EnvelopeContext(
        pres, parse_levels(opt.levels),
        cap_override ? *cap_override : dgv::Rational::parse(opt.cap));
}

int cmd_check(const std::string& input, const CommonOptions& opt) {
    dgv::Presentation pres = load_presentation(input, opt.catalog_N);
    auto [lo, hi] = parse_window(opt.window);
    dgv::AxiomReport rep = dgv::check_dg_lie(pres, lo, hi);
    print_report(rep, opt, "check");
    return rep.pass ? 0 : 1;
}

int cmd_bracket(const std::string& input, const std::string& u, long long m,
                const std::string& v, long long n, const CommonOptions& opt) {
    dgv::Presentation pres = load_presentation(input, opt.catalog_N);
    auto resolve = [&](const std::string& id, long long idx) {
        if (auto g = pres.find_generator(id))
            return dgv::LElement::mode(dgv::Mode{false, *g, idx});
        if (auto c = pres.find_central(id))
            return idx == -1 ? dgv::LElement::mode(dgv::Mode{true, *c, -1})
                             : dgv::LElement();
        throw dgv::error(dgv::errc::unknown_generator,
                         "unknown generator '" + id + "'");
    };
    dgv::LElement result =
        dgv::loop_bracket(pres, resolve(u, m), resolve(v, n));
    if (machine(opt)) {
        json j;
        j["type"] = "bracket";
        j["terms"] = json::array();
        for (const auto& [mode, c] : result.terms())
            j["terms"].push_back(
                {{"coeff", c.str()},
                 {"id", mode.central ? pres.central(mode.id).id
                                     : pres.generator(mode.id).id},
                 {"n", mode.n}});
        std::cout << j.dump() << "\n";
    } else {
        std::cout << dgv::to_string(pres, result) << "\n";
    }
    return 0;
}

int cmd_envelope(const std::string& input, const CommonOptions& opt) {
    dgv::Presentation pres = load_presentation(input, opt.catalog_N);
    dgv::EnvelopeContext ctx = make_context(pres, opt);
    auto basis = dgv::enumerate_basis(ctx);
    for (const auto& [w, monos] : basis) {
        if (machine(opt)) {
            json j;
            j["type"] = "envelope";
            j["weight"] = w.str();
            j["dim"] = monos.size();
            j["basis"] = json::array();
            for (const auto& mono : monos) {
                dgv::VVector v;
                v.add(mono, dgv::Rational(1));
                j["basis"].push_back(dgv::to_string(ctx, v));
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "weight " << w.str() << ": dim " << monos.size() << "\n";
            for (const auto& mono : monos) {
                dgv::VVector v;
                v.add(mono, dgv::Rational(1));
                std::cout << "  " << dgv::to_string(ctx, v) << "\n";
            }
        }
    }
    return 0;
}

int cmd_character(const std::string& input, const CommonOptions& opt) {
    dgv::Presentation pres = load_presentation(input, opt.catalog_N);
    dgv::EnvelopeContext ctx = make_context(pres, opt);
    for (const auto& row : dgv::character(ctx)) {
        if (machine(opt)) {
            json j;
            j["type"] = "character";
            j["weight"] = row.weight.str();
            j["dim"] = row.total;
            j["by_degree"] = json::object();
            for (const auto& [deg, dim] : row.dims_by_degree)
                j["by_degree"][std::to_string(deg)] = dim;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "weight " << row.weight.str() << ": dim " << row.total;
            if (!row.dims_by_degree.empty()) {
                std::cout << " (";
                bool first = true;
                for (const auto& [deg, dim] : row.dims_by_degree) {
                    if (!first)
                        std::cout << ", ";
                    std::cout << "degree " << deg << ": " << dim;
                    first = false;
                }
                std::cout << ")";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_cohomology(const std::string& input, const CommonOptions& opt) {
    dgv::Presentation pres = load_presentation(input, opt.catalog_N);
    dgv::EnvelopeContext ctx = make_context(pres, opt);
    for (const auto& row : dgv::cohomology_dims(ctx)) {
        if (machine(opt)) {
            json j;
            j["type"] = "cohomology";
            j["weight"] = row.weight.str();
            j["degree"] = row.degree;
            j["dim"] = row.dim;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "weight " << row.weight.str() << " degree " << row.degree
                      << ": dim H = " << row.dim << "\n";
        }
    }
    return 0;
}

int cmd_sugawara(const std::string& input, const std::string& k_text,
                 const CommonOptions& opt) {
    dgv::Presentation pres = load_presentation(input, opt.catalog_N);
    dgv::Rational k = dgv::Rational::parse(k_text);
    if (pres.num_centrals() != 1)
        throw dgv::error(dgv::errc::bad_argument,
                         "affine presentation must have exactly one central");
    auto [lo, hi] = parse_window(opt.window);
    dgv::Rational basis_cap = dgv::Rational::parse(opt.cap);
    long long span = std::max(std::llabs(lo), std::llabs(hi));
    dgv::Rational work_cap = basis_cap + dgv::Rational(2 * span);

    std::map<std::string, dgv::Rational> levels{{pres.central(0).id, k}};
    dgv::EnvelopeContext ctx(pres, levels, work_cap);
    dgv::SugawaraResult sug = dgv::sugawara(ctx, k);
    dgv::AxiomReport rep =
        dgv::verify_virasoro_action(ctx, sug.omega, sug.central_charge, lo, hi,
                                    basis_cap);
    if (machine(opt)) {
        json j;
        j["type"] = "sugawara";
        j["omega"] = dgv::to_string(ctx, sug.omega);
        j["h_vee"] = sug.h_vee.str();
        j["central_charge"] = sug.central_charge.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "omega = " << dgv::to_string(ctx, sug.omega) << "\n";
        std::cout << "h_vee = " << sug.h_vee.str() << "\n";
        std::cout << "central charge = " << sug.central_charge.str() << "\n";
    }
    print_report(rep, opt, "sugawara-verify");
    return rep.pass ? 0 : 1;
}

int cmd_locality(const std::string& input, const std::string& u,
                 const std::string& v, const CommonOptions& opt) {
    dgv::Presentation pres = load_presentation(input, opt.catalog_N);
    dgv::EnvelopeContext ctx = make_context(pres, opt);
    auto resolve = [&](const std::string& id) {
        auto g = pres.find_generator(id);
        if (!g)
            throw dgv::error(dgv::errc::unknown_generator,
                             "unknown generator '" + id + "'");
        return dgv::kappa(ctx, dgv::UElement::generator(*g));
    };
    dgv::VVector uv = resolve(u), vv = resolve(v);

    std::vector<dgv::VVector> probes;
    dgv::Rational probe_cap = ctx.weight_cap() / dgv::Rational(2);
    for (const auto& [w, monos] : dgv::enumerate_basis(ctx)) {
        if (w > probe_cap)
            continue;
        for (const auto& mono : monos) {
            dgv::VVector p;
            p.add(mono, dgv::Rational(1));
            probes.push_back(std::move(p));
        }
    }
    long long k_max = ctx.weight_cap().floor_ll() + 2;
    long long order = dgv::locality_order(ctx, uv, vv, probes, k_max);
    if (machine(opt)) {
        json j;
        j["type"] = "locality";
        j["order"] = order;
        j["probes"] = probes.size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "locality order " << order << " (" << probes.size()
                  << " probes of weight <= " << probe_cap.str() << ")\n";
    }
    return 0;
}

int cmd_catalog(const std::string& name, const std::string& out,
                const CommonOptions& opt) {
    if (name.empty()) {
        std::cout << "virasoro (N=1)\nns (N=1)\nsl2 (N=0)\nheisenberg (N=0)\n"
                     "acyclic (N=0)\n";
        return 0;
    }
    auto p = dgv::catalog_presentation(name, opt.catalog_N);
    if (!p)
        throw dgv::error(dgv::errc::bad_argument,
                         "unknown catalog name '" + name + "'");
    std::string text = dgv::emit_presentation(*p);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f)
            throw dgv::error(dgv::errc::bad_argument, "cannot write '" + out + "'");
        f << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in dg vertex Lie algebras and their "
                 "enveloping dg vertex algebras"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string input, gen_u, gen_v, k_text, out_path, catalog_name;
    long long mode_m = 0, mode_n = 0;
    int catalog_N = 0;

    auto add_common = [&](CLI::App* sub, bool with_levels, bool with_cap,
                          bool with_window) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"human", "machine"}))
            ->capture_default_str();
        if (with_levels)
            sub->add_option("--level", opt.levels,
                            "central level NAME=p/q (repeatable)");
        if (with_cap)
            sub->add_option("--cap", opt.cap, "weight cap (rational)")
                ->capture_default_str();
        if (with_window)
            sub->add_option("--window", opt.window, "mode window LO:HI")
                ->capture_default_str();
    };

    int rc = 0;

    auto* check = app.add_subcommand("check", "verify the dg Lie / vertex Lie axioms");
    check->add_option("input", input, "presentation file or catalog name")->required();
    add_common(check, false, false, true);
    check->callback([&] { rc = cmd_check(input, opt); });

    auto* bracket = app.add_subcommand("bracket", "mode bracket [u_m, v_n]");
    bracket->add_option("input", input)->required();
    bracket->add_option("u", gen_u, "left generator")->required();
    bracket->add_option("m", mode_m, "left mode index")->required();
    bracket->add_option("v", gen_v, "right generator")->required();
    bracket->add_option("n", mode_n, "right mode index")->required();
    add_common(bracket, false, false, false);
    bracket->callback(
        [&] { rc = cmd_bracket(input, gen_u, mode_m, gen_v, mode_n, opt); });

    auto* envelope = app.add_subcommand("envelope", "PBW basis of the envelope");
    envelope->add_option("input", input)->required();
    add_common(envelope, true, true, false);
    envelope->callback([&] { rc = cmd_envelope(input, opt); });

    auto* character = app.add_subcommand("character", "graded dimensions per weight");
    character->add_option("input", input)->required();
    add_common(character, true, true, false);
    character->callback([&] { rc = cmd_character(input, opt); });

    auto* cohomology = app.add_subcommand("cohomology", "cohomology dimensions");
    cohomology->add_option("input", input)->required();
    add_common(cohomology, true, true, false);
    cohomology->callback([&] { rc = cmd_cohomology(input, opt); });

    auto* sugawara = app.add_subcommand(
        "sugawara", "Sugawara conformal vector and Virasoro action");
    sugawara->add_option("input", input)->required();
    sugawara->add_option("--k", k_text, "level (rational)")->required();
    add_common(sugawara, false, true, true);
    sugawara->callback([&] { rc = cmd_sugawara(input, k_text, opt); });

    auto* locality = app.add_subcommand("locality", "measured locality order");
    locality->add_option("input", input)->required();
    locality->add_option("u", gen_u, "left generator")->required();
    locality->add_option("v", gen_v, "right generator")->required();
    add_common(locality, true, true, false);
    locality->callback([&] { rc = cmd_locality(input, gen_u, gen_v, opt); });

    auto* catalog = app.add_subcommand("catalog", "emit a catalog presentation file");
    catalog->add_option("name", catalog_name, "catalog name (empty lists names)");
    catalog->add_option("--N", catalog_N, "loop parameter override");
    catalog->add_option("--out", out_path, "output file (default stdout)");
    add_common(catalog, false, false, false);
    catalog->callback([&] {
        if (catalog->count("--N"))
            opt.catalog_N = catalog_N;
        rc = cmd_catalog(catalog_name, out_path, opt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dgv::error& e) {
        if (machine(opt)) {
            json j;
            j["type"] = "error";
            j["code"] = dgv::errc_name(e.code());
            j["message"] = e.what();
            std::cerr << j.dump() << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
            if (e.code() == dgv::errc::weight_overflow)
                std::cerr << "hint: raise --cap\n";
        }
        return classify_exit(e.code());
    }
    return rc;
}

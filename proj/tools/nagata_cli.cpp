// Command-line front end.
//
// Exit status: 0 on success, 1 when the answer is a negative verdict
// (analyze/classify: not an automorphism; decompose: no representative;
// oracle: spans differ), 2 on usage, parse, or precondition errors.

#include "nagata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nagata::Poly2;
using nagata::Poly3;
using nagata::PolyEndo;
using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <std::size_t N>
std::string str(const nagata::Polynomial<N>& p) {
    return nagata::print_canonical(p);
}

Json endo_json(const PolyEndo& e) { return Json{{"f", str(e.f)}, {"g", str(e.g)}, {"h", str(e.h)}}; }

Json optional_json(const std::optional<Poly2>& p) { return p ? Json(str(*p)) : Json(nullptr); }

// "(f, g, h)" or "f, g, h"; commas inside parentheses do not split.
PolyEndo parse_triple(const std::string& text) {
    std::string body = text;
    auto first = body.find_first_not_of(" \t");
    auto last = body.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty endomorphism");
    body = body.substr(first, last - first + 1);
    if ((body.front() == '(' && body.back() == ')') || (body.front() == '[' && body.back() == ']')) {
        // Only strip if the outer pair encloses the whole triple.
        int depth = 0;
        bool encloses = true;
        for (std::size_t i = 0; i + 1 < body.size(); ++i) {
            if (body[i] == '(' || body[i] == '[') ++depth;
            if (body[i] == ')' || body[i] == ']') --depth;
            if (depth == 0) {
                encloses = false;
                break;
            }
        }
        if (encloses) body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> parts(1);
    int depth = 0;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.emplace_back();
            continue;
        }
        parts.back() += c;
    }
    if (parts.size() != 3)
        throw UsageError("endomorphism needs three comma-separated components, got " + std::to_string(parts.size()));
    std::array<Poly3, 3> comps;
    for (std::size_t i = 0; i < 3; ++i) {
        try {
            comps[i] = nagata::parse_poly3(parts[i]);
        } catch (const nagata::ParseError& e) {
            throw nagata::ParseError("component " + std::to_string(i + 1) + ": " + e.what(), e.position(),
                                     e.expected());
        }
    }
    return {comps[0], comps[1], comps[2]};
}

Json analyze(const Poly3& phi) {
    const auto report = nagata::jacobian_report(phi);
    const auto witness = nagata::is_automorphism(phi);
    Json out;
    out["phi"] = str(phi);
    out["residual"] = str(report.residual);
    out["jacobian_determinant"] = str(report.determinant);
    out["automorphism"] = witness.is_automorphism;
    out["representative"] = optional_json(witness.representative);
    out["classification"] = std::string(nagata::to_string(nagata::classify(phi).verdict));
    if (witness.is_automorphism) {
        out["inverse"] = endo_json(*witness.inverse);
        out["lojasiewicz_exponent"] = nagata::to_string(nagata::loj_exponent(*witness.representative).exponent);
    } else {
        out["inverse"] = nullptr;
        out["lojasiewicz_exponent"] = nullptr;
    }
    return out;
}

Json classify_json(const Poly3& phi) {
    const auto c = nagata::classify(phi);
    Json out;
    out["phi"] = str(phi);
    out["verdict"] = std::string(nagata::to_string(c.verdict));
    out["residual"] = str(c.residual);
    out["representative"] = optional_json(c.representative);
    out["weighted_leading_form"] = optional_json(c.weighted_leading);
    out["t1_derivative"] = optional_json(c.t1_derivative);
    if (c.tame)
        out["tame_factorization"] = Json{{"first", endo_json(c.tame->first)}, {"second", endo_json(c.tame->second)}};
    else
        out["tame_factorization"] = nullptr;
    return out;
}

Json loj_json(const nagata::LojReport& r) {
    Json out;
    out["phi_degree"] = r.phi_degree.is_neg_infinity() ? Json("-inf") : Json(r.phi_degree.value());
    out["inverse_degree"] = r.inverse_degree;
    out["exponent"] = nagata::to_string(r.exponent);
    return out;
}

void render_text(std::ostream& os, const Json& j, int indent) {
    const std::string pad(std::size_t(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& key = it.key();
        const auto& v = it.value();
        if (indent == 0 && (key == "schema" || key == "command")) continue;
        if (v.is_object()) {
            os << pad << key << ":\n";
            render_text(os, v, indent + 1);
        } else if (v.is_array()) {
            os << pad << key << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    os << pad << "  -\n";
                    render_text(os, e, indent + 2);
                } else {
                    os << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
                }
            }
        } else if (v.is_string()) {
            os << pad << key << ": " << v.get<std::string>() << "\n";
        } else if (v.is_boolean()) {
            os << pad << key << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
        } else if (v.is_null()) {
            os << pad << key << ": absent\n";
        } else {
            os << pad << key << ": " << v.dump() << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of Nagata-type polynomial endomorphisms of Q[x,y,z]"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit machine-readable JSON (schema 1)");

    std::string phi_text, p_text, ps_text, a_text, b_text;
    std::uint32_t degree = 0;
    std::uint32_t bound = nagata::pde::default_oracle_bound;
    std::uint32_t dvmax = 4;
    std::uint64_t seed = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "Residual, Jacobian determinant, automorphy, representative");
    analyze_cmd->add_option("PHI", phi_text, "phi in x, y, z")->required();
    auto* invert_cmd = app.add_subcommand("invert", "Inverse of the Nagata map of p(x*z + y^2, z)");
    invert_cmd->add_option("P", p_text, "p in t1, t2")->required();
    auto* compose_cmd = app.add_subcommand("compose", "A(B): substitute B into A; each given as \"f, g, h\"");
    compose_cmd->add_option("A", a_text)->required();
    compose_cmd->add_option("B", b_text)->required();
    auto* classify_cmd = app.add_subcommand("classify", "Wild/tame classification");
    classify_cmd->add_option("PHI", phi_text)->required();
    auto* basis_cmd = app.add_subcommand("basis", "Homogeneous PDE solutions of degree D");
    basis_cmd->add_option("D", degree)->required();
    auto* oracle_cmd = app.add_subcommand("oracle", "Kernel of the residual map in degree D, checked against basis");
    oracle_cmd->add_option("D", degree)->required();
    oracle_cmd->add_option("--bound", bound, "Largest degree accepted")->capture_default_str();
    auto* loj_cmd = app.add_subcommand("loj", "Lojasiewicz exponent; with P_S, compare against the deformation");
    loj_cmd->add_option("P", p_text)->required();
    loj_cmd->add_option("P_S", ps_text);
    auto* decompose_cmd = app.add_subcommand("decompose", "Recover p with phi = p(x*z + y^2, z)");
    decompose_cmd->add_option("PHI", phi_text)->required();
    auto* random_cmd = app.add_subcommand("random", "Reproducible random p and its analysis");
    random_cmd->add_option("--dvmax", dvmax, "Bound on the (2,1)-weighted degree")->capture_default_str();
    random_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Json out;
    out["schema"] = kSchemaVersion;
    int status = 0;
    try {
        if (analyze_cmd->parsed()) {
            out["command"] = "analyze";
            out.update(analyze(nagata::parse_poly3(phi_text)));
            status = out["automorphism"].get<bool>() ? 0 : 1;
        } else if (invert_cmd->parsed()) {
            out["command"] = "invert";
            const auto p = nagata::parse_poly2(p_text);
            out["p"] = str(p);
            out["phi"] = str(nagata::expand_bivariate(p));
            out["inverse"] = endo_json(nagata::inverse_nagata(p));
        } else if (compose_cmd->parsed()) {
            out["command"] = "compose";
            const auto a = parse_triple(a_text), b = parse_triple(b_text);
            out["outer"] = endo_json(a);
            out["inner"] = endo_json(b);
            const auto c = nagata::compose(a, b);
            out["result"] = endo_json(c);
            out["identity"] = c.is_identity();
        } else if (classify_cmd->parsed()) {
            out["command"] = "classify";
            out.update(classify_json(nagata::parse_poly3(phi_text)));
            status = out["verdict"] == "NotAutomorphism" ? 1 : 0;
        } else if (basis_cmd->parsed()) {
            out["command"] = "basis";
            out["degree"] = degree;
            Json elems = Json::array();
            for (const auto& e : nagata::pde::solution_basis(degree).elements) elems.push_back(str(e));
            out["elements"] = elems;
        } else if (oracle_cmd->parsed()) {
            out["command"] = "oracle";
            const auto r = nagata::pde::kernel_oracle(degree, bound);
            out["degree"] = degree;
            out["dimension"] = r.dimension;
            Json kb = Json::array();
            for (const auto& v : r.kernel_basis) kb.push_back(str(nagata::pde::assemble(v, r.monomials)));
            out["kernel_basis"] = kb;
            const bool ok = nagata::pde::verify_basis_against_oracle(degree, bound);
            out["matches_basis"] = ok;
            status = ok ? 0 : 1;
        } else if (loj_cmd->parsed()) {
            out["command"] = "loj";
            const auto p = nagata::parse_poly2(p_text);
            out["p"] = str(p);
            if (ps_text.empty()) {
                out.update(loj_json(nagata::loj_exponent(p)));
            } else {
                const auto ps = nagata::parse_poly2(ps_text);
                const auto c = nagata::deformation_compare(p, ps);
                out["p_s"] = str(ps);
                out["base"] = loj_json(c.base);
                out["deformed"] = loj_json(c.deformed);
                out["order"] = c.order == nagata::DeformationOrder::Equal ? "equal" : "smaller";
            }
        } else if (decompose_cmd->parsed()) {
            out["command"] = "decompose";
            const auto phi = nagata::parse_poly3(phi_text);
            const auto p = nagata::decompose(phi);
            out["phi"] = str(phi);
            out["representative"] = optional_json(p);
            status = p ? 0 : 1;
        } else if (random_cmd->parsed()) {
            out["command"] = "random";
            nagata::Rng rng(seed);
            const auto p = nagata::random_bivariate(rng, dvmax);
            out["seed"] = seed;
            out["dvmax"] = dvmax;
            out["p"] = str(p);
            out["analysis"] = analyze(nagata::expand_bivariate(p));
        }
    } catch (const nagata::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (json)
        std::cout << out.dump(2) << "\n";
    else
        render_text(std::cout, out, 0);
    return status;
}

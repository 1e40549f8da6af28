#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetagraph/basilica.hpp"
#include "zetagraph/covering.hpp"
#include "zetagraph/graphspec.hpp"
#include "zetagraph/products.hpp"
#include "zetagraph/verify.hpp"
#include "zetagraph/zeta.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitResourceCap = 4;

int level_cap() {
    if (const char* env = std::getenv("ZETAGRAPH_CAP")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return zg::kDefaultLevelCap;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

ordered_json graph_json_object(const zg::RotationGraph& g) {
    return ordered_json::parse(zg::graph_to_json(g));
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct SpecPair {
    std::string kind;  // gamma | zigzag | identity
    int cover_level = 0;
    int base_level = 0;
};

SpecPair parse_cover_pair(const std::string& cover, const std::string& base) {
    if (cover == base) return {"identity", 0, 0};
    auto split = [](const std::string& s) -> std::pair<std::string, int> {
        size_t c = s.find(':');
        if (c == std::string::npos) throw CLI::ValidationError("bad spec " + s);
        return {s.substr(0, c), std::atoi(s.c_str() + c + 1)};
    };
    auto [ck, cn] = split(cover);
    auto [bk, bn] = split(base);
    if (ck != bk || (ck != "gamma" && ck != "zigzag") || cn <= bn || bn < 1)
        throw CLI::ValidationError("cover/base must be gamma:N/gamma:R or zigzag:N/zigzag:R "
                                   "with N > R >= 1, or two identical specs");
    return {ck, cn, bn};
}

zg::CoverSpec build_cover(const SpecPair& p, const std::string& cover_spec, int cap) {
    if (p.kind == "gamma") return zg::make_schreier_cover(p.cover_level, p.base_level, {}, cap);
    if (p.kind == "zigzag") return zg::make_zigzag_cover(p.cover_level, p.base_level, {}, cap);
    return zg::make_identity_cover(zg::parse_graph_spec(cover_spec, cap));
}

int cmd_schreier(int level, const std::string& format, const std::string& out) {
    zg::RotationGraph g = zg::build_schreier(level, level_cap());
    write_output(format == "dot" ? zg::export_dot(g) : zg::graph_to_json(g), out);
    return kExitOk;
}

int cmd_product(const std::string& kind, int n, std::optional<int> r,
                const std::string& format, const std::string& out) {
    const int cap = level_cap();
    zg::RotationGraph g;
    ordered_json cert;
    bool verified = true;
    if (kind == "grp") {
        if (!r) throw CLI::ValidationError("--kind grp needs --r");
        g = zg::generalized_replacement(n, *r, "", cap);
        zg::RotationGraph target = zg::build_schreier(n + *r, cap);
        verified = zg::verify_isomorphism(g, target, zg::concat_iso_map(g),
                                          /*respect_ports=*/true) == zg::IsoStatus::ok;
        cert = {{"isomorphic_to", "gamma:" + std::to_string(n + *r)},
                {"map", "f(v,u)=uv"},
                {"port_respecting", true},
                {"verified", verified}};
    } else {
        g = zg::zigzag_c4(n, cap);
        verified = zg::double_rotation_check(g);
        cert = {{"partner", "c4"}, {"involution", verified}};
    }
    if (format == "dot") {
        std::string text = zg::export_dot(g);
        text += "// certificate: " + cert.dump() + "\n";
        write_output(text, out);
    } else {
        ordered_json j{{"kind", kind}, {"n", n}};
        if (r) j["r"] = *r;
        j["graph"] = graph_json_object(g);
        j["certificate"] = cert;
        write_output(dump(j), out);
    }
    return verified ? kExitOk : kExitVerification;
}

int cmd_zeta(const std::string& graph_spec, const std::string& artin_pair,
             bool check_factorization, bool check_divisibility, const std::string& out) {
    const int cap = level_cap();
    bool all_ok = true;
    ordered_json j;
    if (!graph_spec.empty()) {
        zg::RotationGraph g = zg::parse_graph_spec(graph_spec, cap);
        zg::IntPoly z = zg::ihara_reciprocal(g);
        j["graph"] = graph_spec;
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["reciprocal"] = z.decimal_coeffs();
        if (2 * g.edge_count() <= 256) {
            bool agree = (zg::nonbacktracking_reciprocal(g) == z);
            j["oracle_agrees"] = agree;
            all_ok = all_ok && agree;
        } else {
            j["oracle_agrees"] = nullptr;
        }
    } else {
        size_t slash = artin_pair.find('/');
        if (slash == std::string::npos)
            throw CLI::ValidationError("--artin wants <cover spec>/<base spec>");
        std::string cover_spec = artin_pair.substr(0, slash);
        std::string base_spec = artin_pair.substr(slash + 1);
        SpecPair pair = parse_cover_pair(cover_spec, base_spec);
        zg::CoverSpec c = build_cover(pair, cover_spec, cap);
        j["cover"] = cover_spec;
        j["base"] = base_spec;
        ordered_json chars = ordered_json::array();
        zg::FiniteGroup group = zg::deck_group(c);
        for (const zg::Character& chi : zg::all_characters(group)) {
            zg::IntPoly L = zg::artin_reciprocal(c, chi);
            chars.push_back({{"character", chi.is_trivial() ? "trivial" : "sign"},
                             {"reciprocal", L.decimal_coeffs()}});
        }
        j["l_functions"] = std::move(chars);
        if (check_factorization) {
            bool ok = zg::factorization_check(c);
            j["factorization"] = ok;
            all_ok = all_ok && ok;
        }
        if (check_divisibility) {
            zg::DivisibilityResult d = zg::divisibility_check(
                zg::ihara_reciprocal(c.base()), zg::ihara_reciprocal(c.cover()));
            j["divisibility"] = {{"divides", d.divisible}};
            if (d.divisible)
                j["divisibility"]["quotient"] = d.quotient.decimal_coeffs();
            else
                j["divisibility"]["remainder"] = d.remainder.decimal_coeffs();
            all_ok = all_ok && d.divisible;
        }
    }
    write_output(dump(j), out);
    return all_ok ? kExitOk : kExitVerification;
}

int cmd_cover(const std::string& cover_spec, const std::string& base_spec,
              const std::string& out) {
    const int cap = level_cap();
    SpecPair pair = parse_cover_pair(cover_spec, base_spec);
    zg::CoverSpec c = build_cover(pair, cover_spec, cap);
    if (!zg::verify_covering(c)) {
        std::cerr << "not an unramified covering\n";
        return kExitVerification;
    }
    ordered_json j{{"cover", cover_spec}, {"base", base_spec}};
    j["sheets"] = c.sheet_keys();
    ordered_json frob = ordered_json::object();
    std::vector<zg::Permutation> gens;
    for (const auto& [name, p] : zg::frobenius_permutations(c)) {
        frob[name] = p.cycle_string();
        gens.push_back(p);
    }
    j["frobenius"] = std::move(frob);
    zg::MonodromyOrder m = zg::monodromy_order(gens);
    j["monodromy_order"] = m.order;
    j["monodromy_exact"] = m.exact;
    j["normal"] = zg::is_normal(c);
    ordered_json conn = ordered_json::object();
    for (const auto& sheet : c.sheet_keys()) conn[sheet] = zg::sheet_connectivity(c, sheet);
    j["sheet_connectivity"] = std::move(conn);
    write_output(dump(j), out);
    return kExitOk;
}

int cmd_verify_paper(const std::string& only) {
    auto results = zg::run_reference_checks(only);
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
    if (results.empty()) {
        std::cerr << "no checks match filter\n";
        return kExitUsage;
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schreier-graph, graph-product, covering and zeta toolkit"};
    app.require_subcommand(1);

    auto* schreier = app.add_subcommand("schreier", "Emit a Schreier graph");
    int level = 0;
    std::string format = "json", out;
    schreier->add_option("--level", level, "word length")->required()->check(CLI::PositiveNumber);
    schreier->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    schreier->add_option("--out", out, "output path (default stdout)");

    auto* product = app.add_subcommand("product", "Build a graph product with certificate");
    std::string kind;
    int pn = 0;
    std::optional<int> pr;
    std::string pformat = "json", pout, partner = "c4";
    product->add_option("--kind", kind)->required()->check(CLI::IsMember({"grp", "zigzag"}));
    product->add_option("--n", pn)->required()->check(CLI::PositiveNumber);
    product->add_option("--r", pr)->check(CLI::PositiveNumber);
    product->add_option("--partner", partner)->check(CLI::IsMember({"c4"}));
    product->add_option("--format", pformat)->check(CLI::IsMember({"dot", "json"}));
    product->add_option("--out", pout);

    auto* zeta = app.add_subcommand("zeta", "Zeta and L-function reciprocals");
    std::string zgraph, zartin, zout;
    bool zfact = false, zdiv = false;
    auto* g_opt = zeta->add_option("--graph", zgraph, "graph spec");
    auto* a_opt = zeta->add_option("--artin", zartin, "<cover spec>/<base spec>");
    g_opt->excludes(a_opt);
    zeta->add_flag("--check-factorization", zfact);
    zeta->add_flag("--check-divisibility", zdiv);
    zeta->add_option("--out", zout);

    auto* cover = app.add_subcommand("cover", "Covering analysis report");
    std::string cspec, bspec, cout_path;
    bool creport = false;
    cover->add_option("--cover", cspec)->required();
    cover->add_option("--base", bspec)->required();
    cover->add_flag("--report", creport, "accepted for compatibility; reports are always emitted");
    cover->add_option("--out", cout_path);

    auto* verify = app.add_subcommand("verify-paper", "Run the built-in reference checks");
    std::string only;
    verify->add_option("--only", only, "substring filter on check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (schreier->parsed()) return cmd_schreier(level, format, out);
        if (product->parsed()) return cmd_product(kind, pn, pr, pformat, pout);
        if (zeta->parsed()) {
            if (zgraph.empty() == zartin.empty()) {
                std::cerr << "zeta needs exactly one of --graph / --artin\n";
                return kExitUsage;
            }
            return cmd_zeta(zgraph, zartin, zfact, zdiv, zout);
        }
        if (cover->parsed()) return cmd_cover(cspec, bspec, cout_path);
        if (verify->parsed()) return cmd_verify_paper(only);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::length_error& e) {
        std::cerr << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "riordan/expr.hpp"
#include "riordan/hopf.hpp"
#include "riordan/lie.hpp"
#include "riordan/oeis.hpp"
#include "riordan/render.hpp"
#include "riordan/riordan_group.hpp"

namespace {

using namespace riordan;

// Exit-code contract: parse errors (command line, expression syntax,
// malformed machine responses) exit 2, validation errors 3, mathematical
// domain errors 4, network errors 5.
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMathDomain = 4;
constexpr int kExitNetwork = 5;

struct Config {
    int order = 16;
    int hopf_degree = kDefaultHopfDegree;
    std::string format = "table";
    std::string oeis_cache_dir;
    bool offline = false;

    OutputFormat fmt() const { return parse_format(format); }
};

std::string default_cache_dir() {
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/riordan/oeis";
    return "oeis-cache";
}

Family parse_family(const std::string& name) {
    if (name == "H0" || name == "h0") return Family::H0;
    if (name == "H1" || name == "h1") return Family::H1;
    throw ValidationError("unknown family '" + name + "' (expected H0 or H1)");
}

/// Generator tokens look like b3 (H0) or a2 (H1); the letter must agree
/// with the requested family.
GradedPoly parse_generator(Family fam, const std::string& token) {
    if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b'))
        throw ValidationError("generator must look like a2 or b3, got '" + token + "'");
    const Family implied = token[0] == 'b' ? Family::H0 : Family::H1;
    if (implied != fam)
        throw ValidationError("generator '" + token + "' belongs to " + family_name(implied) +
                              ", not " + family_name(fam));
    int index = 0;
    try {
        size_t used = 0;
        index = std::stoi(token.substr(1), &used);
        if (used != token.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw ValidationError("bad generator index in '" + token + "'");
    }
    if (index < 1) throw ValidationError("generator index must be >= 1");
    return GradedPoly::generator(fam, index);
}

RiordanPair pair_from_args(const Config& cfg, const std::string& g_text,
                           const std::string& phi_text) {
    return RiordanPair(eval_expr(g_text, cfg.order), eval_expr(phi_text, cfg.order));
}

void cmd_series_eval(const Config& cfg, const std::string& text) {
    std::cout << render_series(eval_expr(text, cfg.order), cfg.fmt());
}

void cmd_riordan_matrix(const Config& cfg, const std::string& g, const std::string& phi) {
    std::cout << render_matrix(matrix(pair_from_args(cfg, g, phi)), cfg.fmt());
}

void cmd_riordan_mul(const Config& cfg, const std::string& g1, const std::string& phi1,
                     const std::string& g2, const std::string& phi2) {
    RiordanPair product = group_mul(pair_from_args(cfg, g1, phi1), pair_from_args(cfg, g2, phi2));
    std::cout << render_pair(product, cfg.fmt());
}

void cmd_riordan_inv(const Config& cfg, const std::string& g, const std::string& phi) {
    std::cout << render_pair(group_inverse(pair_from_args(cfg, g, phi)), cfg.fmt());
}

void cmd_lie_exp(const Config& cfg, const std::string& phi_text, const std::string& psi_text) {
    Series<Rat> phi = eval_expr(phi_text, cfg.order);
    Series<Rat> psi = eval_expr(psi_text, cfg.order);
    LieElement e(phi.coeffs(), psi.coeffs(), cfg.order);
    std::cout << render_matrix(exp_nilpotent(lie_element_matrix(e)), cfg.fmt());
}

void cmd_lie_log(const Config& cfg, const std::string& g, const std::string& phi) {
    std::cout << render_matrix(log_unipotent(matrix(pair_from_args(cfg, g, phi))), cfg.fmt());
}

void cmd_hopf_delta(const Config& cfg, const std::string& family, const std::string& generator) {
    Family fam = parse_family(family);
    GradedPoly g = parse_generator(fam, generator);
    TensorPoly d = fam == Family::H0 ? delta0(g, cfg.hopf_degree) : delta1(g, cfg.hopf_degree);
    std::cout << render_tensor_poly(d, cfg.fmt());
}

void cmd_hopf_antipode(const Config& cfg, const std::string& family, const std::string& generator) {
    Family fam = parse_family(family);
    GradedPoly g = parse_generator(fam, generator);
    GradedPoly s = fam == Family::H0 ? antipode0(g, cfg.hopf_degree) : antipode1(g, cfg.hopf_degree);
    std::cout << render_graded_poly(s, cfg.fmt());
}

int cmd_hopf_verify(const Config& cfg, const std::string& family, int degree) {
    std::vector<Family> families;
    if (family == "both") families = {Family::H0, Family::H1};
    else families = {parse_family(family)};
    if (degree <= 0) degree = cfg.hopf_degree;

    bool all_pass = true;
    nlohmann::json jout = nlohmann::json::array();
    for (Family fam : families) {
        struct Row {
            const char* axiom;
            Verdict (*check)(Family, int);
        };
        const Row rows[] = {{"coassociativity", check_coassoc},
                            {"counit", check_counit},
                            {"antipode", check_antipode}};
        for (const Row& row : rows) {
            for (int d = 1; d <= degree; ++d) {
                Verdict v = row.check(fam, d);
                all_pass = all_pass && v.pass;
                if (cfg.fmt() == OutputFormat::Json) {
                    jout.push_back({{"family", family_name(fam)},
                                    {"axiom", row.axiom},
                                    {"degree", d},
                                    {"pass", v.pass},
                                    {"detail", v.detail}});
                } else {
                    std::cout << family_name(fam) << " " << row.axiom << " degree " << d << ": "
                              << (v.pass ? "PASS" : "FAIL " + v.detail) << "\n";
                }
            }
        }
        CocommVerdict c = is_cocommutative(fam, degree);
        if (cfg.fmt() == OutputFormat::Json) {
            jout.push_back({{"family", family_name(fam)},
                            {"axiom", "cocommutative"},
                            {"degree", degree},
                            {"pass", c.cocommutative},
                            {"detail", c.detail}});
        } else {
            std::cout << family_name(fam) << " cocommutative through degree " << degree << ": "
                      << (c.cocommutative
                              ? "yes"
                              : "no (witness at degree " + std::to_string(c.witness_degree) + ")")
                      << "\n";
        }
    }
    if (cfg.fmt() == OutputFormat::Json) std::cout << jout.dump() << "\n";
    return all_pass ? 0 : 1;
}

void cmd_oeis_lookup(const Config& cfg, const std::vector<long long>& terms) {
    OeisConfig ocfg{std::filesystem::path(cfg.oeis_cache_dir), cfg.offline};
    OeisResult r = oeis_lookup(terms, ocfg);
    switch (cfg.fmt()) {
    case OutputFormat::Json: {
        nlohmann::json matches = nlohmann::json::array();
        for (const OeisEntry& e : r.matches)
            matches.push_back({{"a_number", e.a_number()}, {"number", e.number}, {"name", e.name}});
        std::cout << nlohmann::json{{"query", oeis_normalized_query(terms)},
                                    {"matches", std::move(matches)},
                                    {"from_cache", r.from_cache}}
                         .dump()
                  << "\n";
        break;
    }
    case OutputFormat::Csv:
        for (const OeisEntry& e : r.matches) {
            std::string quoted = e.name;
            size_t at = 0;
            while ((at = quoted.find('"', at)) != std::string::npos) {
                quoted.insert(at, 1, '"');
                at += 2;
            }
            std::cout << e.a_number() << ",\"" << quoted << "\"\n";
        }
        break;
    case OutputFormat::Table:
        for (const OeisEntry& e : r.matches) std::cout << e.a_number() << "  " << e.name << "\n";
        break;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in truncated power series and the Riordan group"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    cfg.oeis_cache_dir = default_cache_dir();
    app.add_option("--order", cfg.order, "Truncation order N (coefficients of x^0..x^N)")
        ->envname("RIORDAN_ORDER")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format: table, csv or json")
        ->envname("RIORDAN_FORMAT")
        ->capture_default_str();
    app.add_option("--hopf-degree", cfg.hopf_degree, "Working degree for Hopf operations")
        ->envname("RIORDAN_HOPF_DEGREE")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--oeis-cache-dir", cfg.oeis_cache_dir, "OEIS response cache directory")
        ->envname("RIORDAN_OEIS_CACHE_DIR");
    app.add_flag("--offline", cfg.offline, "Serve OEIS lookups from the cache only")
        ->envname("RIORDAN_OFFLINE");

    // series eval
    auto* series = app.add_subcommand("series", "Series-level operations");
    series->require_subcommand(1);
    series->fallthrough();
    auto* series_eval = series->add_subcommand("eval", "Evaluate a series expression");
    series_eval->fallthrough();
    std::string eval_text;
    series_eval->add_option("expr", eval_text, "Series expression")->required();

    // riordan matrix|mul|inv
    auto* riordan_cmd = app.add_subcommand("riordan", "Riordan pair operations");
    riordan_cmd->require_subcommand(1);
    riordan_cmd->fallthrough();
    std::string rg1, rphi1, rg2, rphi2;
    auto* rmatrix = riordan_cmd->add_subcommand("matrix", "Matrix realization of (g, phi)");
    rmatrix->fallthrough();
    rmatrix->add_option("g", rg1)->required();
    rmatrix->add_option("phi", rphi1)->required();
    auto* rmul = riordan_cmd->add_subcommand("mul", "Group product of two pairs");
    rmul->fallthrough();
    rmul->add_option("g1", rg1)->required();
    rmul->add_option("phi1", rphi1)->required();
    rmul->add_option("g2", rg2)->required();
    rmul->add_option("phi2", rphi2)->required();
    auto* rinv = riordan_cmd->add_subcommand("inv", "Group inverse of a pair");
    rinv->fallthrough();
    rinv->add_option("g", rg1)->required();
    rinv->add_option("phi", rphi1)->required();

    // lie exp|log
    auto* lie = app.add_subcommand("lie", "Lie algebra of the monic Riordan group");
    lie->require_subcommand(1);
    lie->fallthrough();
    std::string lphi, lpsi;
    auto* lexp = lie->add_subcommand("exp", "exp of the Lie element u_phi + d_psi");
    lexp->fallthrough();
    lexp->add_option("phi", lphi, "Series with phi(0) = 0")->required();
    lexp->add_option("psi", lpsi, "Series with psi(0) = 0")->required();
    auto* llog = lie->add_subcommand("log", "log of the matrix of a monic pair (g, phi)");
    llog->fallthrough();
    llog->add_option("g", lphi)->required();
    llog->add_option("phi", lpsi)->required();

    // hopf delta|antipode|verify
    auto* hopf = app.add_subcommand("hopf", "Coordinate-ring Hopf algebras H0 and H1");
    hopf->require_subcommand(1);
    hopf->fallthrough();
    std::string hfamily, hgen;
    auto* hdelta = hopf->add_subcommand("delta", "Coproduct of a generator");
    hdelta->fallthrough();
    hdelta->add_option("family", hfamily, "H0 or H1")->required();
    hdelta->add_option("generator", hgen, "e.g. b2 or a3")->required();
    auto* hanti = hopf->add_subcommand("antipode", "Antipode of a generator");
    hanti->fallthrough();
    hanti->add_option("family", hfamily, "H0 or H1")->required();
    hanti->add_option("generator", hgen, "e.g. b2 or a3")->required();
    auto* hverify = hopf->add_subcommand("verify", "Axiom sweep");
    hverify->fallthrough();
    std::string vfamily = "both";
    int vdegree = 0;
    hverify->add_option("--family", vfamily, "H0, H1 or both")->capture_default_str();
    hverify->add_option("--degree", vdegree, "Sweep degree (defaults to --hopf-degree)");

    // oeis lookup
    auto* oeis = app.add_subcommand("oeis", "OEIS sequence identification");
    oeis->require_subcommand(1);
    oeis->fallthrough();
    auto* olookup = oeis->add_subcommand("lookup", "Search a sequence prefix");
    olookup->fallthrough();
    std::vector<long long> terms;
    olookup->add_option("terms", terms, "At least 4 integer terms")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (series_eval->parsed()) cmd_series_eval(cfg, eval_text);
        else if (rmatrix->parsed()) cmd_riordan_matrix(cfg, rg1, rphi1);
        else if (rmul->parsed()) cmd_riordan_mul(cfg, rg1, rphi1, rg2, rphi2);
        else if (rinv->parsed()) cmd_riordan_inv(cfg, rg1, rphi1);
        else if (lexp->parsed()) cmd_lie_exp(cfg, lphi, lpsi);
        else if (llog->parsed()) cmd_lie_log(cfg, lphi, lpsi);
        else if (hdelta->parsed()) cmd_hopf_delta(cfg, hfamily, hgen);
        else if (hanti->parsed()) cmd_hopf_antipode(cfg, hfamily, hgen);
        else if (hverify->parsed()) return cmd_hopf_verify(cfg, vfamily, vdegree);
        else if (olookup->parsed()) cmd_oeis_lookup(cfg, terms);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const MathDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathDomain;
    } catch (const NetworkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNetwork;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

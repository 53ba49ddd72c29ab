#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "hodgeforge/group_oracle.hpp"
#include "hodgeforge/io.hpp"
#include "hodgeforge/recursions.hpp"
#include "hodgeforge/suites.hpp"

using namespace hodgeforge;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        const std::string field =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        out.push_back(std::stol(field, &used));
        if (used != field.size()) throw std::invalid_argument("trailing characters in '" + field + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (long v : parse_longs(text)) out.push_back(static_cast<int>(v));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbifold Hurwitz numbers, Hurwitz-Hodge integrals and identity checks"};
    app.require_subcommand(1);

    SuiteLimits limits;
    std::string format = "json";
    std::string cache_path;
    app.add_option("--max-d", limits.max_d, "enumeration degree bound")
        ->check(CLI::PositiveNumber)
        ->envname("HODGEFORGE_MAX_D");
    app.add_option("--max-s", limits.max_s, "enumeration transposition bound")
        ->check(CLI::PositiveNumber)
        ->envname("HODGEFORGE_MAX_S");
    app.add_option("--max-dim", limits.max_dim, "moduli dimension bound for bridge suites")
        ->check(CLI::PositiveNumber)
        ->envname("HODGEFORGE_MAX_DIM");
    app.add_option("--seed", limits.seed, "seed for randomized property suites")
        ->envname("HODGEFORGE_SEED");
    app.add_option("--format", format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("HODGEFORGE_FORMAT");
    app.add_option("--cache", cache_path, "Hurwitz table cache file")
        ->envname("HODGEFORGE_CACHE");

    int g = 0, r = 1, l = 1, kres = 0, m = 0;
    std::string mu_text, b_text, k_text, suite;

    auto* cmd_hurwitz = app.add_subcommand("hurwitz", "orbifold Hurwitz number by cut-and-join");
    cmd_hurwitz->add_option("--g", g, "genus")->required();
    cmd_hurwitz->add_option("--r", r, "modulus")->required();
    cmd_hurwitz->add_option("--mu", mu_text, "profile, comma separated")->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force factorization count / d!");
    cmd_oracle->add_option("--g", g, "genus")->required();
    cmd_oracle->add_option("--r", r, "modulus")->required();
    cmd_oracle->add_option("--mu", mu_text, "profile, comma separated")->required();

    auto* cmd_hh = app.add_subcommand("hh", "linear Hurwitz-Hodge integral block as JSON");
    cmd_hh->add_option("--g", g, "genus")->required();
    cmd_hh->add_option("--r", r, "modulus")->required();
    cmd_hh->add_option("--l", l, "marked points")->required();
    cmd_hh->add_option("--k", k_text, "monodromy residues, comma separated")->required();

    auto* cmd_tau = app.add_subcommand("tau", "psi-intersection number by the DVV recursion");
    cmd_tau->add_option("--g", g, "genus")->required();
    cmd_tau->add_option("--b", b_text, "descendent exponents, comma separated")->required();

    auto* cmd_lambdag = app.add_subcommand("lambdag", "one-point lambda-top value");
    cmd_lambdag->add_option("--g", g, "genus")->required();
    cmd_lambdag->add_option("--r", r, "modulus")->required();

    auto* cmd_xi = app.add_subcommand("xi", "expansion coefficient table as CSV");
    cmd_xi->add_option("--r", r, "modulus")->required();
    cmd_xi->add_option("--k", kres, "residue")->required();
    cmd_xi->add_option("--m", m, "maximal row")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a named identity suite");
    cmd_verify->add_option("suite", suite, "one of: cutjoin-oracle, dvv-bridge, "
                                           "orbifold-dvv-bridge, lemma32, lambda-g, zhou, "
                                           "laplace, lambda-top")
        ->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_hurwitz || *cmd_oracle) {
            Composition mu;
            try {
                mu = parse_longs(mu_text);
            } catch (const std::exception& e) {
                std::cerr << "malformed profile: " << e.what() << "\n";
                return kExitUsage;
            }
            if (*cmd_hurwitz) {
                HurwitzEngine engine;
                const bool have_cache = !cache_path.empty();
                if (have_cache && std::filesystem::exists(cache_path))
                    engine.load_cache(cache_path);
                std::cout << engine.hurwitz(g, r, mu).str() << "\n";
                if (have_cache) engine.save_cache(cache_path);
            } else {
                OracleLimits olim{limits.max_d, limits.max_s};
                std::cout << oracle_hurwitz(g, r, mu, olim).str() << "\n";
            }
            return 0;
        }
        if (*cmd_hh) {
            std::vector<int> kL;
            try {
                kL = parse_ints(k_text);
            } catch (const std::exception& e) {
                std::cerr << "malformed residue list: " << e.what() << "\n";
                return kExitUsage;
            }
            if (static_cast<int>(kL.size()) != l) {
                std::cerr << "residue list length differs from --l\n";
                return kExitUsage;
            }
            HurwitzEngine engine;
            HodgeBridge bridge(engine);
            std::cout << block_to_json(bridge.block(g, r, l, kL)) << "\n";
            return 0;
        }
        if (*cmd_tau) {
            DescendentVector b;
            try {
                b = parse_longs(b_text);
            } catch (const std::exception& e) {
                std::cerr << "malformed descendent list: " << e.what() << "\n";
                return kExitUsage;
            }
            HurwitzEngine engine;
            HodgeBridge bridge(engine);
            WittenDVV witten(bridge);
            std::cout << witten.tau(g, b).str() << "\n";
            return 0;
        }
        if (*cmd_lambdag) {
            std::cout << lambda_g_onepoint(g, r).str() << "\n";
            return 0;
        }
        if (*cmd_xi) {
            std::cout << xi_table_to_csv(xi_coeff_table(r, kres, m));
            return 0;
        }
        if (*cmd_verify) {
            SuiteReport report;
            try {
                report = run_suite(suite, limits);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return kExitUsage;
            }
            std::cout << (format == "csv" ? report_to_csv(report) : report_to_json(report))
                      << "\n";
            return report.pass ? 0 : kExitDomain;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}

// qylag: compute (q,y)-Laguerre polynomials, moments and linearization
// coefficients, and run the named identity verifications.
//
// Exit codes: 0 success / all verified, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qylag/laguerre.hpp"
#include "qylag/moments.hpp"
#include "qylag/mpoly.hpp"
#include "qylag/qnum.hpp"
#include "qylag/render.hpp"
#include "qylag/verify.hpp"

namespace {

using nlohmann::json;
using namespace qylag;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int thread_budget() {
    int budget = static_cast<int>(std::thread::hardware_concurrency());
    if (budget < 1) budget = 1;
    if (const char* cap = std::getenv("QYLAG_THREADS")) {
        try {
            budget = std::min(budget, std::max(1, std::stoi(cap)));
        } catch (const std::exception&) {
            // unparsable cap: keep the hardware default
        }
    }
    return budget;
}

std::string render_plain(const MPoly& p, const std::string& format) {
    return format == "latex" ? to_latex(p) : to_text(p);
}

// k = -1 prints the whole polynomial, k >= 0 just the x^k coefficient.
int cmd_poly(int n, int alpha, int k, bool signless, const std::string& format) {
    const LagPoly value =
        signless ? laguerre_signless(n, Alpha(alpha)) : laguerre_rec(n, Alpha(alpha));
    const MPoly out_poly =
        k >= 0 ? coeff_in_var(value.poly, Var::x, static_cast<std::uint32_t>(k)) : value.poly;
    if (format == "json") {
        json meta{{"command", "poly"}, {"n", n}, {"alpha", alpha}, {"signless", signless}};
        if (k >= 0) meta["k"] = k;
        std::cout << json{{"meta", meta}, {"poly", poly_terms_json(out_poly)}}.dump() << "\n";
    } else {
        std::cout << render_plain(out_poly, format) << "\n";
    }
    return 0;
}

int cmd_moments(int N, int alpha, bool symbolic_beta, const std::string& format) {
    MomentTable table;
    if (symbolic_beta)
        table = moments_sfrac(N, laguerre_scoeffs(N, MPoly::variable(Var::beta)));
    else
        table = moments_jfrac(N, laguerre_jcoeffs(Alpha(alpha), N));
    if (format == "json") {
        json moments = json::array();
        for (const auto& mu : table.mu) moments.push_back(poly_terms_json(mu));
        json meta{{"command", "moments"}, {"N", N}, {"symbolic_beta", symbolic_beta}};
        if (!symbolic_beta) meta["alpha"] = alpha;
        std::cout << json{{"meta", meta}, {"moments", moments}}.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < table.mu.size(); ++k) {
            const std::string name = format == "latex" ? "\\mu_{" + std::to_string(k) + "}"
                                                       : "mu_" + std::to_string(k);
            std::cout << name << " = " << render_plain(table.mu[k], format) << "\n";
        }
    }
    return 0;
}

int cmd_linearize(int n1, int n2, int n3, int alpha, bool check, const std::string& format) {
    const MPoly value = linearization_formula(n1, n2, n3, Alpha(alpha));
    if (check) {
        const MPoly via_moments = linearization_via_moments(n1, n2, n3, Alpha(alpha));
        if (value != via_moments) {
            std::cerr << "linearize: closed form and moment-functional route disagree\n"
                      << "  formula:    " << to_text(value) << "\n"
                      << "  functional: " << to_text(via_moments) << "\n";
            return kExitVerificationFailure;
        }
    }
    if (format == "json") {
        json out{{"meta",
                  {{"command", "linearize"},
                   {"n1", n1},
                   {"n2", n2},
                   {"n3", n3},
                   {"alpha", alpha},
                   {"checked", check}}},
                 {"poly", poly_terms_json(value)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << render_plain(value, format) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& identity, const VerifyOptions& options, bool timing,
               const std::string& format) {
    std::vector<std::string> names;
    if (identity == "all")
        names = identity_names();
    else
        names.push_back(identity);
    bool all_pass = true;
    json json_reports = json::array();
    for (const auto& name : names) {
        const auto reports = run_identity(name, options);
        int passed = 0;
        for (const auto& report : reports) {
            if (report.pass) ++passed;
            all_pass = all_pass && report.pass;
            if (format == "json") {
                json entry{{"identity", report.identity},
                           {"params", report.params},
                           {"pass", report.pass}};
                if (!report.pass) entry["witness"] = report.witness;
                if (timing) entry["elapsed_ms"] = report.elapsed_ms;
                json_reports.push_back(entry);
                continue;
            }
            std::cout << (report.pass ? "[PASS] " : "[FAIL] ") << report.identity << " "
                      << report.params;
            if (timing) std::cout << " (" << report.elapsed_ms << " ms)";
            if (!report.pass) std::cout << ": " << report.witness;
            std::cout << "\n";
        }
        if (format != "json")
            std::cout << name << ": " << passed << "/" << reports.size() << " passed\n";
    }
    if (format == "json") std::cout << json_reports.dump() << "\n";
    return all_pass ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(q,y)-Laguerre polynomials, their moments and linearization "
                 "coefficients, with brute-force identity verification"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"plain", "latex", "json"};

    auto* poly = app.add_subcommand("poly", "print L_n(x; y; q) for integer alpha >= -1");
    int poly_n = 0, poly_alpha = 0, poly_k = 0;
    bool poly_signless = false;
    std::string poly_format = "plain";
    poly->add_option("--n", poly_n, "degree n >= 0")->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--alpha", poly_alpha, "integer alpha >= -1")
        ->required()
        ->check(CLI::Number);
    auto* poly_k_opt = poly->add_option("--k", poly_k, "print only the x^k coefficient")
                           ->check(CLI::NonNegativeNumber);
    poly->add_flag("--signless", poly_signless, "print (-1)^n L_n(-x; y; q)");
    poly->add_option("--format", poly_format)->check(CLI::IsMember(formats));

    auto* moments = app.add_subcommand("moments", "print the moment table mu_0..mu_N");
    int moments_N = 0, moments_alpha = 0;
    bool moments_symbolic = false;
    std::string moments_format = "plain";
    moments->add_option("--N", moments_N, "largest moment index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* moments_alpha_opt =
        moments->add_option("--alpha", moments_alpha, "integer alpha >= 0")->check(CLI::Number);
    moments->add_flag("--symbolic-beta", moments_symbolic,
                      "keep the record weight beta as a variable")
        ->excludes(moments_alpha_opt);
    moments->add_option("--format", moments_format)->check(CLI::IsMember(formats));

    auto* linearize =
        app.add_subcommand("linearize", "linearization coefficient L_q(L_n1 L_n2 L_n3)");
    int lin_n1 = 0, lin_n2 = 0, lin_n3 = 0, lin_alpha = 0;
    bool lin_check = false;
    std::string lin_format = "plain";
    linearize->add_option("n1", lin_n1)->required()->check(CLI::NonNegativeNumber);
    linearize->add_option("n2", lin_n2)->required()->check(CLI::NonNegativeNumber);
    linearize->add_option("n3", lin_n3)->required()->check(CLI::NonNegativeNumber);
    linearize->add_option("--alpha", lin_alpha, "integer alpha >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    linearize->add_flag("--check", lin_check, "cross-check against the moment functional");
    linearize->add_option("--format", lin_format)->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "run a named identity sweep");
    std::string verify_identity;
    int verify_n_max = -1;
    std::uint64_t verify_seed = 0;
    bool verify_timing = false;
    std::string verify_format = "plain";
    verify->add_option("identity", verify_identity,
                       "identity name (see --list-identities) or 'all'")
        ->required();
    verify->add_option("--n-max", verify_n_max, "override the sweep ceiling");
    verify->add_option("--seed", verify_seed, "seed for rational sample points (default 0)");
    verify->add_flag("--timing", verify_timing, "append elapsed milliseconds to each report");
    verify->add_option("--format", verify_format)->check(CLI::IsMember(formats));

    bool list_identities = false;
    app.add_flag("--list-identities", list_identities, "print the identity names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (list_identities) {
        for (const auto& name : identity_names()) std::cout << name << "\n";
        return 0;
    }

    try {
        if (poly->parsed()) {
            if (poly_alpha < -1) {
                std::cerr << "poly: alpha must be >= -1\n";
                return kExitUsage;
            }
            const int k = poly_k_opt->count() ? poly_k : -1;
            return cmd_poly(poly_n, poly_alpha, k, poly_signless, poly_format);
        }
        if (moments->parsed()) {
            if (!moments_symbolic && moments_alpha_opt->count() == 0) {
                std::cerr << "moments: pass --alpha or --symbolic-beta\n";
                return kExitUsage;
            }
            if (!moments_symbolic && moments_alpha < 0) {
                std::cerr << "moments: alpha must be >= 0\n";
                return kExitUsage;
            }
            return cmd_moments(moments_N, moments_alpha, moments_symbolic, moments_format);
        }
        if (linearize->parsed())
            return cmd_linearize(lin_n1, lin_n2, lin_n3, lin_alpha, lin_check, lin_format);
        if (verify->parsed()) {
            if (verify_identity != "all" && !is_identity(verify_identity)) {
                std::cerr << "verify: unknown identity '" << verify_identity << "'\n";
                return kExitUsage;
            }
            VerifyOptions options;
            if (verify_n_max >= 0) options.n_max = verify_n_max;
            options.seed = verify_seed;
            options.threads = thread_budget();
            return cmd_verify(verify_identity, options, verify_timing, verify_format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

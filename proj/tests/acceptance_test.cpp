// Acceptance suite: one pass/fail line per criterion, each with its wall-time
// budget.  Exits non-zero when any criterion fails or overruns its budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "qylag/combstat.hpp"
#include "qylag/laguerre.hpp"
#include "qylag/moments.hpp"
#include "qylag/qnum.hpp"
#include "qylag/rookmatch.hpp"
#include "qylag/verify.hpp"

using namespace qylag;
using qylag::testing::example_config;

namespace {

int failures = 0;

VerifyOptions default_options() {
    VerifyOptions options;
    options.threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    return options;
}

bool sweep(const std::string& identity, std::string& message) {
    const auto reports = run_identity(identity, default_options());
    bool ok = true;
    for (const auto& report : reports) {
        if (report.pass) continue;
        ok = false;
        message += "\n    " + report.identity + " " + report.params + ": " + report.witness;
    }
    return ok;
}

void criterion(int number, const std::string& label, double budget_ms,
               const std::function<bool(std::string&)>& run) {
    std::string message;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = run(message);
    } catch (const std::exception& e) {
        message = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= budget_ms) {
        ok = false;
        message += "\n    exceeded budget of " + std::to_string(budget_ms) + " ms";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << label << " ("
              << static_cast<long>(elapsed) << " ms, budget " << static_cast<long>(budget_ms)
              << " ms)" << message << "\n";
    if (!ok) ++failures;
}

bool check(bool ok, const std::string& what, std::string& message) {
    if (!ok) message += "\n    " + what;
    return ok;
}

bool worked_example_goldens(std::string& message) {
    bool ok = true;
    const LaguerreConfig config = example_config();
    const ConfigWords words = config_words(config);
    Word concat = words.sigma_word;
    concat.insert(concat.end(), words.lambda_word.begin(), words.lambda_word.end());
    ok &= check(words.sigma_word.size() == 7, "|sigma word| != 7", message);
    ok &= check(config.lambda.total_rl() == 3, "rl(lambda) != 3", message);
    ok &= check(inv(words.binary_word) == 4, "inv(binary word) != 4", message);
    ok &= check(inv(concat) == 52, "inv(sigma.lambda) != 52", message);

    const std::vector<int> sigma{4, 1, 2, 7, 9, 6, 5, 8, 3};
    const LaguerreHistory expected{"uududuuduuuddduddd",
                                   {1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1}};
    ok &= check(biane_phi(sigma) == expected, "history differs from the display", message);
    ok &= check(biane_inverse(expected) == sigma, "inverse history differs", message);

    const RookStats stats = stats_rook(phi_config_to_rook(config));
    ok &= check(stats.inv == 52, "rook inv != 52", message);
    ok &= check(stats.cd == 4, "cd != 4", message);
    ok &= check(stats.ind == 3, "ind != 3", message);
    ok &= check(stats.cw == 7, "cw != sum m_i = 7", message);  // definition value, see README/test notes

    const MPoly Y = MPoly::variable(Var::y);
    const MPoly Q = MPoly::variable(Var::q);
    const MPoly B = MPoly::variable(Var::beta);
    const MPoly mu1 = B * Y;
    const MPoly mu2 = B * Y + B * B * Y * Y;
    const MPoly mu3 =
        B * Y + B * (MPoly::one() + (MPoly::constant(2) + Q) * B) * Y * Y + B * B * B * Y * Y * Y;
    const MomentTable table = moments_sfrac(3, laguerre_scoeffs(3, MPoly::variable(Var::beta)));
    ok &= check(moments_bruteforce(1) == mu1 && table.mu[1] == mu1, "mu_1 display", message);
    ok &= check(moments_bruteforce(2) == mu2 && table.mu[2] == mu2, "mu_2 display", message);
    ok &= check(moments_bruteforce(3) == mu3 && table.mu[3] == mu3, "mu_3 display", message);

    for (int alpha = 0; alpha <= 2; ++alpha) {
        ok &= check(laguerre_rec(1, Alpha(alpha)).poly == testing::expected_signed_l1(alpha),
                    "L_1 display at alpha=" + std::to_string(alpha), message);
        ok &= check(laguerre_rec(2, Alpha(alpha)).poly == testing::expected_signed_l2(alpha),
                    "L_2 display at alpha=" + std::to_string(alpha), message);
        ok &= check(laguerre_rec(3, Alpha(alpha)).poly == testing::expected_signed_l3(alpha),
                    "L_3 display at alpha=" + std::to_string(alpha), message);
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "worked-example goldens", 1000, worked_example_goldens);
    criterion(2, "three-route polynomial agreement", 30000,
              [](std::string& m) { return sweep("gf", m); });
    criterion(3, "configuration enumeration equals coefficients", 120000,
              [](std::string& m) { return sweep("theorem-key", m); });
    criterion(4, "colored-permutation and list-family lemmas", 60000, [](std::string& m) {
        return sweep("lemma-1", m) & sweep("lemma-2", m);
    });
    criterion(5, "moments: brute force = S-fraction, J = S after specialization", 60000,
              [](std::string& m) { return sweep("moments", m) & sweep("contraction", m); });
    criterion(6, "history bijection round trip and statistic transport", 60000,
              [](std::string& m) { return sweep("biane", m); });
    criterion(7, "orthogonality with exact diagonal values", 60000,
              [](std::string& m) { return sweep("orthogonality", m); });
    criterion(8, "linearization: dual route, positivity, classical value", 120000,
              [](std::string& m) { return sweep("linearization", m); });
    criterion(9, "rook enumeration and statistic transport", 300000,
              [](std::string& m) { return sweep("rook", m); });
    criterion(10, "matching bijection, matching polynomial, colored counts", 60000,
              [](std::string& m) { return sweep("matching", m) & sweep("foata-strehl", m); });
    criterion(11, "rescaling and basic-hypergeometric evaluation", 10000,
              [](std::string& m) { return sweep("rescaling", m); });
    criterion(12, "staircase-board inversion golden", 1000, [](std::string& m) {
        return check(inv_rook({4, 4, 3, 3, 1}, {{{1, 1}, {2, 3}, {4, 2}}}) == 3,
                     "inv != 3 on the staircase board", m);
    });

    if (failures == 0)
        std::cout << "RESULT: all 12 criteria passed\n";
    else
        std::cout << "RESULT: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}

#include "qylag/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "qylag/combstat.hpp"
#include "qylag/laguerre.hpp"
#include "qylag/moments.hpp"
#include "qylag/mpoly.hpp"
#include "qylag/qnum.hpp"
#include "qylag/rookmatch.hpp"

namespace qylag {

namespace {

struct Case {
    std::string params;
    std::function<std::optional<std::string>()> run;  // witness on failure
};

std::string mismatch(const MPoly& expected, const MPoly& actual) {
    return "expected " + to_text(expected) + ", got " + to_text(actual);
}

std::optional<std::string> expect_equal(const MPoly& expected, const MPoly& actual) {
    if (expected == actual) return std::nullopt;
    return mismatch(expected, actual);
}

std::optional<std::string> expect_true(bool ok, const std::string& witness) {
    if (ok) return std::nullopt;
    return witness;
}

std::string fmt(const char* key, int value) {
    return std::string(key) + "=" + std::to_string(value);
}

std::string word_str(const Word& w) {
    std::string s;
    for (int v : w) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

std::vector<VerificationReport> execute(const std::string& identity, std::vector<Case> cases,
                                        int threads) {
    std::vector<VerificationReport> reports(cases.size());
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&] {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= cases.size()) break;
            const auto start = std::chrono::steady_clock::now();
            std::optional<std::string> witness;
            try {
                witness = cases[i].run();
            } catch (const std::exception& e) {
                witness = std::string("exception: ") + e.what();
            }
            const auto stop = std::chrono::steady_clock::now();
            reports[i] = {identity, cases[i].params, !witness.has_value(), witness.value_or(""),
                          std::chrono::duration<double, std::milli>(stop - start).count()};
        }
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(cases.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

// --- identity sweeps -------------------------------------------------------

std::vector<Case> theorem_key_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha : {-1, 0, 1, 2})
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k)
                cases.push_back({fmt("n", n) + " " + fmt("k", k) + " " + fmt("alpha", alpha),
                                 [n, k, alpha] {
                                     MPoly sum;
                                     for_each_config(n, k, alpha, [&](const LaguerreConfig& c) {
                                         sum += config_weight(c);
                                     });
                                     return expect_equal(coeff_l(n, k, Alpha(alpha)), sum);
                                 }});
    return cases;
}

std::vector<Case> lemma1_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n = 0; n <= n_max; ++n)
            cases.push_back({fmt("n", n) + " " + fmt("alpha", alpha), [n, alpha] {
                                 return expect_true(lemma1_check(n, alpha),
                                                    "colored-permutation sum != n!_q [n+alpha, alpha]_q");
                             }});
    return cases;
}

std::vector<Case> lemma2_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            cases.push_back({fmt("n", n) + " " + fmt("k", k), [n, k] {
                                 return expect_true(lemma2_check(n, k),
                                                    "list-family sum != ell_{n,k} at alpha = -1");
                             }});
    return cases;
}

std::vector<Case> moments_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 0; n <= n_max; ++n)
        cases.push_back({fmt("n", n), [n] {
                             const MomentTable table =
                                 moments_sfrac(n, laguerre_scoeffs(n, MPoly::variable(Var::beta)));
                             return expect_equal(moments_bruteforce(n),
                                                 table.mu[static_cast<std::size_t>(n)]);
                         }});
    return cases;
}

std::vector<Case> contraction_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha = 0; alpha <= 2; ++alpha)
        cases.push_back({fmt("N", n_max) + " " + fmt("alpha", alpha), [n_max, alpha] {
                             const MomentTable j = moments_jfrac(n_max, laguerre_jcoeffs(Alpha(alpha), n_max));
                             const MomentTable s =
                                 moments_sfrac(n_max, laguerre_scoeffs(n_max, MPoly::variable(Var::beta)));
                             for (int n = 0; n <= n_max; ++n) {
                                 const MPoly specialized = substitute(
                                     s.mu[static_cast<std::size_t>(n)], Var::beta, q_int(alpha + 1));
                                 if (specialized != j.mu[static_cast<std::size_t>(n)])
                                     return std::optional<std::string>(
                                         fmt("n", n) + ": " +
                                         mismatch(j.mu[static_cast<std::size_t>(n)], specialized));
                             }
                             return std::optional<std::string>();
                         }});
    return cases;
}

std::vector<Case> orthogonality_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n = 0; n <= n_max; ++n)
            for (int m = 0; m <= n_max; ++m)
                cases.push_back({fmt("n", n) + " " + fmt("m", m) + " " + fmt("alpha", alpha),
                                 [n, m, alpha] {
                                     return expect_true(orthogonality_check(n, m, Alpha(alpha)),
                                                        "functional value differs from the product formula");
                                 }});
    return cases;
}

std::vector<Case> linearization_cases(int n_max) {
    std::vector<Case> cases;
    const int route_max = std::min(n_max, 3);
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n1 = 0; n1 <= route_max; ++n1)
            for (int n2 = n1; n2 <= route_max; ++n2)
                for (int n3 = n2; n3 <= route_max; ++n3)
                    cases.push_back(
                        {"route " + fmt("n1", n1) + " " + fmt("n2", n2) + " " + fmt("n3", n3) +
                             " " + fmt("alpha", alpha),
                         [n1, n2, n3, alpha] {
                             return expect_equal(linearization_via_moments(n1, n2, n3, Alpha(alpha)),
                                                 linearization_formula(n1, n2, n3, Alpha(alpha)));
                         }});
    const int wide_max = std::min(n_max + 1, 4);
    for (int alpha = 0; alpha <= 3; ++alpha)
        for (int n1 = 0; n1 <= wide_max; ++n1)
            for (int n2 = n1; n2 <= wide_max; ++n2)
                for (int n3 = n2; n3 <= wide_max; ++n3)
                    cases.push_back(
                        {"positivity " + fmt("n1", n1) + " " + fmt("n2", n2) + " " +
                             fmt("n3", n3) + " " + fmt("alpha", alpha),
                         [n1, n2, n3, alpha] {
                             const MPoly value = linearization_formula(n1, n2, n3, Alpha(alpha));
                             if (!is_nonnegative(value))
                                 return std::optional<std::string>("negative coefficient in " +
                                                                   to_text(value));
                             const MPoly at_one =
                                 substitute(substitute(value, Var::y, MPoly::one()), Var::q,
                                            MPoly::one());
                             const MPoly classical =
                                 MPoly::constant(classical_linearization(n1, n2, n3, Alpha(alpha)));
                             if (at_one != classical)
                                 return std::optional<std::string>("q=y=1 value " +
                                                                   mismatch(classical, at_one));
                             return std::optional<std::string>();
                         }});
    return cases;
}

std::optional<std::string> rook_transport_case(int n, int alpha) {
    std::optional<std::string> witness;
    for (int k = 0; k <= n && !witness; ++k) {
        for_each_config(n, k, alpha, [&](const LaguerreConfig& c) {
            if (witness) return;
            const ColoredRookConfig r = phi_config_to_rook(c);
            const ConfigWords words = config_words(c);
            if (!valid_rook_config(r)) {
                witness = "phi image invalid for word " + word_str(words.sigma_word) + " | " +
                          word_str(words.lambda_word);
                return;
            }
            const RookStats s = stats_rook(r);
            Word concat = words.sigma_word;
            concat.insert(concat.end(), words.lambda_word.begin(), words.lambda_word.end());
            const int total_rl = c.lambda.total_rl();
            int block_rl = 0;
            for (const auto& l : c.lambda.lists) block_rl += rl(l);
            const bool ok = s.inv == inv(concat) && s.ind == block_rl &&
                            s.cw + s.ind == static_cast<int>(words.sigma_word.size()) + total_rl &&
                            s.inv + s.cd - s.ind ==
                                inv(concat) - total_rl + inv(words.binary_word);
            if (!ok) {
                witness = "statistic transport fails for word " + word_str(concat);
                return;
            }
            const LaguerreConfig back = rook_to_config(r);
            const ConfigWords back_words = config_words(back);
            if (back_words.sigma_word != words.sigma_word ||
                back_words.lambda_word != words.lambda_word ||
                back_words.binary_word != words.binary_word) {
                witness = "round trip fails for word " + word_str(concat);
                return;
            }
        });
    }
    return witness;
}

std::vector<Case> rook_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha : {-1, 0, 1}) {
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k)
                cases.push_back({"equality " + fmt("n", n) + " " + fmt("k", k) + " " +
                                     fmt("alpha", alpha),
                                 [n, k, alpha] {
                                     return expect_true(theorem_rook_check(n, k, alpha),
                                                        "weighted rook sum != ell_{n,k}");
                                 }});
            cases.push_back({"transport " + fmt("n", n) + " " + fmt("alpha", alpha),
                             [n, alpha] { return rook_transport_case(n, alpha); }});
        }
    }
    return cases;
}

std::optional<std::string> matching_bijection_case(int n, int k, int alpha) {
    std::set<Matching> image;
    Int count = 0;
    std::optional<std::string> witness;
    for_each_config(n, k, alpha, [&](const LaguerreConfig& c) {
        if (witness) return;
        const Matching gamma = config_to_matching(c);
        ++count;
        if (static_cast<int>(gamma.edges.size()) != n - k) {
            witness = "matching has " + std::to_string(gamma.edges.size()) + " edges, expected " +
                      std::to_string(n - k);
            return;
        }
        std::set<int> tops, bottoms;
        for (const auto& [a, b] : gamma.edges) {
            if (a < 1 || a > n || !tops.insert(a).second || !bottoms.insert(b).second) {
                witness = "matching is not a matching";
                return;
            }
            // bottom labels live in [n + alpha] whenever alpha >= 0; at
            // alpha = -1 the letter n may appear as a successor, and the
            // image is counted inside K_{n,n} instead (same cardinality)
            if (alpha >= 0 && (b < 1 || b > n + alpha)) {
                witness = "bottom vertex out of range";
                return;
            }
        }
        if (!image.insert(gamma).second) witness = "matching map is not injective";
    });
    if (witness) return witness;
    const Int expected = matching_count(n, n + alpha, n - k);
    if (count != expected) {
        std::ostringstream os;
        os << "image size " << count << ", expected " << expected;
        return os.str();
    }
    return std::nullopt;
}

std::vector<Case> matching_cases(int n_max, int poly_max) {
    std::vector<Case> cases;
    for (int alpha : {-1, 0, 1})
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k)
                cases.push_back({"bijection " + fmt("n", n) + " " + fmt("k", k) + " " +
                                     fmt("alpha", alpha),
                                 [n, k, alpha] { return matching_bijection_case(n, k, alpha); }});
    for (int alpha = -1; alpha <= 3; ++alpha)
        for (int n = (alpha == -1 ? 1 : 0); n <= poly_max; ++n)
            cases.push_back({"polynomial " + fmt("n", n) + " " + fmt("alpha", alpha),
                             [n, alpha] {
                                 return expect_true(matching_identity_check(n, alpha),
                                                    "matching polynomial != rescaled classical polynomial");
                             }});
    return cases;
}

std::vector<Case> foata_strehl_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha : {-1, 0, 1, 2})
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k)
                cases.push_back({fmt("n", n) + " " + fmt("k", k) + " " + fmt("alpha", alpha),
                                 [n, k, alpha] {
                                     return expect_true(foata_strehl_check(n, k, alpha),
                                                        "configuration count != n!/k! C(n+alpha, n-k)");
                                 }});
    return cases;
}

std::vector<Case> connection_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha = -1; alpha <= 2; ++alpha)
        for (int beta = -1; beta <= alpha; ++beta)
            for (int n = 0; n <= n_max; ++n)
                cases.push_back({fmt("n", n) + " " + fmt("alpha", alpha) + " " + fmt("beta", beta),
                                 [n, alpha, beta] {
                                     return expect_true(
                                         connection_check(n, Alpha(alpha), Alpha(beta)),
                                         "connection expansion differs");
                                 }});
    return cases;
}

std::vector<Case> prop_g_cases(int n_max) {
    std::vector<Case> cases;
    for (int n = 0; n <= n_max; ++n)
        cases.push_back({fmt("n", n), [n] {
                             return expect_true(prop_g_check(n), "convolution recurrence differs");
                         }});
    return cases;
}

std::vector<Case> gf_cases(int n_max) {
    std::vector<Case> cases;
    for (int alpha : {-1, 0, 1, 2}) {
        cases.push_back({"explicit " + fmt("n_max", std::min(n_max + 2, 7)) + " " +
                             fmt("alpha", alpha),
                         [n_max, alpha] {
                             for (int n = 0; n <= std::min(n_max + 2, 7); ++n) {
                                 const MPoly expected = laguerre_signless(n, Alpha(alpha)).poly;
                                 const MPoly actual = laguerre_explicit(n, Alpha(alpha)).poly;
                                 if (expected != actual)
                                     return std::optional<std::string>(fmt("n", n) + ": " +
                                                                       mismatch(expected, actual));
                             }
                             return std::optional<std::string>();
                         }});
        cases.push_back(
            {"extraction t_max=6 q_max=8 " + fmt("alpha", alpha), [n_max, alpha] {
                 const int t_max = 6, q_max = 8;
                 const auto q_policy = TruncationPolicy::q_below(q_max);
                 const MPoly gf = gf_truncated(Alpha(alpha), t_max, q_max);
                 for (int n = 0; n < std::min(t_max, n_max + 1); ++n) {
                     const MPoly from_gf = truncated(
                         mul(coeff_in_var(gf, Var::t, static_cast<std::uint32_t>(n)),
                             q_factorial(n)),
                         q_policy);
                     const MPoly expected =
                         truncated(laguerre_signless(n, Alpha(alpha)).poly, q_policy);
                     if (from_gf != expected)
                         return std::optional<std::string>(fmt("n", n) + ": " +
                                                           mismatch(expected, from_gf));
                 }
                 return std::optional<std::string>();
             }});
        cases.push_back({"factorization t_max=5 q_max=6 " + fmt("alpha", alpha), [alpha] {
                             return expect_true(gf_factorization_check(Alpha(alpha), 5, 6),
                                                "generating function does not factor");
                         }});
    }
    for (int alpha : {-1, 0, 1})
        cases.push_back(
            {"zero-gf t_max=5 q_max=6 " + fmt("alpha", alpha), [alpha] {
                 const int t_max = 5, q_max = 6;
                 const auto policy = TruncationPolicy::qt_below(q_max, t_max);
                 const MPoly at_zero =
                     substitute(gf_truncated(Alpha(alpha), t_max, q_max), Var::x, MPoly::zero());
                 const auto entries = zero_gf_closed_form(Alpha(alpha), t_max);
                 MPoly series;
                 for (int n = 0; n < t_max; ++n)
                     series = add(series,
                                  mul(mul(entries[static_cast<std::size_t>(n)],
                                          series_inverse(q_factorial(n), policy), policy),
                                      var_pow(Var::t, static_cast<std::uint32_t>(n)), policy),
                                  policy);
                 return expect_equal(series, at_zero);
             }});
    return cases;
}

std::uint64_t mix_seed(std::uint64_t seed, int n, int alpha) {
    std::uint64_t h = seed * 1000003ull + static_cast<std::uint64_t>(n) * 131ull +
                      static_cast<std::uint64_t>(alpha + 2);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
}

std::vector<Case> rescaling_cases(int n_max, std::uint64_t seed) {
    std::vector<Case> cases;
    for (int alpha = 0; alpha <= 2; ++alpha)
        for (int n = 0; n <= n_max; ++n)
            cases.push_back({"rescale " + fmt("n", n) + " " + fmt("alpha", alpha) + " samples=10",
                             [n, alpha, seed] {
                                 const auto samples = rescale_samples(10, mix_seed(seed, n, alpha));
                                 return expect_true(rescaling_check(n, Alpha(alpha), samples),
                                                    "rescaled evaluation differs at a sample point");
                             }});
    for (int n = 0; n <= n_max; ++n)
        cases.push_back(
            {"asc " + fmt("n", n) + " samples=20", [n, seed] {
                 std::mt19937_64 rng(mix_seed(seed, n, -2));
                 std::uniform_int_distribution<int> num(-9, 9);
                 std::uniform_int_distribution<int> den(1, 9);
                 const MPoly recurrence = asc_rec(n);
                 int done = 0;
                 while (done < 20) {
                     const Rat u(num(rng), den(rng));
                     const Rat a(num(rng), den(rng));
                     const Rat b(num(rng), den(rng));
                     const Rat q(num(rng), den(rng));
                     if (u == 0 || a == 0 || q == 0 || q == 1 || q == -1) continue;
                     Rat explicit_value;
                     try {
                         explicit_value = asc_explicit_eval(n, u, a, b, q);
                     } catch (const SingularEvaluationPoint&) {
                         continue;  // rejected sample, e.g. (ab; q)_k = 0
                     }
                     const Rat x = (u + Rat(1) / u) / 2;
                     const Rat rec_value = eval_rat(
                         recurrence, {{Var::x, x}, {Var::a, a}, {Var::b, b}, {Var::q, q}});
                     if (explicit_value != rec_value) {
                         std::ostringstream os;
                         os << "mismatch at u=" << u << " a=" << a << " b=" << b << " q=" << q
                            << ": " << explicit_value << " vs " << rec_value;
                         return std::optional<std::string>(os.str());
                     }
                     ++done;
                 }
                 return std::optional<std::string>();
             }});
    return cases;
}

std::optional<std::string> biane_case(int n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::set<std::pair<std::string, std::vector<int>>> image;
    do {
        const LaguerreHistory h = biane_phi(sigma);
        if (biane_inverse(h) != sigma)
            return "round trip fails for " + word_str(sigma);
        image.insert({h.steps, h.xi});
        // statistic transport
        const PermStats direct = perm_stats(sigma);
        int wex = 0, rec = 0, cros = 0, height = 0;
        for (std::size_t i = 0; i < h.steps.size(); ++i) {
            if (h.steps[i] == 'd') {
                cros += h.xi[i] - 1;
                if (i % 2 == 1) {
                    ++wex;
                    if (h.xi[i] == (height + 1) / 2) ++rec;
                }
                --height;
            } else {
                ++height;
            }
        }
        if (direct.wex != wex || direct.rec != rec || direct.cros != cros)
            return "statistic transport fails for " + word_str(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (image.size() != static_cast<std::size_t>(factorial(n)))
        return "image of S_n has size " + std::to_string(image.size());
    std::size_t history_count = 0;
    std::optional<std::string> witness;
    for_each_history(n, [&](const LaguerreHistory& h) {
        ++history_count;
        if (witness) return;
        const auto back = biane_phi(biane_inverse(h));
        if (!(back == h)) witness = "history round trip fails";
    });
    if (witness) return witness;
    if (history_count != static_cast<std::size_t>(factorial(n)))
        return "history count " + std::to_string(history_count) + " != n!";
    return std::nullopt;
}

std::vector<Case> biane_cases(int n_max) {
    std::vector<Case> cases;
    cases.push_back({"example n=9", [] {
                         const std::vector<int> sigma{4, 1, 2, 7, 9, 6, 5, 8, 3};
                         const LaguerreHistory expected{
                             "uududuuduuuddduddd",
                             {1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1}};
                         const LaguerreHistory actual = biane_phi(sigma);
                         if (!(actual == expected))
                             return std::optional<std::string>("history differs from the worked example");
                         if (biane_inverse(expected) != sigma)
                             return std::optional<std::string>("inverse differs from the worked example");
                         return std::optional<std::string>();
                     }});
    for (int n = 1; n <= n_max; ++n)
        cases.push_back({fmt("n", n), [n] { return biane_case(n); }});
    return cases;
}

}  // namespace

std::vector<std::string> identity_names() {
    return {"theorem-key", "lemma-1",      "lemma-2",    "moments",   "contraction",
            "orthogonality", "linearization", "rook",       "matching",  "foata-strehl",
            "connection",  "prop-g",       "gf",         "rescaling", "biane"};
}

bool is_identity(const std::string& name) {
    const auto names = identity_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerificationReport> run_identity(const std::string& name,
                                             const VerifyOptions& options) {
    const auto ceiling = [&](int fallback) { return options.n_max.value_or(fallback); };
    std::vector<Case> cases;
    if (name == "theorem-key") {
        cases = theorem_key_cases(ceiling(6));
    } else if (name == "lemma-1") {
        cases = lemma1_cases(ceiling(5));
    } else if (name == "lemma-2") {
        cases = lemma2_cases(ceiling(6));
    } else if (name == "moments") {
        cases = moments_cases(ceiling(7));
    } else if (name == "contraction") {
        cases = contraction_cases(ceiling(8));
    } else if (name == "orthogonality") {
        cases = orthogonality_cases(ceiling(5));
    } else if (name == "linearization") {
        cases = linearization_cases(ceiling(3));
    } else if (name == "rook") {
        cases = rook_cases(ceiling(5));
    } else if (name == "matching") {
        cases = matching_cases(ceiling(5), ceiling(8));
    } else if (name == "foata-strehl") {
        cases = foata_strehl_cases(ceiling(6));
    } else if (name == "connection") {
        cases = connection_cases(ceiling(4));
    } else if (name == "prop-g") {
        cases = prop_g_cases(ceiling(6));
    } else if (name == "gf") {
        cases = gf_cases(ceiling(5));
    } else if (name == "rescaling") {
        cases = rescaling_cases(ceiling(6), options.seed);
    } else if (name == "biane") {
        cases = biane_cases(ceiling(6));
    } else {
        throw std::invalid_argument("unknown identity: " + name);
    }
    return execute(name, std::move(cases), options.threads);
}

}  // namespace qylag

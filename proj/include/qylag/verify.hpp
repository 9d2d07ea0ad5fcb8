#pragma once

// Named identity sweeps shared by the CLI `verify` subcommand and the
// acceptance suite.  Each identity expands to a list of parameter tuples;
// tuples are independent pure computations, so they may run on several
// threads, and reports always come back in tuple order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qylag {

struct VerificationReport {
    std::string identity;
    std::string params;
    bool pass = false;
    std::string witness;   // present exactly when pass is false
    double elapsed_ms = 0.0;
};

struct VerifyOptions {
    std::optional<int> n_max;  // overrides the identity's default ceiling
    std::uint64_t seed = 0;    // sample points for the rational-evaluation sweeps
    int threads = 1;
};

/// All recognized identity names, in display order.
std::vector<std::string> identity_names();

bool is_identity(const std::string& name);

/// Runs one identity's sweep; throws std::invalid_argument on unknown names.
std::vector<VerificationReport> run_identity(const std::string& name, const VerifyOptions& options);

}  // namespace qylag

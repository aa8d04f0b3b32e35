#pragma once

#include <iosfwd>
#include <string>

#include "xychain/config.hpp"
#include "xychain/experiment.hpp"

namespace xychain::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// Three-way agreement check (closed-form matrix, six-factor product,
// eigendecomposition oracle) over the configured phi grid. Prints the max
// deviation and PASS/FAIL against cfg.tol_verify; on failure also the
// worst-offending phi.
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Compile the propagator at phase phi and write the pulse text to
// out_path; prints the simulated fidelity against the closed-form target
// and the total delay time.
int cmd_compile(const RunConfig& cfg, double phi, bool expand,
                const std::string& out_path, std::ostream& out);

// Sweep the branch amplitude curves over the configured grid into a CSV
// (header phi,amp_c1,amp_c3); with fit, append the least-squares scale
// factors as a trailing comment row.
int cmd_sweep(const RunConfig& cfg, Branch branch, bool fit,
              const std::string& out_path, std::ostream& out);

// Run the end-to-end state transfer for the (normalized) input amplitudes
// and write a JSON record of the result.
int cmd_pst(const RunConfig& cfg, Complex alpha, Complex beta, bool correct,
            const std::string& out_path, std::ostream& out);

}  // namespace xychain::cli

#include <complex>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "xychain/cli.hpp"

namespace {

using namespace xychain;

RunConfig make_config(const std::string& config_path, double tol_override,
                      bool tol_set) {
  RunConfig cfg;
  if (!config_path.empty()) cfg = load_config(config_path);
  if (tol_set) {
    cfg.tol_verify = tol_override;
    cfg.validate();
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-spin XY-chain simulator and NMR pulse compiler"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key = value config file");

  double tol = 0.0;
  bool tol_set = false;

  auto* verify = app.add_subcommand(
      "verify", "check the propagator decomposition against the exact exponential");
  verify->add_option("--tol", tol, "agreement tolerance (max-entry norm)")
      ->each([&](const std::string&) { tol_set = true; });

  auto* compile = app.add_subcommand(
      "compile", "compile the propagator into a pulse sequence");
  std::string phi_text = "0.5pi";
  bool expand = false;
  std::string out_path;
  compile->add_option("--phi", phi_text,
                      "phase angle, decimals or pi-suffixed (e.g. 0.5pi)");
  compile->add_flag("--expand", expand,
                    "expand composite blocks down to hardware-level events");
  compile->add_option("--out", out_path, "output path");

  auto* sweep = app.add_subcommand(
      "sweep", "sweep the branch amplitude curves over the phi grid");
  std::string branch_text = "A";
  bool fit = false;
  sweep->add_option("--branch", branch_text, "branch, A or B")
      ->check(CLI::IsMember({"A", "B"}));
  sweep->add_flag("--fit", fit, "append least-squares fit constants");
  sweep->add_option("--out", out_path, "output path");

  auto* pst = app.add_subcommand(
      "pst", "demonstrate the end-to-end state transfer");
  double alpha_re = 1.0, alpha_im = 0.0, beta_re = 0.0, beta_im = 0.0;
  bool correct = false;
  pst->add_option("--alpha-re", alpha_re, "Re alpha");
  pst->add_option("--alpha-im", alpha_im, "Im alpha");
  pst->add_option("--beta-re", beta_re, "Re beta");
  pst->add_option("--beta-im", beta_im, "Im beta");
  pst->add_flag("--correct", correct, "apply the sign-fixing Z on spin 3");
  pst->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    const RunConfig cfg = make_config(config_path, tol, tol_set);
    if (verify->parsed()) return cli::cmd_verify(cfg, std::cout);
    if (compile->parsed()) {
      const double phi = parse_angle(phi_text);
      const std::string path = out_path.empty() ? cfg.out_compile : out_path;
      return cli::cmd_compile(cfg, phi, expand, path, std::cout);
    }
    if (sweep->parsed()) {
      const Branch branch = branch_text == "A" ? Branch::A : Branch::B;
      const std::string path = out_path.empty() ? cfg.out_sweep : out_path;
      return cli::cmd_sweep(cfg, branch, fit, path, std::cout);
    }
    if (pst->parsed()) {
      const std::string path = out_path.empty() ? cfg.out_pst : out_path;
      return cli::cmd_pst(cfg, Complex{alpha_re, alpha_im},
                          Complex{beta_re, beta_im}, correct, path, std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}

#include "xychain/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace xychain::cli {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

bool write_file(const std::string& path, const std::string& contents,
                std::ostream& out) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    out << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  file << contents;
  file.flush();
  if (!file) {
    out << "error: write failed for '" << path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto phis = phi_grid(cfg);
  const Operator h = build_xy_hamiltonian(XYChainSpec::uniform(3, 1.0));

  double worst_dev = 0.0;
  double worst_phi = phis.empty() ? 0.0 : phis.front();
  for (double phi : phis) {
    const Operator oracle = exp_hermitian(h, phi * std::sqrt(2.0));
    const Operator analytic = propagator_analytic(phi);
    const Operator factored = factor_product(decompose_factors(phi));
    const double dev = std::max({max_abs_diff(analytic, oracle),
                                 max_abs_diff(factored, oracle),
                                 max_abs_diff(analytic, factored)});
    if (dev > worst_dev) {
      worst_dev = dev;
      worst_phi = phi;
    }
  }

  out << "verify: " << phis.size() << " phi samples in ["
      << fmt("%.15g", cfg.sweep_start) << ", " << fmt("%.15g", cfg.sweep_stop)
      << "]\n";
  out << "  max deviation (analytic/factored/oracle, pairwise): "
      << fmt("%.3e", worst_dev) << "\n";
  if (worst_dev <= cfg.tol_verify) {
    out << "PASS (tolerance " << fmt("%.3e", cfg.tol_verify) << ")\n";
    return kExitOk;
  }
  out << "FAIL (tolerance " << fmt("%.3e", cfg.tol_verify)
      << "): worst offender phi=" << fmt("%.15g", worst_phi)
      << " deviation=" << fmt("%.3e", worst_dev) << "\n";
  return kExitVerifyFailed;
}

int cmd_compile(const RunConfig& cfg, double phi, bool expand,
                const std::string& out_path, std::ostream& out) {
  const PulseSequence seq = compile_u(cfg.system, phi, expand);
  if (!write_file(out_path, serialize(seq), out)) return kExitUsage;

  const double fid =
      fidelity(simulate_sequence(seq, cfg.system), propagator_analytic(phi));
  out << "wrote " << seq.size() << " events to " << out_path << "\n";
  out << "fidelity vs target propagator: " << fmt("%.9f", fid) << "\n";
  out << "total delay time: " << fmt("%.15g", total_delay(seq)) << " s\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, Branch branch, bool fit,
              const std::string& out_path, std::ostream& out) {
  const auto samples = amplitude_curve(phi_grid(cfg), branch);

  std::string csv = "phi,amp_c1,amp_c3\n";
  for (const auto& s : samples) {
    csv += fmt("%.12g", s.phi) + "," + fmt("%.12g", s.amp_c1) + "," +
           fmt("%.12g", s.amp_c3) + "\n";
  }
  if (fit) {
    const CosFit f = fit_cos2(samples);
    csv += "# fit a1=" + fmt("%.12g", f.a1) + " a3=" + fmt("%.12g", f.a3) + "\n";
    out << "fit: a1=" << fmt("%.12g", f.a1) << " a3=" << fmt("%.12g", f.a3)
        << "\n";
  }
  if (!write_file(out_path, csv, out)) return kExitUsage;
  out << "wrote " << samples.size() << " samples to " << out_path << "\n";
  return kExitOk;
}

int cmd_pst(const RunConfig& cfg, Complex alpha, Complex beta, bool correct,
            const std::string& out_path, std::ostream& out) {
  (void)cfg;
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (norm == 0.0) {
    out << "error: input state is the zero vector\n";
    return kExitUsage;
  }
  alpha /= norm;
  beta /= norm;

  const PstResult result = pst_transfer(QubitState(alpha, beta), correct);

  nlohmann::json record;
  record["alpha_re"] = alpha.real();
  record["alpha_im"] = alpha.imag();
  record["beta_re"] = beta.real();
  record["beta_im"] = beta.imag();
  record["corrected"] = result.corrected;
  record["fidelity"] = result.fidelity;
  std::vector<double> re, im;
  for (int k = 0; k < result.state.size(); ++k) {
    re.push_back(result.state(k).real());
    im.push_back(result.state(k).imag());
  }
  record["final_state_re"] = re;
  record["final_state_im"] = im;

  if (!write_file(out_path, record.dump(2) + "\n", out)) return kExitUsage;
  out << "fidelity: " << fmt("%.12g", result.fidelity)
      << (correct ? " (phase corrected)" : " (uncorrected)") << "\n";
  out << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace xychain::cli

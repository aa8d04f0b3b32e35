#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xychain/nmrcompile.hpp"

namespace xychain {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Run parameters for the command-line tool. Defaults embed the
// trichloroethylene constants, so a bare run reproduces the reference
// system.
struct RunConfig {
  SpinSystem system = SpinSystem::tce();
  double sweep_start = 0.0;
  double sweep_stop = 2.0 * std::numbers::pi;
  int sweep_count = 101;
  double tol_verify = 1e-9;
  std::string out_compile = "pulse_sequence.txt";
  std::string out_sweep = "sweep.csv";
  std::string out_pst = "pst.json";

  void validate() const;
};

// Angles accept multiples of pi by suffix: "0.5pi", "2pi", "pi", "-pi",
// as well as plain decimals.
double parse_angle(std::string_view text);

// Flat `key = value` text with dotted keys, '#' comments and blank lines:
//   j.12 = 200.9
//   nu.3 = 904.4
//   gamma.h = 3.977
//   sweep.stop = 2pi
// Unknown keys or malformed values raise ConfigError.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

// The phi grid [sweep_start, sweep_stop] with sweep_count points,
// endpoints included (a single point sits at sweep_start).
std::vector<double> phi_grid(const RunConfig& cfg);

}  // namespace xychain

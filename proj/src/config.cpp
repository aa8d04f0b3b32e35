#include "xychain/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace xychain {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, const std::string& what) {
  const std::string s(trim(text));
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + what + ": '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(value))
    throw ConfigError("bad numeric value for " + what + ": '" + s + "'");
  return value;
}

int parse_int(std::string_view text, const std::string& what) {
  const double v = parse_number(text, what);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError(what + " must be an integer");
  return i;
}

}  // namespace

void RunConfig::validate() const {
  system.validate();
  if (sweep_count < 1) throw ConfigError("sweep.count must be >= 1");
  if (!(sweep_stop >= sweep_start))
    throw ConfigError("sweep.stop must be >= sweep.start");
  if (!(tol_verify > 0.0)) throw ConfigError("tol.verify must be positive");
}

double parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    const std::string_view head = trim(s.substr(0, s.size() - 2));
    if (head.empty() || head == "+") return std::numbers::pi;
    if (head == "-") return -std::numbers::pi;
    return parse_number(head, "angle") * std::numbers::pi;
  }
  return parse_number(s, "angle");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    const auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key{trim(sv.substr(0, eq))};
    const std::string_view value = trim(sv.substr(eq + 1));

    if (key == "j.12" || key == "j.13" || key == "j.23") {
      const int a = key[2] - '1';
      const int b = key[3] - '1';
      cfg.system.j(a, b) = cfg.system.j(b, a) = parse_number(value, key);
    } else if (key == "nu.1" || key == "nu.2" || key == "nu.3") {
      cfg.system.nu[key[3] - '1'] = parse_number(value, key);
    } else if (key == "gamma.c") {
      const double g = parse_number(value, key);
      cfg.system.gamma[0] = cfg.system.gamma[2] = g;
    } else if (key == "gamma.h") {
      cfg.system.gamma[1] = parse_number(value, key);
    } else if (key == "sweep.start") {
      cfg.sweep_start = parse_angle(value);
    } else if (key == "sweep.stop") {
      cfg.sweep_stop = parse_angle(value);
    } else if (key == "sweep.count") {
      cfg.sweep_count = parse_int(value, key);
    } else if (key == "tol.verify") {
      cfg.tol_verify = parse_number(value, key);
    } else if (key == "out.compile") {
      cfg.out_compile = std::string(value);
    } else if (key == "out.sweep") {
      cfg.out_sweep = std::string(value);
    } else if (key == "out.pst") {
      cfg.out_pst = std::string(value);
    } else {
      throw ConfigError("unknown key '" + key + "' on line " + std::to_string(lineno));
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<double> phi_grid(const RunConfig& cfg) {
  cfg.validate();
  std::vector<double> phis;
  phis.reserve(static_cast<std::size_t>(cfg.sweep_count));
  if (cfg.sweep_count == 1) {
    phis.push_back(cfg.sweep_start);
    return phis;
  }
  const double step =
      (cfg.sweep_stop - cfg.sweep_start) / static_cast<double>(cfg.sweep_count - 1);
  for (int k = 0; k < cfg.sweep_count; ++k)
    phis.push_back(cfg.sweep_start + step * static_cast<double>(k));
  return phis;
}

}  // namespace xychain

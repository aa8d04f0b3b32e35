#include "xychain/nmrcompile.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace xychain {

namespace {

constexpr double kPi = std::numbers::pi;

PauliLetter axis_letter(Axis a) {
  return a == Axis::X ? PauliLetter::X : PauliLetter::Y;
}

PauliString single_site(int n, int spin, PauliLetter letter) {
  std::vector<PauliLetter> letters(n, PauliLetter::I);
  letters[spin - 1] = letter;
  return PauliString(std::move(letters));
}

void check_spin(int spin, int n) {
  if (spin < 1 || spin > n) throw std::invalid_argument("spin index out of range");
}

std::string format_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

double SpinSystem::coupling(int a, int b) const {
  check_spin(a, n);
  check_spin(b, n);
  if (a == b) throw std::invalid_argument("coupling needs two distinct spins");
  return j(a - 1, b - 1);
}

void SpinSystem::validate() const {
  if (n < 2 || n > kMaxSpins) throw std::invalid_argument("spin count out of range");
  if (static_cast<int>(nu.size()) != n || static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("need one offset and one gamma per spin");
  if (j.rows() != n || j.cols() != n)
    throw std::invalid_argument("coupling matrix must be n x n");
  for (int a = 0; a < n; ++a) {
    if (j(a, a) != 0.0) throw std::invalid_argument("coupling matrix diagonal must be zero");
    for (int b = 0; b < n; ++b) {
      if (!std::isfinite(j(a, b)) || j(a, b) != j(b, a))
        throw std::invalid_argument("coupling matrix must be finite and symmetric");
    }
  }
}

SpinSystem SpinSystem::tce() {
  SpinSystem sys;
  sys.n = 3;
  sys.nu = {0.0, 0.0, 904.4};
  sys.j = Eigen::MatrixXd::Zero(3, 3);
  sys.j(0, 1) = sys.j(1, 0) = 200.9;
  sys.j(1, 2) = sys.j(2, 1) = 9.16;
  sys.j(0, 2) = sys.j(2, 0) = 103.1;
  sys.gamma = {1.0, kGammaRatioHC, 1.0};
  return sys;
}

Operator rf_pulse_unitary(const RfPulse& pulse, int n) {
  if (pulse.spins.empty()) throw std::invalid_argument("rf pulse needs spins");
  if (!std::isfinite(pulse.angle)) throw std::invalid_argument("rf angle must be finite");
  const int dim = 1 << n;
  Operator u = Operator::Identity(dim, dim);
  for (int spin : pulse.spins) {
    check_spin(spin, n);
    // [angle] = exp(+i angle/2 sigma) = exp_pauli_string(-angle/2, sigma)
    u = exp_pauli_string(-0.5 * pulse.angle,
                         single_site(n, spin, axis_letter(pulse.axis))) *
        u;
  }
  return u;
}

Operator coupling_delay_unitary(const CouplingDelay& delay, const SpinSystem& sys) {
  if (!(delay.tau >= 0.0) || !std::isfinite(delay.tau))
    throw std::invalid_argument("delay duration must be non-negative");
  if (delay.first >= delay.second)
    throw std::invalid_argument("delay pair must be ordered j < l");
  check_spin(delay.first, sys.n);
  check_spin(delay.second, sys.n);
  std::vector<PauliLetter> letters(sys.n, PauliLetter::I);
  letters[delay.first - 1] = PauliLetter::Z;
  letters[delay.second - 1] = PauliLetter::Z;
  const double angle =
      0.5 * kPi * sys.coupling(delay.first, delay.second) * delay.tau;
  return exp_pauli_string(angle, PauliString(std::move(letters)));
}

Operator z_rotation_unitary(const ZRotation& rot, int n) {
  check_spin(rot.spin, n);
  return exp_pauli_string(-0.5 * rot.angle, single_site(n, rot.spin, PauliLetter::Z));
}

Operator pauli_rotation_unitary(const PauliRotation& rot) {
  if (rot.string.quarter_turns() != 0)
    throw std::invalid_argument("pauli rotation wants a +1-phase string");
  return exp_pauli_string(rot.angle, rot.string);
}

CouplingDelay delay_for_angle(int first, int second, double angle,
                              const SpinSystem& sys) {
  const double j = sys.coupling(first, second);
  if (j <= 0.0) throw std::invalid_argument("delay needs a positive coupling");
  double effective = angle;
  while (effective < 0.0) effective += 2.0 * kPi;
  return CouplingDelay{first, second, 2.0 * effective / (kPi * j)};
}

PulseSequence zzz_block(const SpinSystem& sys, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (sys.n != 3) throw std::invalid_argument("zzz block is for the 3-spin system");
  // exp(-i pi/8 ZZZ) uses J12 delays of 9/(2 J12); the inverse uses
  // 7/(2 J12). Both leave an effective +-pi/4 ZZ rotation.
  const double d12 = (sign > 0 ? 9.0 : 7.0) / (2.0 * sys.coupling(1, 2));
  const double d23 = 1.0 / (4.0 * sys.coupling(2, 3));
  return {
      RfPulse{-kPi / 2.0, Axis::X, {2}},
      RfPulse{-kPi, Axis::Y, {2}},
      CouplingDelay{1, 2, d12},
      RfPulse{kPi / 2.0, Axis::Y, {2}},
      CouplingDelay{2, 3, d23},
      RfPulse{kPi / 2.0, Axis::Y, {2}},
      CouplingDelay{1, 2, d12},
      RfPulse{kPi / 2.0, Axis::X, {2}},
  };
}

PulseSequence selective_x_block(int spin, double angle) {
  if (spin != 1 && spin != 3)
    throw std::invalid_argument("selective x block targets spin 1 or 3");
  // Conjugating the frame rotation by fixed +-pi/2 carbon pulses turns
  // exp(+i angle/2 Z) into exp(+i angle/2 X) for every angle; the
  // spectator carbon's pulses cancel.
  return {
      RfPulse{kPi / 2.0, Axis::Y, {1, 3}},
      ZRotation{angle, spin},
      RfPulse{-kPi / 2.0, Axis::Y, {1, 3}},
  };
}

PulseSequence z_double_block() {
  return {
      RfPulse{kPi, Axis::X, {1, 3}},
      RfPulse{kPi, Axis::Y, {1, 3}},
  };
}

PulseSequence compile_u(const SpinSystem& sys, double phi, bool expand) {
  sys.validate();
  if (sys.n != 3) throw std::invalid_argument("compile_u is for the 3-spin system");
  if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  // The propagator is periodic in phi, so the compiler reduces phi into
  // [0, 2 pi) and the variable delays stay non-negative.
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;

  using enum PauliLetter;
  const PauliString zzz{Z, Z, Z};

  auto three_body = [&](int sign) -> PulseSequence {
    if (expand) return zzz_block(sys, sign);
    return {PauliRotation{sign * kPi / 8.0, zzz}};
  };
  auto selective_x = [&](int spin, double angle) -> PulseSequence {
    if (expand) return selective_x_block(spin, angle);
    return {RfPulse{angle, Axis::X, {spin}}};
  };
  auto z_double = [&]() -> PulseSequence {
    if (expand) return z_double_block();
    return {ZRotation{kPi, 1}, ZRotation{kPi, 3}};
  };

  // Factors of the compiled propagator in operator-product order (leftmost
  // applied last in time).
  const std::vector<PulseSequence> factors = {
      {RfPulse{-kPi / 2.0, Axis::Y, {1}}},               // exp(-i pi/4 Y1)
      selective_x(3, kPi / 2.0),                         // exp(+i pi/4 X3)
      three_body(+1),                                    // exp(-i pi/8 ZZZ)
      {RfPulse{-kPi / 2.0, Axis::Y, {2}}},
      {delay_for_angle(1, 2, phi, sys)},                 // exp(-i phi Z1Z2)
      {RfPulse{kPi / 2.0, Axis::Y, {2}}},
      three_body(-1),                                    // exp(+i pi/8 ZZZ)
      {RfPulse{kPi / 2.0, Axis::X, {1, 3}}},
      {RfPulse{-kPi / 2.0, Axis::Y, {3}}},
      z_double(),                                        // exp(+i pi/2 (Z1+Z3))
      {ZRotation{-kPi / 2.0, 1}},                        // exp(-i pi/4 Z1)
      three_body(+1),
      {RfPulse{-kPi / 2.0, Axis::Y, {2}}},
      {delay_for_angle(2, 3, phi, sys)},                 // exp(-i phi Z2Z3)
      {RfPulse{kPi / 2.0, Axis::Y, {2}}},
      three_body(-1),
      selective_x(1, -kPi / 2.0),                        // exp(-i pi/4 X1)
      {RfPulse{kPi / 2.0, Axis::Y, {3}}},
  };

  // Emit in time order: rightmost factor first, each block already
  // time-ordered internally.
  PulseSequence seq;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    seq.insert(seq.end(), it->begin(), it->end());
  return seq;
}

Operator simulate_sequence(const PulseSequence& seq, const SpinSystem& sys) {
  sys.validate();
  const int dim = 1 << sys.n;
  Operator u = Operator::Identity(dim, dim);
  for (const PulseEvent& event : seq) {
    const Operator step = std::visit(
        [&](const auto& e) -> Operator {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, RfPulse>)
            return rf_pulse_unitary(e, sys.n);
          else if constexpr (std::is_same_v<E, CouplingDelay>)
            return coupling_delay_unitary(e, sys);
          else if constexpr (std::is_same_v<E, ZRotation>)
            return z_rotation_unitary(e, sys.n);
          else if constexpr (std::is_same_v<E, PauliRotation>)
            return pauli_rotation_unitary(e);
          else
            throw std::invalid_argument(
                "gradient events are not unitary; simulate them at state level");
        },
        event);
    u = step * u;
  }
  return u;
}

double fidelity(const Operator& u, const Operator& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw std::invalid_argument("fidelity dimension mismatch");
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

double total_delay(const PulseSequence& seq) {
  double total = 0.0;
  for (const PulseEvent& event : seq)
    if (const auto* d = std::get_if<CouplingDelay>(&event)) total += d->tau;
  return total;
}

std::string serialize(const PulseSequence& seq) {
  std::string out;
  for (const PulseEvent& event : seq) {
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, RfPulse>) {
            out += "RF axis=";
            out += (e.axis == Axis::X ? 'x' : 'y');
            out += " angle=" + format_g15(e.angle) + " spins=";
            for (std::size_t k = 0; k < e.spins.size(); ++k) {
              if (k) out += ',';
              out += std::to_string(e.spins[k]);
            }
          } else if constexpr (std::is_same_v<E, CouplingDelay>) {
            out += "DELAY pair=" + std::to_string(e.first) + "," +
                   std::to_string(e.second) + " tau=" + format_g15(e.tau);
          } else if constexpr (std::is_same_v<E, ZRotation>) {
            out += "ZROT spin=" + std::to_string(e.spin) +
                   " angle=" + format_g15(e.angle);
          } else if constexpr (std::is_same_v<E, PauliRotation>) {
            std::string letters;
            for (PauliLetter l : e.string.letters()) letters += to_char(l);
            out += "PAULIROT angle=" + format_g15(e.angle) + " string=" + letters;
          } else {
            out += "GRAD";
          }
        },
        event);
    out += '\n';
  }
  return out;
}

}  // namespace xychain

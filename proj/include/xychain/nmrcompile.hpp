#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "xychain/spinops.hpp"

namespace xychain {

// Heteronuclear spin system: resonance offsets nu (Hz), symmetric scalar
// coupling matrix j (Hz, zero diagonal) and per-spin gyromagnetic weights
// in relative units. Spins are 1-based throughout this module.
struct SpinSystem {
  int n = 3;
  std::vector<double> nu;
  Eigen::MatrixXd j;
  std::vector<double> gamma;

  double coupling(int a, int b) const;
  void validate() const;

  // 13C2-labelled trichloroethylene, C1-H2-C3: J12 = 200.9 Hz,
  // J23 = 9.16 Hz, J13 = 103.1 Hz, nu3 = nu1 + 904.4 Hz, and the 1H/13C
  // gyromagnetic ratio ~3.977 on the middle spin.
  static SpinSystem tce();
};

inline constexpr double kGammaRatioHC = 3.977;

enum class Axis { X, Y };

// Ideal zero-width rf pulse [angle]_axis^spins = exp(+i angle/2 sum sigma).
struct RfPulse {
  double angle;
  Axis axis;
  std::vector<int> spins;
};

// Free J-coupling evolution exp(-i pi J tau/2 Zj Zl) for time tau, with
// every other coupling refocused.
struct CouplingDelay {
  int first;
  int second;
  double tau;
};

// Frame z rotation exp(+i angle/2 Z_spin).
struct ZRotation {
  double angle;
  int spin;
};

// z-gradient crusher dephasing all transverse terms. Not unitary; only
// meaningful in state-level simulation.
struct GradientZ {};

// Ideal multi-spin rotation exp(-i angle P) for a +1-phase string P.
// Stands in for the three-body exponentials that the hardware-level event
// kinds cannot express; compiled away by the expanding compiler.
struct PauliRotation {
  double angle;
  PauliString string;
};

using PulseEvent =
    std::variant<RfPulse, CouplingDelay, ZRotation, GradientZ, PauliRotation>;

// Events in time order, first event applied first.
using PulseSequence = std::vector<PulseEvent>;

Operator rf_pulse_unitary(const RfPulse& pulse, int n);
Operator coupling_delay_unitary(const CouplingDelay& delay, const SpinSystem& sys);
Operator z_rotation_unitary(const ZRotation& rot, int n);
Operator pauli_rotation_unitary(const PauliRotation& rot);

// Delay realizing exp(-i angle Zj Zl); negative angles are lifted by 2 pi
// so the duration stays non-negative.
CouplingDelay delay_for_angle(int first, int second, double angle,
                              const SpinSystem& sys);

// Tseng-style composite realizing exp(-sign i pi/8 Z1Z2Z3) from pulses on
// the middle spin and J12/J23 delays. sign is +1 or -1.
PulseSequence zzz_block(const SpinSystem& sys, int sign);

// exp(+i angle/2 X_spin) on one end carbon, built from nonselective
// carbon pulses around a frame z rotation.
PulseSequence selective_x_block(int spin, double angle);

// exp(+i pi/2 (Z1 + Z3)) from two nonselective carbon pulses.
PulseSequence z_double_block();

// Full pulse program for the chain propagator at phase phi (reduced mod
// 2 pi). With expand = false the three-body exponentials stay as ideal
// PauliRotation events and the end-carbon x pulses as selective rf events;
// with expand = true both are replaced by their composite blocks and the
// paired z rotation by z_double_block, leaving only hardware-level events.
PulseSequence compile_u(const SpinSystem& sys, double phi, bool expand);

// Ordered product of the event unitaries, first event applied first.
// Gradient events are rejected here: they are not unitary.
Operator simulate_sequence(const PulseSequence& seq, const SpinSystem& sys);

// |tr(u^dag v)| / dim: 1 exactly when u and v agree up to a global phase.
double fidelity(const Operator& u, const Operator& v);

// Total duration: the sum of delay times, rf pulses being zero-width.
double total_delay(const PulseSequence& seq);

// Line-oriented text form, one event per line:
//   RF axis=<x|y> angle=<rad> spins=<comma-list>
//   DELAY pair=<j>,<l> tau=<sec>
//   ZROT spin=<j> angle=<rad>
//   GRAD
//   PAULIROT angle=<rad> string=<letters>
std::string serialize(const PulseSequence& seq);

}  // namespace xychain

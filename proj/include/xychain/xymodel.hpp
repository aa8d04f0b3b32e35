#pragma once

#include <utility>
#include <vector>

#include "xychain/spinops.hpp"

namespace xychain {

// Nearest-neighbour XY chain. Couplings are per-bond angular frequencies
// (hbar = 1); couplings[b] joins spins b+1 and b+2.
struct XYChainSpec {
  int n = 3;
  std::vector<double> couplings;

  static XYChainSpec uniform(int n, double j);
};

// One factor exp(-i theta P) of a product decomposition. A FactorSequence
// lists factors in operator-product order: the front factor is leftmost in
// the product and therefore applied last in time.
struct Factor {
  double theta;
  PauliString string;
};
using FactorSequence = std::vector<Factor>;

// Three half-weighted Pauli strings obeying [Lx, Ly] = i Lz and cyclic;
// the operator components are embed(string) / 2.
struct AngularMomentumTriple {
  PauliString x, y, z;
};

// H = (1/2) sum_b J_b (X_b X_{b+1} + Y_b Y_{b+1}); commutes with the total
// z magnetization.
Operator build_xy_hamiltonian(const XYChainSpec& spec);

// The commuting split A = (X1X2 + Y2Y3)/2, B = (Y1Y2 + X2X3)/2 of the
// three-spin chain, with J (A + B) the uniform-J Hamiltonian.
std::pair<Operator, Operator> operators_ab(const XYChainSpec& spec);

// The angular-momentum triples generating the split: the A side is XXI/2,
// IYY/2, XZY/2 and the B side IXX/2, YYI/2, YZX/2.
std::pair<AngularMomentumTriple, AngularMomentumTriple> angular_momentum_triples();

// Six-factor product form of the uniform three-spin propagator at phase
// phi = J t / sqrt(2): two fixed pi/8 conjugations around each variable
// two-spin rotation.
FactorSequence decompose_factors(double phi);

// Multiply a FactorSequence down to a matrix (front factor leftmost).
Operator factor_product(const FactorSequence& factors);

// Closed-form 8x8 propagator at phase phi. Entries are built from cos^2,
// sin^2, cos 2phi and sin 2phi; entries that couple different
// magnetization sectors are exactly zero.
Operator propagator_analytic(double phi);

// The propagator at phi = pi/2: a signed permutation that swaps the chain
// ends almost in place, |001> <-> -|100>, |011> <-> -|110>, and flips the
// sign of the single-flip middle states.
Operator pst_unitary();

}  // namespace xychain

#include "xychain/xymodel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xychain {

namespace {

constexpr Complex kImag{0.0, 1.0};

void validate(const XYChainSpec& spec) {
  if (spec.n < 2 || spec.n > kMaxSpins)
    throw std::invalid_argument("chain needs 2..12 spins");
  if (static_cast<int>(spec.couplings.size()) != spec.n - 1)
    throw std::invalid_argument("need one coupling per bond");
  for (double j : spec.couplings)
    if (!std::isfinite(j)) throw std::invalid_argument("couplings must be finite");
}

// X..X or Y..Y on the bond (b, b+1), 1-based.
PauliString bond_string(int n, int b, PauliLetter letter) {
  std::vector<PauliLetter> letters(n, PauliLetter::I);
  letters[b - 1] = letter;
  letters[b] = letter;
  return PauliString(std::move(letters));
}

}  // namespace

XYChainSpec XYChainSpec::uniform(int n, double j) {
  return XYChainSpec{n, std::vector<double>(static_cast<std::size_t>(n - 1), j)};
}

Operator build_xy_hamiltonian(const XYChainSpec& spec) {
  validate(spec);
  const int dim = 1 << spec.n;
  Operator h = Operator::Zero(dim, dim);
  for (int b = 1; b < spec.n; ++b) {
    const double j = spec.couplings[b - 1];
    h += 0.5 * j * (embed(bond_string(spec.n, b, PauliLetter::X)) +
                    embed(bond_string(spec.n, b, PauliLetter::Y)));
  }
  return h;
}

std::pair<Operator, Operator> operators_ab(const XYChainSpec& spec) {
  validate(spec);
  if (spec.n != 3)
    throw std::invalid_argument("A/B split exists only for the 3-spin chain");
  using enum PauliLetter;
  const Operator a = 0.5 * (embed({X, X, I}) + embed({I, Y, Y}));
  const Operator b = 0.5 * (embed({Y, Y, I}) + embed({I, X, X}));
  return {a, b};
}

std::pair<AngularMomentumTriple, AngularMomentumTriple> angular_momentum_triples() {
  using enum PauliLetter;
  AngularMomentumTriple la{PauliString{X, X, I}, PauliString{I, Y, Y},
                           PauliString{X, Z, Y}};
  AngularMomentumTriple lb{PauliString{I, X, X}, PauliString{Y, Y, I},
                           PauliString{Y, Z, X}};
  return {la, lb};
}

FactorSequence decompose_factors(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  using enum PauliLetter;
  const double eighth = std::numbers::pi / 8.0;
  return {
      {eighth, PauliString{X, Z, Y}},
      {phi, PauliString{X, X, I}},
      {-eighth, PauliString{X, Z, Y}},
      {eighth, PauliString{Y, Z, X}},
      {phi, PauliString{I, X, X}},
      {-eighth, PauliString{Y, Z, X}},
  };
}

Operator factor_product(const FactorSequence& factors) {
  if (factors.empty()) throw std::invalid_argument("empty factor sequence");
  const int dim = 1 << factors.front().string.size();
  Operator u = Operator::Identity(dim, dim);
  for (const Factor& f : factors) u = u * exp_pauli_string(f.theta, f.string);
  return u;
}

Operator propagator_analytic(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  const double c2 = std::cos(phi) * std::cos(phi);
  const double s2 = std::sin(phi) * std::sin(phi);
  const double c2f = std::cos(2.0 * phi);
  const Complex hop = -kImag / std::sqrt(2.0) * std::sin(2.0 * phi);

  Operator u = Operator::Zero(8, 8);
  u(0, 0) = 1.0;
  u(7, 7) = 1.0;
  // One excitation (|001>,|010>,|100>) and two excitations
  // (|011>,|101>,|110>) carry identical 3x3 blocks; lo/hi are the chain
  // ends, mid the middle spin.
  for (auto [lo, mid, hi] : {std::array{1, 2, 4}, std::array{3, 5, 6}}) {
    u(lo, lo) = c2;
    u(lo, mid) = hop;
    u(lo, hi) = -s2;
    u(mid, lo) = hop;
    u(mid, mid) = c2f;
    u(mid, hi) = hop;
    u(hi, lo) = -s2;
    u(hi, mid) = hop;
    u(hi, hi) = c2;
  }
  return u;
}

Operator pst_unitary() { return propagator_analytic(std::numbers::pi / 2.0); }

}  // namespace xychain

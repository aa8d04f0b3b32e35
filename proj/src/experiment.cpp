#include "xychain/experiment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xychain {

namespace {

constexpr Complex kImag{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

PauliString single_site(int n, int spin, PauliLetter letter) {
  std::vector<PauliLetter> letters(n, PauliLetter::I);
  letters[spin - 1] = letter;
  return PauliString(std::move(letters));
}

}  // namespace

DeviationState::DeviationState(Operator m) : matrix(std::move(m)) {
  if (!is_hermitian(matrix))
    throw std::invalid_argument("deviation state must be Hermitian");
  if (std::abs(matrix.trace()) > kEqTol * static_cast<double>(matrix.rows()))
    throw std::invalid_argument("deviation state must be traceless");
}

double DeviationState::coefficient(const PauliString& p) const {
  return hs_coefficient(matrix, p);
}

QubitState::QubitState(Complex a, Complex b) : alpha(a), beta(b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
    throw std::invalid_argument("qubit state must be normalized");
}

DeviationState equilibrium_state(const SpinSystem& sys) {
  sys.validate();
  const int dim = 1 << sys.n;
  Operator m = Operator::Zero(dim, dim);
  for (int spin = 1; spin <= sys.n; ++spin)
    m += 0.5 * sys.gamma[spin - 1] *
         embed(single_site(sys.n, spin, PauliLetter::Z));
  return DeviationState(std::move(m));
}

PulseSequence preparation_sequence() {
  return {
      RfPulse{kPi / 2.0, Axis::Y, {2}},
      RfPulse{kPi / 2.0, Axis::Y, {3}},
      GradientZ{},
      RfPulse{kPi / 2.0, Axis::X, {1}},
  };
}

DeviationState apply_gradient(const DeviationState& s) {
  Operator m = s.matrix.diagonal().asDiagonal();
  return DeviationState(std::move(m));
}

DeviationState evolve(const DeviationState& s, const Operator& u) {
  if (!is_unitary(u)) throw std::invalid_argument("evolve needs a unitary");
  if (u.rows() != s.matrix.rows())
    throw std::invalid_argument("evolve dimension mismatch");
  return DeviationState(u * s.matrix * u.adjoint());
}

DeviationState apply_sequence(const DeviationState& s, const PulseSequence& seq,
                              const SpinSystem& sys) {
  DeviationState state = s;
  for (const PulseEvent& event : seq) {
    if (std::holds_alternative<GradientZ>(event)) {
      state = apply_gradient(state);
    } else {
      state = evolve(state, simulate_sequence({event}, sys));
    }
  }
  return state;
}

Operator branch_propagator(PropagatorKind which, double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  using enum PauliLetter;
  const Operator id = Operator::Identity(8, 8);
  const Complex amp = -kImag / std::sqrt(2.0) * std::sin(phi);
  switch (which) {
    case PropagatorKind::A:
      return std::cos(phi) * id +
             amp * (embed({X, X, I}) + embed({I, Y, Y}));
    case PropagatorKind::B:
      return std::cos(phi) * id +
             amp * (embed({Y, Y, I}) + embed({I, X, X}));
    case PropagatorKind::Full:
      return branch_propagator(PropagatorKind::A, phi) *
             branch_propagator(PropagatorKind::B, phi);
  }
  throw std::invalid_argument("invalid propagator kind");
}

std::vector<AmplitudeSample> amplitude_curve(const std::vector<double>& phis,
                                             Branch branch) {
  using enum PauliLetter;
  const PauliLetter end_letter = branch == Branch::A ? Y : X;
  const DeviationState initial(embed(single_site(3, 1, end_letter)));
  const PauliString c1_term = single_site(3, 1, end_letter);
  const PauliString c3_term{Z, Z, end_letter};

  std::vector<AmplitudeSample> samples;
  samples.reserve(phis.size());
  for (double phi : phis) {
    const Operator u = branch_propagator(
        branch == Branch::A ? PropagatorKind::A : PropagatorKind::B, phi);
    const DeviationState evolved = evolve(initial, u);
    samples.push_back({phi, evolved.coefficient(c1_term),
                       -evolved.coefficient(c3_term)});
  }
  return samples;
}

CosFit fit_cos2(const std::vector<AmplitudeSample>& data) {
  if (data.size() < 3) throw std::invalid_argument("fit needs at least 3 samples");
  bool all_equal = true;
  for (const auto& s : data)
    if (s.phi != data.front().phi) all_equal = false;
  if (all_equal) throw std::invalid_argument("fit design is degenerate: all phi equal");

  double cc = 0.0, cy = 0.0, ss = 0.0, sy = 0.0;
  for (const auto& s : data) {
    const double c = std::cos(s.phi) * std::cos(s.phi);
    const double sn = std::sin(s.phi) * std::sin(s.phi);
    cc += c * c;
    cy += c * s.amp_c1;
    ss += sn * sn;
    sy += sn * s.amp_c3;
  }
  if (cc == 0.0 || ss == 0.0)
    throw std::invalid_argument("fit design is degenerate: model curve vanishes");

  CosFit fit;
  fit.a1 = cy / cc;
  fit.a3 = sy / ss;
  fit.residuals_c1.reserve(data.size());
  fit.residuals_c3.reserve(data.size());
  for (const auto& s : data) {
    fit.residuals_c1.push_back(
        s.amp_c1 - fit.a1 * std::cos(s.phi) * std::cos(s.phi));
    fit.residuals_c3.push_back(
        s.amp_c3 - fit.a3 * std::sin(s.phi) * std::sin(s.phi));
  }
  return fit;
}

PstResult pst_transfer(const QubitState& q, bool correct_phase) {
  Eigen::VectorXcd input = Eigen::VectorXcd::Zero(8);
  input(0) = q.alpha;  // |000>
  input(4) = q.beta;   // |100>, excitation on spin 1

  Eigen::VectorXcd final_state = pst_unitary() * input;
  if (correct_phase) {
    // sigma_z on spin 3 flips the sign of every odd basis index.
    for (int k = 1; k < 8; k += 2) final_state(k) = -final_state(k);
  }

  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(8);
  target(0) = q.alpha;  // |000>
  target(1) = q.beta;   // |001>, excitation on spin 3
  const double fid = std::norm(target.dot(final_state));
  return PstResult{std::move(final_state), fid, correct_phase};
}

}  // namespace xychain

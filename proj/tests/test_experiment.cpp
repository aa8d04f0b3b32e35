#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "xychain/experiment.hpp"

using namespace xychain;
using enum PauliLetter;

namespace {

constexpr double kPi = std::numbers::pi;
const SpinSystem kSys = SpinSystem::tce();

std::vector<PauliString> all_strings(int n) {
  std::vector<PauliString> out;
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 4;
  for (int code = 0; code < total; ++code) {
    std::vector<PauliLetter> letters;
    int c = code;
    for (int k = 0; k < n; ++k) {
      letters.push_back(static_cast<PauliLetter>(c % 4));
      c /= 4;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

double hs_norm(const Operator& m) {
  return std::sqrt((m.adjoint() * m).trace().real());
}

}  // namespace

TEST_CASE("equilibrium state is the weighted z magnetization") {
  const DeviationState eq = equilibrium_state(kSys);
  CHECK(eq.coefficient(PauliString{Z, I, I}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eq.coefficient(PauliString{I, I, Z}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eq.coefficient(PauliString{I, Z, I}) ==
        doctest::Approx(0.5 * 3.977).epsilon(1e-14));
  CHECK(std::abs(eq.matrix.trace()) < 1e-14);

  SpinSystem scaled = kSys;
  scaled.gamma = {1.0, 4.0, 1.0};
  const DeviationState eq4 = equilibrium_state(scaled);
  CHECK(eq4.coefficient(PauliString{I, Z, I}) /
            eq4.coefficient(PauliString{Z, I, I}) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("gradient keeps longitudinal terms and kills transverse ones") {
  const DeviationState x1(embed(PauliString{X, I, I}));
  CHECK(apply_gradient(x1).matrix.cwiseAbs().maxCoeff() < 1e-15);

  const DeviationState zz(embed(PauliString{Z, Z, I}));
  CHECK(max_abs_diff(apply_gradient(zz).matrix, embed(PauliString{Z, Z, I})) <
        1e-15);

  // state after the first two preparation pulses: gC Iz1 - gC Ix3 - gH Ix2
  const double gc = 1.0, gh = 3.977;
  const DeviationState mixed(
      0.5 * gc * embed(PauliString{Z, I, I}) -
      0.5 * gc * embed(PauliString{I, I, X}) -
      0.5 * gh * embed(PauliString{I, X, I}));
  const DeviationState cleaned = apply_gradient(mixed);
  CHECK(max_abs_diff(cleaned.matrix,
                     Operator(0.5 * gc * embed(PauliString{Z, I, I}))) < 1e-14);
}

TEST_CASE("preparation pipeline produces the end-spin transverse state") {
  const DeviationState prepared =
      apply_sequence(equilibrium_state(kSys), preparation_sequence(), kSys);

  // proportional to Y1 with a positive scalar (gamma_C / 2)
  CHECK(prepared.coefficient(PauliString{Y, I, I}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  for (const PauliString& p : all_strings(3)) {
    if (p == PauliString{Y, I, I} || p == PauliString{I, I, I}) continue;
    CHECK(std::abs(prepared.coefficient(p)) < 1e-10);
  }

  // without the crusher, transverse junk survives on spins 2 and 3
  PulseSequence no_grad;
  for (const PulseEvent& e : preparation_sequence())
    if (!std::holds_alternative<GradientZ>(e)) no_grad.push_back(e);
  const DeviationState dirty =
      apply_sequence(equilibrium_state(kSys), no_grad, kSys);
  int extra = 0;
  for (const PauliString& p : all_strings(3)) {
    if (p == PauliString{Y, I, I} || p == PauliString{I, I, I}) continue;
    if (std::abs(dirty.coefficient(p)) > 1e-10) ++extra;
  }
  CHECK(extra >= 2);

  // linearity: a zero equilibrium stays zero
  SpinSystem cold = kSys;
  cold.gamma = {0.0, 0.0, 0.0};
  const DeviationState nothing =
      apply_sequence(equilibrium_state(cold), preparation_sequence(), kSys);
  CHECK(nothing.matrix.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("evolve conjugates and preserves structure") {
  const DeviationState y1(embed(PauliString{Y, I, I}));

  CHECK(max_abs_diff(evolve(y1, Operator::Identity(8, 8)).matrix, y1.matrix) == 0.0);

  // at the transfer point the end-spin state lands on spin 3, antiphase
  const DeviationState moved =
      evolve(y1, branch_propagator(PropagatorKind::A, kPi / 2.0));
  CHECK(max_abs_diff(moved.matrix, Operator(-embed(PauliString{Z, Z, Y}))) < 1e-12);

  const DeviationState x1(embed(PauliString{X, I, I}));
  const DeviationState movedx =
      evolve(x1, branch_propagator(PropagatorKind::Full, kPi / 2.0));
  CHECK(max_abs_diff(movedx.matrix, Operator(-embed(PauliString{Z, Z, X}))) < 1e-12);

  CHECK_THROWS_AS(evolve(y1, Operator(2.0 * Operator::Identity(8, 8))),
                  std::invalid_argument);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 10; ++trial) {
    const Operator u = branch_propagator(PropagatorKind::Full, angle(rng));
    const DeviationState out = evolve(y1, u);
    CHECK(is_hermitian(out.matrix));
    CHECK(std::abs(out.matrix.trace()) < 1e-12);
    CHECK(hs_norm(out.matrix) == doctest::Approx(hs_norm(y1.matrix)).epsilon(1e-12));
  }
}

TEST_CASE("branch propagators take their closed forms") {
  const Complex im{0.0, 1.0};
  for (double phi : {0.35, 1.2, 2.9}) {
    const Operator expected =
        std::cos(phi) * Operator::Identity(8, 8) -
        im / std::sqrt(2.0) * std::sin(phi) *
            (embed(PauliString{X, X, I}) + embed(PauliString{I, Y, Y}));
    CHECK(max_abs_diff(branch_propagator(PropagatorKind::A, phi), expected) < 1e-14);

    // U_A U_B reproduces the full propagator, in either order
    const Operator ua = branch_propagator(PropagatorKind::A, phi);
    const Operator ub = branch_propagator(PropagatorKind::B, phi);
    CHECK(max_abs_diff(Operator(ua * ub), propagator_analytic(phi)) < 1e-12);
    CHECK(max_abs_diff(Operator(ub * ua), propagator_analytic(phi)) < 1e-12);

    // B leaves the branch-A initial state alone
    CHECK(commutator(ub, embed(PauliString{Y, I, I})).cwiseAbs().maxCoeff() < 1e-13);

    // replacing the full propagator by the branch one is exact on the
    // branch initial states
    const DeviationState y1(embed(PauliString{Y, I, I}));
    CHECK(max_abs_diff(evolve(y1, Operator(ua * ub)).matrix,
                       evolve(y1, ua).matrix) < 1e-12);
    const DeviationState x1(embed(PauliString{X, I, I}));
    CHECK(max_abs_diff(evolve(x1, Operator(ua * ub)).matrix,
                       evolve(x1, ub).matrix) < 1e-12);
  }
}

TEST_CASE("amplitude curves follow cos^2 and sin^2") {
  const std::vector<double> phis = {0.0, kPi / 4.0, kPi / 2.0, 1.9, 4.2};
  for (Branch branch : {Branch::A, Branch::B}) {
    const auto samples = amplitude_curve(phis, branch);
    REQUIRE(samples.size() == phis.size());
    for (const auto& s : samples) {
      CHECK(s.amp_c1 ==
            doctest::Approx(std::cos(s.phi) * std::cos(s.phi)).epsilon(1e-12));
      CHECK(s.amp_c3 ==
            doctest::Approx(std::sin(s.phi) * std::sin(s.phi)).epsilon(1e-12));
      CHECK(s.amp_c1 + s.amp_c3 == doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  // the intermediate antiphase term carries the rest of the weight; its
  // sign differs between the branches
  const double phi = kPi / 4.0;
  const DeviationState y1(embed(PauliString{Y, I, I}));
  const DeviationState ra = evolve(y1, branch_propagator(PropagatorKind::A, phi));
  CHECK(ra.coefficient(PauliString{Z, X, I}) ==
        doctest::Approx(std::sin(2.0 * phi) / std::sqrt(2.0)).epsilon(1e-12));
  const DeviationState x1(embed(PauliString{X, I, I}));
  const DeviationState rb = evolve(x1, branch_propagator(PropagatorKind::B, phi));
  CHECK(rb.coefficient(PauliString{Z, Y, I}) ==
        doctest::Approx(-std::sin(2.0 * phi) / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("cos^2 fit recovers scale factors") {
  std::vector<double> phis;
  for (int k = 0; k <= 40; ++k) phis.push_back(2.0 * kPi * k / 40.0);
  const auto samples = amplitude_curve(phis, Branch::A);

  const CosFit unit = fit_cos2(samples);
  CHECK(unit.a1 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(unit.a3 == doctest::Approx(1.0).epsilon(1e-9));
  for (double r : unit.residuals_c1) CHECK(std::abs(r) < 1e-9);

  // data in spectrometer units scale the fit constants linearly
  auto scaled = samples;
  for (auto& s : scaled) {
    s.amp_c1 *= kReportedFitC1;
    s.amp_c3 *= kReportedFitC3;
  }
  const CosFit gains = fit_cos2(scaled);
  CHECK(gains.a1 == doctest::Approx(6.20).epsilon(1e-9));
  CHECK(gains.a3 == doctest::Approx(5.65).epsilon(1e-9));

  CHECK_THROWS_AS(fit_cos2({samples[0], samples[0], samples[0]}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_cos2({samples[0], samples[1]}), std::invalid_argument);
}

TEST_CASE("state transfer across the chain") {
  const PstResult plain = pst_transfer(QubitState(1.0, 0.0), false);
  CHECK(plain.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(plain.state(0) - Complex{1.0, 0.0}) < 1e-12);

  // a pure excitation arrives on spin 3 with a minus sign
  const PstResult flipped = pst_transfer(QubitState(0.0, 1.0), false);
  CHECK(std::abs(flipped.state(1) + Complex{1.0, 0.0}) < 1e-12);

  std::mt19937 rng(41);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    Complex alpha{gauss(rng), gauss(rng)};
    Complex beta{gauss(rng), gauss(rng)};
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    const QubitState q(alpha / norm, beta / norm);

    const PstResult corrected = pst_transfer(q, true);
    CHECK(corrected.fidelity >= 1.0 - 1e-12);

    // uncorrected, the output is exactly |00>(alpha|0> - beta|1>)
    const PstResult raw = pst_transfer(q, false);
    CHECK(std::abs(raw.state(0) - q.alpha) < 1e-12);
    CHECK(std::abs(raw.state(1) + q.beta) < 1e-12);
    for (int k = 2; k < 8; ++k) CHECK(std::abs(raw.state(k)) < 1e-12);
  }

  CHECK_THROWS_AS(QubitState(0.8, 0.8), std::invalid_argument);
}

TEST_CASE("full pipeline: preparation, compiled transfer, readout") {
  const DeviationState prepared =
      apply_sequence(equilibrium_state(kSys), preparation_sequence(), kSys);
  const Operator u = simulate_sequence(compile_u(kSys, kPi / 2.0, true), kSys);
  const DeviationState final_state = evolve(prepared, u);

  // everything sits on -Z1Z2Y3, times the preparation scalar gamma_C/2
  CHECK(final_state.coefficient(PauliString{Z, Z, Y}) ==
        doctest::Approx(-0.5).epsilon(1e-8));
  for (const PauliString& p : all_strings(3)) {
    if (p == PauliString{Z, Z, Y} || p == PauliString{I, I, I}) continue;
    CHECK(std::abs(final_state.coefficient(p)) < 1e-8);
  }
}

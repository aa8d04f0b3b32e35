#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "xychain/spinops.hpp"

using namespace xychain;
using enum PauliLetter;

namespace {

const Complex kI{0.0, 1.0};

PauliString random_string(std::mt19937& rng, int n, bool real_phase = false) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> turns(0, 3);
  std::vector<PauliLetter> letters;
  for (int k = 0; k < n; ++k)
    letters.push_back(static_cast<PauliLetter>(letter(rng)));
  int t = turns(rng);
  if (real_phase) t = (t / 2) * 2;
  return PauliString(std::move(letters), t);
}

}  // namespace

TEST_CASE("pauli matrices obey the algebra") {
  const Operator z = pauli_matrix(Z);
  CHECK(z(0, 0) == Complex{1.0, 0.0});
  CHECK(z(1, 1) == Complex{-1.0, 0.0});
  CHECK(z(0, 1) == Complex{0.0, 0.0});

  // X flips |0> (spin up) to |1>
  Eigen::Vector2cd up;
  up << 1.0, 0.0;
  const Eigen::Vector2cd flipped = pauli_matrix(X) * up;
  CHECK(flipped(0) == Complex{0.0, 0.0});
  CHECK(flipped(1) == Complex{1.0, 0.0});

  CHECK(max_abs_diff(pauli_matrix(X) * pauli_matrix(Y), kI * pauli_matrix(Z)) == 0.0);
  CHECK(max_abs_diff(pauli_matrix(Y) * pauli_matrix(Z), kI * pauli_matrix(X)) == 0.0);
  CHECK(max_abs_diff(pauli_matrix(Z) * pauli_matrix(X), kI * pauli_matrix(Y)) == 0.0);
}

TEST_CASE("embedding follows the basis convention") {
  // spin 1 is the most significant bit: ZII is diag(1,1,1,1,-1,-1,-1,-1)
  const Operator zii = embed(PauliString{Z, I, I});
  for (int k = 0; k < 8; ++k)
    CHECK(zii(k, k) == Complex{k < 4 ? 1.0 : -1.0, 0.0});

  CHECK(max_abs_diff(embed(PauliString{I, I, I}), Operator::Identity(8, 8)) == 0.0);
}

TEST_CASE("symbolic products match matrix products") {
  const PauliString xxi{X, X, I};
  const PauliString yyi{Y, Y, I};
  const PauliString product = xxi * yyi;
  CHECK(product == PauliString({Z, Z, I}, 2));  // -ZZI
  CHECK(max_abs_diff(embed(xxi) * embed(yyi), embed(product)) == 0.0);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const PauliString p = random_string(rng, n);
    const PauliString q = random_string(rng, n);
    CHECK(max_abs_diff(embed(p) * embed(q), embed(p * q)) < 1e-15);
  }
}

TEST_CASE("pauli strings square to phase^2 identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliString p = random_string(rng, 3);
    const PauliString sq = p * p;
    for (PauliLetter l : sq.letters()) CHECK(l == I);
    CHECK(sq.quarter_turns() == (2 * p.quarter_turns()) % 4);
  }
}

TEST_CASE("string parsing and formatting") {
  CHECK(PauliString::parse("XZY") == PauliString{X, Z, Y});
  CHECK(PauliString::parse("-ZZI") == PauliString({Z, Z, I}, 2));
  CHECK(PauliString::parse("iXY") == PauliString({X, Y}, 1));
  CHECK(PauliString::parse("-iY") == PauliString({Y}, 3));
  CHECK(PauliString({X, Z, Y}).to_string() == "+XZY");
  CHECK(PauliString({Z, Z, I}, 2).to_string() == "-ZZI");
  CHECK_THROWS_AS(PauliString::parse("XQZ"), std::invalid_argument);
}

TEST_CASE("commutator basics") {
  // [Lx, Ly] = i Lz for the A-side angular momentum triple
  const Operator lx = 0.5 * embed(PauliString{X, X, I});
  const Operator ly = 0.5 * embed(PauliString{I, Y, Y});
  const Operator lz = 0.5 * embed(PauliString{X, Z, Y});
  CHECK(max_abs_diff(commutator(lx, ly), kI * lz) < 1e-15);

  const Operator a = lx + ly;
  const Operator b = 0.5 * (embed(PauliString{Y, Y, I}) + embed(PauliString{I, X, X}));
  CHECK(commutator(a, b).cwiseAbs().maxCoeff() < 1e-15);

  const Operator any = embed(PauliString{Y, Z, X});
  CHECK(commutator(Operator::Identity(8, 8), any).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(commutator(Operator::Identity(2, 2), Operator::Identity(4, 4)),
                  std::invalid_argument);
}

TEST_CASE("exp_pauli_string closed form") {
  const PauliString xxi{X, X, I};
  CHECK(max_abs_diff(exp_pauli_string(0.0, xxi), Operator::Identity(8, 8)) == 0.0);

  // theta = pi/2: cos vanishes, leaving -i times the string
  const Operator quarter = exp_pauli_string(std::numbers::pi / 2.0, xxi);
  CHECK(max_abs_diff(quarter, Operator(-kI * embed(xxi))) < 1e-15);

  // against the eigendecomposition oracle
  const PauliString xzy{X, Z, Y};
  CHECK(max_abs_diff(exp_pauli_string(0.7, xzy), exp_hermitian(embed(xzy), 0.7)) < 1e-9);

  CHECK_THROWS_AS(exp_pauli_string(0.3, PauliString({X, X, I}, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(exp_pauli_string(0.3, PauliString({X, X, I}, 3)),
                  std::invalid_argument);
}

TEST_CASE("exp_pauli_string inverse pairs cancel") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    const PauliString p = random_string(rng, 3, /*real_phase=*/true);
    const double theta = angle(rng);
    const Operator u = exp_pauli_string(theta, p) * exp_pauli_string(-theta, p);
    CHECK(max_abs_diff(u, Operator::Identity(8, 8)) < 1e-12);
    CHECK(is_unitary(exp_pauli_string(theta, p), 1e-12));
  }
}

TEST_CASE("exp_hermitian is the oracle") {
  const Operator zero = Operator::Zero(8, 8);
  CHECK(max_abs_diff(exp_hermitian(zero, 1.7), Operator::Identity(8, 8)) < 1e-15);

  // diagonal generator: e^{-i pi/2} on the upper block, e^{+i pi/2} below
  const Operator u = exp_hermitian(embed(PauliString{Z, I, I}), std::numbers::pi / 2.0);
  for (int k = 0; k < 8; ++k) {
    const Complex expected = k < 4 ? -kI : kI;
    CHECK(std::abs(u(k, k) - expected) < 1e-12);
  }

  std::mt19937 rng(31);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    Operator h = Operator::Zero(8, 8);
    for (int term = 0; term < 5; ++term)
      h += coeff(rng) * embed(PauliString(random_string(rng, 3).letters()));
    const Operator evolved = exp_hermitian(h, coeff(rng));
    CHECK(is_unitary(evolved, 1e-10));
  }

  Operator skew = Operator::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(exp_hermitian(skew, 1.0), std::invalid_argument);
}

TEST_CASE("hs_coefficient picks out pauli coefficients") {
  CHECK(hs_coefficient(embed(PauliString{Y, I, I}), PauliString{Y, I, I}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hs_coefficient(embed(PauliString{Y, I, I}), PauliString{X, I, I}) ==
        doctest::Approx(0.0).epsilon(1e-14));

  // state evolved from Y1 at phi = 0.4: the surviving Y1 weight is cos^2
  const double phi = 0.4;
  const Operator ua =
      std::cos(phi) * Operator::Identity(8, 8) -
      kI / std::sqrt(2.0) * std::sin(phi) *
          (embed(PauliString{X, X, I}) + embed(PauliString{I, Y, Y}));
  const Operator rho = ua * embed(PauliString{Y, I, I}) * ua.adjoint();
  CHECK(hs_coefficient(rho, PauliString{Y, I, I}) ==
        doctest::Approx(std::cos(phi) * std::cos(phi)).epsilon(1e-12));
}

TEST_CASE("hs_coefficient recovers random pauli sums exactly") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const int dim = 1 << n;
    std::vector<std::pair<PauliString, double>> terms;
    Operator m = Operator::Zero(dim, dim);
    for (int t = 0; t < 6; ++t) {
      PauliString p(random_string(rng, n).letters());  // +1 phase
      const double c = coeff(rng);
      bool fresh = true;
      for (auto& [q, w] : terms)
        if (q == p) {
          w += c;
          fresh = false;
        }
      if (fresh) terms.emplace_back(p, c);
      m += c * embed(p);
    }
    for (const auto& [p, w] : terms)
      CHECK(hs_coefficient(m, p) == doctest::Approx(w).epsilon(1e-12));
  }
}

#include "xychain/spinops.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace xychain {

namespace {

constexpr Complex kImag{0.0, 1.0};

// Single-site products: kProductLetter[a][b] is the letter of a*b and
// kProductTurns[a][b] the phase as a power of i (X*Y = iZ and cyclic,
// reversed order picks up -i).
constexpr std::uint8_t kProductLetter[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr std::uint8_t kProductTurns[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

int checked_dim(const Operator& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("operator must be square and nonempty");
  return static_cast<int>(m.rows());
}

}  // namespace

char to_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  throw std::invalid_argument("invalid Pauli letter");
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(std::initializer_list<PauliLetter> letters)
    : letters_(letters) {}

PauliString::PauliString(std::vector<PauliLetter> letters, int quarter_turns)
    : letters_(std::move(letters)), quarter_turns_(((quarter_turns % 4) + 4) % 4) {}

PauliString PauliString::parse(std::string_view text) {
  int turns = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') turns = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    turns += 1;
    text.remove_prefix(1);
  }
  std::vector<PauliLetter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c));
  return PauliString(std::move(letters), turns);
}

Complex PauliString::phase() const {
  switch (quarter_turns_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (size() != rhs.size())
    throw std::invalid_argument("Pauli string length mismatch in product");
  std::vector<PauliLetter> letters(letters_.size());
  int turns = quarter_turns_ + rhs.quarter_turns_;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const auto a = static_cast<std::uint8_t>(letters_[k]);
    const auto b = static_cast<std::uint8_t>(rhs.letters_[k]);
    letters[k] = static_cast<PauliLetter>(kProductLetter[a][b]);
    turns += kProductTurns[a][b];
  }
  return PauliString(std::move(letters), turns);
}

std::string PauliString::to_string() const {
  std::string out;
  switch (quarter_turns_) {
    case 0: out = "+"; break;
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    default: out = "-i"; break;
  }
  for (PauliLetter l : letters_) out += to_char(l);
  return out;
}

Operator pauli_matrix(PauliLetter letter) {
  Operator m(2, 2);
  switch (letter) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, -kImag, kImag, 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Operator embed(const PauliString& p) {
  const int n = p.size();
  if (n < 1 || n > kMaxSpins)
    throw std::invalid_argument("Pauli string length out of range");
  Operator m = pauli_matrix(p.letters()[0]);
  for (int k = 1; k < n; ++k)
    m = kroneckerProduct(m, pauli_matrix(p.letters()[k])).eval();
  return p.phase() * m;
}

Operator commutator(const Operator& a, const Operator& b) {
  if (checked_dim(a) != checked_dim(b))
    throw std::invalid_argument("commutator dimension mismatch");
  return a * b - b * a;
}

Operator exp_pauli_string(double theta, const PauliString& p) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("rotation angle must be finite");
  if (!p.phase_is_real())
    throw std::invalid_argument(
        "exp_pauli_string needs a Hermitian generator (phase +1 or -1)");
  const Operator g = embed(p);
  const int dim = static_cast<int>(g.rows());
  return std::cos(theta) * Operator::Identity(dim, dim) -
         kImag * std::sin(theta) * g;
}

Operator exp_hermitian(const Operator& h, double t) {
  if (!std::isfinite(t))
    throw std::invalid_argument("evolution time must be finite");
  if (!is_hermitian(h))
    throw std::invalid_argument("exp_hermitian needs a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Operator> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const auto phases =
      (-kImag * t * solver.eigenvalues().array().cast<Complex>()).exp();
  return solver.eigenvectors() * phases.matrix().asDiagonal() *
         solver.eigenvectors().adjoint();
}

double hs_coefficient(const Operator& m, const PauliString& p) {
  const Operator e = embed(p);
  if (e.rows() != m.rows() || m.rows() != m.cols())
    throw std::invalid_argument("hs_coefficient dimension mismatch");
  return (m * e).trace().real() / static_cast<double>(m.rows());
}

bool is_hermitian(const Operator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Operator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const int dim = static_cast<int>(m.rows());
  return (m * m.adjoint() - Operator::Identity(dim, dim)).cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace xychain

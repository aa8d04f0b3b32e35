#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace xychain {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Hamiltonians, propagators and deviation
// density matrices all live here; n spins gives dim 2^n.
using Operator =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Hard cap on the spin count: 2^12 x 2^12 dense complex is the largest
// matrix the library will build.
inline constexpr int kMaxSpins = 12;

// Default tolerance for hermiticity/unitarity checks (max-entry norm).
inline constexpr double kEqTol = 1e-10;

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char to_char(PauliLetter l);
PauliLetter letter_from_char(char c);

// A phased tensor product of single-spin Pauli letters, one letter per
// spin. The phase is a fourth root of unity stored as a power of i, which
// keeps products of strings inside the type.
class PauliString {
 public:
  PauliString() = default;
  PauliString(std::initializer_list<PauliLetter> letters);
  explicit PauliString(std::vector<PauliLetter> letters, int quarter_turns = 0);

  // Parse "XZY", "-XZY", "iZZI", "-iYY".
  static PauliString parse(std::string_view text);

  const std::vector<PauliLetter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }

  // Phase as a power of i, in {0,1,2,3}.
  int quarter_turns() const { return quarter_turns_; }
  Complex phase() const;
  bool phase_is_real() const { return quarter_turns_ % 2 == 0; }

  // Symbolic product; the result is again a PauliString (group closure).
  PauliString operator*(const PauliString& rhs) const;
  bool operator==(const PauliString& rhs) const = default;

  std::string to_string() const;

 private:
  std::vector<PauliLetter> letters_;
  int quarter_turns_ = 0;
};

// 2x2 matrix of a single letter on the basis (|0>, |1>), |0> = spin up.
Operator pauli_matrix(PauliLetter letter);

// phase * (letter_1 (x) letter_2 (x) ... (x) letter_n). Spin 1 is the
// leftmost tensor factor and the most significant bit of the basis index,
// so the 2^n basis states are ordered |00..0>, |00..1>, ..., |11..1>.
Operator embed(const PauliString& p);

Operator commutator(const Operator& a, const Operator& b);

// exp(-i theta P) = cos(theta) I - i sin(theta) embed(P). Requires a real
// phase so the generator is Hermitian and squares to the identity.
Operator exp_pauli_string(double theta, const PauliString& p);

// exp(-i h t) by eigendecomposition of the Hermitian h. Deliberately
// avoids the Pauli closed forms so it can serve as the independent oracle
// for every decomposition check in the library.
Operator exp_hermitian(const Operator& h, double t);

// Pauli-expansion coefficient Re tr(m * embed(p)) / 2^n.
double hs_coefficient(const Operator& m, const PauliString& p);

bool is_hermitian(const Operator& m, double tol = kEqTol);
bool is_unitary(const Operator& m, double tol = kEqTol);
double max_abs_diff(const Operator& a, const Operator& b);

}  // namespace xychain

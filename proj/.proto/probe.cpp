#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <complex>
#include <iostream>
using Op = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
int main() {
  Op z(2,2); z << 1,0,0,-1;
  Op x(2,2); x << 0,1,1,0;
  Op h = kroneckerProduct(x, z);
  Eigen::SelfAdjointEigenSolver<Op> es(h);
  if (es.info() != Eigen::Success) return 1;
  Op u = es.eigenvectors() * (std::complex<double>(0,-1) * es.eigenvalues().array() * 0.7).exp().matrix().asDiagonal() * es.eigenvectors().adjoint();
  std::cout << (u * u.adjoint() - Op::Identity(4,4)).cwiseAbs().maxCoeff() << "\n";
  return 0;
}

// Copyright 2026 The qasmtrans Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qasmtrans/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace qasmtrans {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double phase_distance(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  cplx phase{1.0, 0.0};
  if (std::abs(a(r, c)) > 1e-300) {
    phase = b(r, c) / a(r, c);
    const double mag = std::abs(phase);
    if (mag > 0.0) phase /= mag;
  }
  return (a * phase - b).cwiseAbs().maxCoeff();
}

double unitarity_error(const CMat& u) {
  const CMat id = CMat::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff();
}

CMat expm_hermitian(const CMat& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const Eigen::VectorXd& w = es.eigenvalues();
  CVec phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases(k) = std::exp(cplx(0.0, -w(k) * t));
  }
  const CMat& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

CMat random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMat z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = cplx(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  if (t > kPi) t -= 2.0 * kPi;
  return t;
}

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 rx_matrix(double theta) { return rphi_matrix(0.0, theta); }

Mat2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

Mat2 rz_matrix(double theta) {
  Mat2 m;
  m << std::exp(cplx(0, -theta / 2)), 0, 0, std::exp(cplx(0, theta / 2));
  return m;
}

Mat2 rphi_matrix(double phi, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -kI * s * std::exp(cplx(0, -phi)), -kI * s * std::exp(cplx(0, phi)),
      c;
  return m;
}

XorShift64::XorShift64(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  state_ = z == 0 ? 0x2545F4914F6CDD1DULL : z;
}

std::uint64_t XorShift64::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t XorShift64::below(std::uint64_t bound) {
  return bound == 0 ? 0 : next() % bound;
}

}  // namespace qasmtrans

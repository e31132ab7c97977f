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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace qasmtrans {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Kronecker product; `a` acts on the more significant index bits.
CMat kron(const CMat& a, const CMat& b);

/// Largest entrywise deviation between `a` and `b` after removing a global
/// phase. The phase is read off the largest-magnitude entry of `a`.
double phase_distance(const CMat& a, const CMat& b);

/// max |U^dagger U - I| over entries.
double unitarity_error(const CMat& u);

/// exp(-i * h * t) for Hermitian h.
CMat expm_hermitian(const CMat& h, double t);

/// Haar-random unitary of the given dimension.
CMat random_unitary(int dim, std::mt19937_64& rng);

/// Maps an angle into (-pi, pi].
double wrap_angle(double theta);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Rotation exp(-i theta/2 sigma) about X, Y or Z.
Mat2 rx_matrix(double theta);
Mat2 ry_matrix(double theta);
Mat2 rz_matrix(double theta);
/// Rotation by theta about the equatorial axis cos(phi) X + sin(phi) Y.
Mat2 rphi_matrix(double phi, double theta);

/// Seeded 64-bit xorshift* generator with splitmix64 seed mixing. Used where
/// the exact pseudo-random stream is part of a reproducibility contract.
class XorShift64 {
 public:
  explicit XorShift64(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace qasmtrans

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

#include "qasmtrans/kak.hpp"

#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qasmtrans {

namespace {

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

// Columns: Bell-like states in which local SU(2) x SU(2) acts as SO(4) and
// XX, YY, ZZ are simultaneously diagonal.
const Mat4& magic() {
  static const Mat4 m = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Mat4 b;
    b << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    return Mat4(b * r);
  }();
  return m;
}

// Diagonal of M^dagger P M for P in {XX, YY, ZZ}; entries are +-1.
const std::array<std::array<double, 4>, 3>& pauli_signs() {
  static const auto s = [] {
    std::array<std::array<double, 4>, 3> out{};
    const Mat2 p[3] = {pauli_x(), pauli_y(), pauli_z()};
    for (int k = 0; k < 3; ++k) {
      const Mat4 d = magic().adjoint() * kron2(p[k], p[k]) * magic();
      for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = d(j, j).real();
    }
    return out;
  }();
  return s;
}

// Real orthogonal P (det +1) with P^T m P diagonal for a complex symmetric
// unitary m. Re m and Im m commute, so a generic real combination shares
// their eigenvectors; degenerate combinations are retried with another mix.
Eigen::Matrix4d co_diagonalize(const Mat4& m) {
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();
  static constexpr double kMix[] = {0.4142135623730951, 1.2345678901234567, 2.718281828459045,
                                    0.1234567890123456, 3.0141592653589793, 1.9, 0.7, 2.3};
  Eigen::Matrix4d best = Eigen::Matrix4d::Identity();
  double best_off = 1e300;
  for (double t : kMix) {
    const Eigen::Matrix4d mix = std::cos(t) * re + std::sin(t) * im;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(0.5 * (mix + mix.transpose()));
    Eigen::Matrix4d p = es.eigenvectors();
    const Mat4 d = p.transpose().cast<cplx>() * m * p.cast<cplx>();
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j) off = std::max(off, std::abs(d(i, j)));
      }
    }
    if (off < best_off) {
      best_off = off;
      best = p;
    }
    if (off < 1e-12) break;
  }
  if (best.determinant() < 0) best.col(0) *= -1.0;
  return best;
}

struct Canon {
  WeylPoint& w;

  // Uw(.., x, ..) = Uw(.., x - pi/2, ..) (i PP) with i PP = -i (iP (x) iP).
  void shift(int axis, double sign) {
    const Mat2 p[3] = {pauli_x(), pauli_y(), pauli_z()};
    const Mat2 ip = kI * p[axis];
    double& v = axis == 0 ? w.a : (axis == 1 ? w.b : w.c);
    v -= sign * kPi / 2.0;
    w.k3 = ip * w.k3;
    w.k4 = ip * w.k4;
    w.phase *= sign > 0 ? -kI : kI;
  }

  // Uw(a,b,c) = V^dagger Uw(permuted) V with V = R (x) R.
  void conjugate_both(const Mat2& r) {
    w.k1 = w.k1 * r.adjoint();
    w.k2 = w.k2 * r.adjoint();
    w.k3 = r * w.k3;
    w.k4 = r * w.k4;
  }

  // V = R (x) I with R a pi rotation: negates the two coordinates whose
  // Pauli anticommutes with R.
  void conjugate_first(const Mat2& r) {
    w.k1 = w.k1 * r.adjoint();
    w.k3 = r * w.k3;
  }

  void swap_ab() {
    conjugate_both(rz_matrix(kPi / 2.0));
    std::swap(w.a, w.b);
  }
  void swap_bc() {
    conjugate_both(rx_matrix(kPi / 2.0));
    std::swap(w.b, w.c);
  }
  void swap_ac() {
    conjugate_both(ry_matrix(kPi / 2.0));
    std::swap(w.a, w.c);
  }
  void flip_ab() {
    conjugate_first(rz_matrix(kPi));
    w.a = -w.a;
    w.b = -w.b;
  }
  void flip_bc() {
    conjugate_first(rx_matrix(kPi));
    w.b = -w.b;
    w.c = -w.c;
  }
  void flip_ac() {
    conjugate_first(ry_matrix(kPi));
    w.a = -w.a;
    w.c = -w.c;
  }

  void run() {
    constexpr double kEps = 1e-12;
    const double q = kPi / 4.0;
    for (int axis = 0; axis < 3; ++axis) {
      double* v = axis == 0 ? &w.a : (axis == 1 ? &w.b : &w.c);
      while (*v > q + kEps) shift(axis, 1.0);
      while (*v <= -q + kEps) shift(axis, -1.0);
    }
    if (std::abs(w.a) < std::abs(w.b)) swap_ab();
    if (std::abs(w.b) < std::abs(w.c)) swap_bc();
    if (std::abs(w.a) < std::abs(w.b)) swap_ab();
    if (w.a < 0) flip_ac();
    if (w.b < 0) flip_bc();
    if (std::abs(w.a - q) < 1e-10 && w.c < -kEps) {
      shift(0, 1.0);
      flip_ac();
    }
  }
};

}  // namespace

Mat4 weyl_unitary(double a, double b, double c) {
  const auto& s = pauli_signs();
  Mat4 d = Mat4::Zero();
  for (int j = 0; j < 4; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    d(j, j) = std::exp(kI * (a * s[0][ju] + b * s[1][ju] + c * s[2][ju]));
  }
  return magic() * d * magic().adjoint();
}

Mat4 WeylPoint::reconstruct() const {
  return phase * kron2(k1, k2) * weyl_unitary(a, b, c) * kron2(k3, k4);
}

cplx WeylPoint::lambda() const {
  // Fourth roots of unity collapse to {1, i}; the sign moves into K1.
  return std::abs(phase.real()) >= std::abs(phase.imag()) ? cplx{1.0, 0.0} : kI;
}

cplx factor_kron(const Mat4& k, Mat2& a, Mat2& b) {
  int bi = 0;
  int bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double n = k.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  }
  Mat2 blk = k.block<2, 2>(2 * bi, 2 * bj);
  b = blk / std::sqrt(blk.determinant());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = (b.adjoint() * k.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
    }
  }
  const cplx s = std::sqrt(a.determinant());
  a /= s;
  return s;
}

WeylPoint kak_decompose(const Mat4& u) {
  const cplx det4 = std::pow(u.determinant(), 0.25);
  const Mat4 us = u / det4;
  const Mat4& m = magic();
  const Mat4 up = m.adjoint() * us * m;
  const Mat4 m2 = up.transpose() * up;
  const Eigen::Matrix4d p = co_diagonalize(m2);
  const Mat4 pc = p.cast<cplx>();
  const Mat4 d2 = pc.transpose() * m2 * pc;

  Eigen::Vector4cd dh;
  for (int j = 0; j < 4; ++j) dh(j) = std::sqrt(d2(j, j));
  // det K1' = 1 / prod(dh) = +-1; flip one root to land in SO(4).
  cplx prod = dh.prod();
  if (prod.real() < 0) dh(0) = -dh(0);
  const Mat4 k1p = up * pc * dh.cwiseInverse().asDiagonal();

  // theta_j = phi + a sx_j + b sy_j + c sz_j.
  const auto& s = pauli_signs();
  Eigen::Matrix4d sys;
  Eigen::Vector4d theta;
  for (int j = 0; j < 4; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    sys(j, 0) = 1.0;
    sys(j, 1) = s[0][ju];
    sys(j, 2) = s[1][ju];
    sys(j, 3) = s[2][ju];
    theta(j) = std::arg(dh(j));
  }
  const Eigen::Vector4d sol = sys.fullPivLu().solve(theta);

  WeylPoint w;
  w.a = sol(1);
  w.b = sol(2);
  w.c = sol(3);
  const cplx s_left = factor_kron(m * k1p * m.adjoint(), w.k1, w.k2);
  const cplx s_right = factor_kron(m * pc.transpose() * m.adjoint(), w.k3, w.k4);
  w.phase = det4 * std::exp(kI * sol(0)) * s_left * s_right;
  Canon{w}.run();
  return w;
}

TwoPulse euler_two_pulse(const Mat2& u) {
  const Mat2 v = u / std::sqrt(u.determinant());
  double w = v(0, 0).real();
  double z = -v(0, 0).imag();
  double x = -(v(0, 1) + v(1, 0)).imag() / 2.0;
  double y = (v(1, 0) - v(0, 1)).real() / 2.0;
  if (w < 0) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  TwoPulse tp;
  const double omw = 1.0 - w;
  if (omw < 1e-15 && std::abs(z) < 1e-12) return tp;
  if (std::abs(z) < 1e-12) {
    tp.theta1 = 2.0 * std::acos(std::min(1.0, w));
    tp.phi1 = std::atan2(y, x);
    return tp;
  }
  const double big_s = std::min(1.0, (omw * omw + z * z) / (2.0 * omw));
  const double cd = omw / big_s - 1.0;
  const double sd = -z / big_s;
  const double delta = std::atan2(sd, cd);
  const double half = std::asin(std::sqrt(big_s));
  const double cs = std::cos(half) * std::sin(half);
  double axis = std::atan2(y, x);
  if (2.0 * cs * std::cos(delta / 2.0) < 0) axis += kPi;
  tp.theta1 = tp.theta2 = 2.0 * half;
  tp.phi1 = wrap_angle(axis - delta / 2.0);
  tp.phi2 = wrap_angle(tp.phi1 + delta);
  return tp;
}

}  // namespace qasmtrans

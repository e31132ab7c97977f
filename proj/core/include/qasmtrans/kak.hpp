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

#include "qasmtrans/linalg.hpp"

namespace qasmtrans {

/// exp(i (a XX + b YY + c ZZ)).
Mat4 weyl_unitary(double a, double b, double c);

/// U = phase * (k1 (x) k2) * weyl_unitary(a, b, c) * (k3 (x) k4) with every
/// k in SU(2) and pi/4 >= a >= b >= |c| (c >= 0 when a = pi/4).
struct WeylPoint {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Mat2 k1 = Mat2::Identity();
  Mat2 k2 = Mat2::Identity();
  Mat2 k3 = Mat2::Identity();
  Mat2 k4 = Mat2::Identity();
  /// Unit-modulus global phase. For det U = 1 it is a fourth root of unity
  /// and lambda() reduces it to the class {1, i}.
  cplx phase{1.0, 0.0};

  Mat4 reconstruct() const;
  cplx lambda() const;
};

WeylPoint kak_decompose(const Mat4& u);

/// Splits a 4x4 product state operator into a (x) b with both in SU(2);
/// returns the leftover scalar.
cplx factor_kron(const Mat4& k, Mat2& a, Mat2& b);

/// U = e^{i phi} R_{phi2}(theta2) R_{phi1}(theta1), the angles in [0, pi].
/// Equatorial rotations come back as a single pulse (theta2 = 0); anything
/// else uses two pulses of equal angle.
struct TwoPulse {
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;
};

TwoPulse euler_two_pulse(const Mat2& u);

}  // namespace qasmtrans

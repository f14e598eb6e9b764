// Copyright 2026 The homsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <variant>
#include <vector>

namespace homsim {

using cplx = std::complex<double>;

/// Local polarization state as amplitudes on the fixed {H, V} basis.
struct PolVector {
  cplx h{0.0, 0.0};
  cplx v{0.0, 0.0};

  static PolVector H() { return {1.0, 0.0}; }
  static PolVector V() { return {0.0, 1.0}; }
  static PolVector D();
  static PolVector A();

  double norm_sq() const { return std::norm(h) + std::norm(v); }
  bool is_normalized(double tol = 1e-12) const;
  PolVector normalized() const;

  friend PolVector operator*(cplx s, const PolVector& p) { return {s * p.h, s * p.v}; }
  friend PolVector operator+(const PolVector& a, const PolVector& b) {
    return {a.h + b.h, a.v + b.v};
  }
  friend PolVector operator-(const PolVector& a, const PolVector& b) {
    return {a.h - b.h, a.v - b.v};
  }
  friend bool operator==(const PolVector&, const PolVector&) = default;
};

/// 2x2 complex Jones matrix, row-major.
class PolOperator {
 public:
  PolOperator() = default;
  PolOperator(cplx m00, cplx m01, cplx m10, cplx m11) : m_{m00, m01, m10, m11} {}

  static PolOperator identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static PolOperator diagonal(cplx d0, cplx d1) { return {d0, 0.0, 0.0, d1}; }
  /// Orthogonal projector |u><u| onto a normalized polarization.
  static PolOperator projector(const PolVector& u);

  cplx operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }

  PolOperator adjoint() const;
  PolOperator operator*(const PolOperator& rhs) const;
  PolVector operator*(const PolVector& p) const;

  /// Largest elementwise modulus of (this - other).
  double distance(const PolOperator& other) const;
  bool is_unitary(double tol = 1e-12) const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_idempotent(double tol = 1e-12) const;

  friend bool operator==(const PolOperator&, const PolOperator&) = default;

 private:
  std::array<cplx, 4> m_{};
};

/// Linear retarder: retardance delta with its fast axis at axis_angle from H.
/// The phase convention pins waveplate(pi, 0) to diag(1, -1).
PolOperator waveplate(double retardance, double axis_angle);

/// Retarder element: half-wave plate has retardance pi.
struct Waveplate {
  double retardance = 0.0;
  double axis_angle = 0.0;
  PolOperator at(double /*phi*/) const { return waveplate(retardance, axis_angle); }
  friend bool operator==(const Waveplate&, const Waveplate&) = default;
};

/// q-plate with topological charge q. The optic axis rotates as q*(phi - offset).
struct QPlate {
  double charge = 0.5;
  double offset = 0.0;
  PolOperator at(double phi) const;
  PolOperator operator()(double phi) const { return at(phi); }
  friend bool operator==(const QPlate&, const QPlate&) = default;
};

/// Linear polarizer transmitting along `angle` from H.
struct Polarizer {
  double angle = 0.0;
  PolOperator at(double /*phi*/) const;
  friend bool operator==(const Polarizer&, const Polarizer&) = default;
};

QPlate qplate(double charge, double offset = 0.0);

/// (cos angle, sin angle). A sits at -pi/4, i.e. (1, -1)/sqrt(2).
PolVector polarizer_vector(double angle);

/// Conjugate-linear inner product conj(u) . e
cplx project(const PolVector& u, const PolVector& e);

using Element = std::variant<Waveplate, QPlate, Polarizer>;

/// Ordered optical train. Elements are listed in propagation order, so the
/// evaluated operator is the product with the last element leftmost.
class ElementChain {
 public:
  ElementChain() = default;
  explicit ElementChain(std::vector<Element> elements) : elements_(std::move(elements)) {}

  ElementChain& then(Element e) {
    elements_.push_back(std::move(e));
    return *this;
  }

  PolOperator at(double phi) const;
  const std::vector<Element>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }

  friend bool operator==(const ElementChain&, const ElementChain&) = default;

 private:
  std::vector<Element> elements_;
};

}  // namespace homsim

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

#include "homsim/jones.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homsim {

PolVector PolVector::D() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {s, s};
}

PolVector PolVector::A() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {s, -s};
}

bool PolVector::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

PolVector PolVector::normalized() const {
  const double n = std::sqrt(norm_sq());
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::domain_error("cannot normalize a null polarization vector");
  }
  return {h / n, v / n};
}

PolOperator PolOperator::projector(const PolVector& u) {
  return {u.h * std::conj(u.h), u.h * std::conj(u.v), u.v * std::conj(u.h), u.v * std::conj(u.v)};
}

PolOperator PolOperator::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

PolOperator PolOperator::operator*(const PolOperator& r) const {
  return {m_[0] * r.m_[0] + m_[1] * r.m_[2], m_[0] * r.m_[1] + m_[1] * r.m_[3],
          m_[2] * r.m_[0] + m_[3] * r.m_[2], m_[2] * r.m_[1] + m_[3] * r.m_[3]};
}

PolVector PolOperator::operator*(const PolVector& p) const {
  return {m_[0] * p.h + m_[1] * p.v, m_[2] * p.h + m_[3] * p.v};
}

double PolOperator::distance(const PolOperator& other) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(m_[i] - other.m_[i]));
  return d;
}

bool PolOperator::is_unitary(double tol) const {
  return (adjoint() * *this).distance(identity()) <= tol;
}

bool PolOperator::is_hermitian(double tol) const { return adjoint().distance(*this) <= tol; }

bool PolOperator::is_idempotent(double tol) const { return (*this * *this).distance(*this) <= tol; }

namespace {

// e^{i delta}, exact when delta is a whole number of quarter turns in double
// arithmetic (sin(pi) is 1.2e-16, not 0).
cplx unit_phase(double delta) {
  const double quarter = std::numbers::pi / 2.0;
  const double turns = delta / quarter;
  if (std::isfinite(turns) && turns == std::round(turns) && std::abs(turns) < 1e15) {
    static constexpr double re[] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double im[] = {0.0, 1.0, 0.0, -1.0};
    const auto k = static_cast<std::size_t>(((static_cast<long long>(turns) % 4) + 4) % 4);
    return {re[k], im[k]};
  }
  return std::polar(1.0, delta);
}

}  // namespace

PolOperator waveplate(double retardance, double axis_angle) {
  const double c = std::cos(axis_angle);
  const double s = std::sin(axis_angle);
  // R(theta) = [[c, s], [-s, c]]; result is R(-theta) diag(1, e^{i delta}) R(theta).
  const PolOperator rot(c, s, -s, c);
  const PolOperator rot_back(c, -s, s, c);
  return rot_back * PolOperator::diagonal(1.0, unit_phase(retardance)) * rot;
}

PolOperator QPlate::at(double phi) const {
  const double a = 2.0 * charge * (phi - offset);
  const double c = std::cos(a);
  const double s = std::sin(a);
  return {c, s, s, -c};
}

PolOperator Polarizer::at(double /*phi*/) const {
  return PolOperator::projector(polarizer_vector(angle));
}

QPlate qplate(double charge, double offset) { return QPlate{charge, offset}; }

PolVector polarizer_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

cplx project(const PolVector& u, const PolVector& e) {
  return std::conj(u.h) * e.h + std::conj(u.v) * e.v;
}

PolOperator ElementChain::at(double phi) const {
  PolOperator acc = PolOperator::identity();
  for (const auto& e : elements_) {
    acc = std::visit([phi](const auto& el) { return el.at(phi); }, e) * acc;
  }
  return acc;
}

}  // namespace homsim

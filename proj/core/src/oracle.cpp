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

#include "homsim/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homsim::oracle {

DiscreteModeBasis::DiscreteModeBasis(int n_sectors) : n_sectors_(n_sectors) {
  if (n_sectors < 2) throw std::invalid_argument("discretization needs at least 2 sectors");
}

int DiscreteModeBasis::index(Port port, int sector, Pol pol, int bin) const {
  if (sector < 0 || sector >= n_sectors_ || bin < 0 || bin >= kBins) {
    throw std::out_of_range("mode label outside the discrete basis");
  }
  return ((static_cast<int>(port) * n_sectors_ + sector) * 2 + static_cast<int>(pol)) * kBins + bin;
}

ModeLabel DiscreteModeBasis::label(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("mode index outside the basis");
  const int bin = index % kBins;
  index /= kBins;
  const int pol = index % 2;
  index /= 2;
  const int sector = index % n_sectors_;
  const int port = index / n_sectors_;
  return {static_cast<Port>(port), sector, static_cast<Pol>(pol), bin};
}

double DiscreteModeBasis::sector_angle(int sector) const {
  return 2.0 * std::numbers::pi * (sector + 0.5) / n_sectors_;
}

SinglePhotonAmplitudes discretize_mode(const VectorMode& mode, Port port,
                                       const DiscreteModeBasis& basis, int bin) {
  if (port != Port::kA && port != Port::kB) throw std::invalid_argument("unknown input port");
  if (!mode.pol_field) throw std::invalid_argument("mode has no polarization field");
  SinglePhotonAmplitudes amps(static_cast<std::size_t>(basis.size()), cplx{0.0, 0.0});
  const double w = 1.0 / std::sqrt(static_cast<double>(basis.n_sectors()));
  for (int k = 0; k < basis.n_sectors(); ++k) {
    const PolVector e = mode.polarization(basis.sector_angle(k));
    amps[static_cast<std::size_t>(basis.index(port, k, Pol::kH, bin))] = w * e.h;
    amps[static_cast<std::size_t>(basis.index(port, k, Pol::kV, bin))] = w * e.v;
  }
  return amps;
}

TwoPhotonAmplitudes::TwoPhotonAmplitudes(DiscreteModeBasis basis)
    : basis_(basis),
      m_(static_cast<std::size_t>(basis.size()) * static_cast<std::size_t>(basis.size()),
         cplx{0.0, 0.0}) {}

TwoPhotonAmplitudes TwoPhotonAmplitudes::product(const DiscreteModeBasis& basis,
                                                 const SinglePhotonAmplitudes& x,
                                                 const SinglePhotonAmplitudes& y) {
  const auto n = static_cast<std::size_t>(basis.size());
  if (x.size() != n || y.size() != n) {
    throw std::invalid_argument("wavepacket size does not match the basis");
  }
  TwoPhotonAmplitudes s(basis);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s.m_[i * n + j] = 0.5 * (x[i] * y[j] + y[i] * x[j]);
    }
  }
  return s;
}

double TwoPhotonAmplitudes::norm() const {
  double acc = 0.0;
  for (const cplx& c : m_) acc += std::norm(c);
  return 2.0 * acc;
}

double TwoPhotonAmplitudes::outcome_probability(int i, int j) const {
  return i == j ? 2.0 * std::norm(coeff(i, i)) : 4.0 * std::norm(coeff(i, j));
}

TwoPhotonAmplitudes apply_bs(const TwoPhotonAmplitudes& state) {
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("beamsplitter input state is not normalized");
  }
  const int n = state.dim();
  const int half = n / 2;  // port B indices are port A indices + half
  const double r = 1.0 / std::numbers::sqrt2;
  const cplx ir{0.0, r};

  // Rows: T = U M.
  TwoPhotonAmplitudes rows(state.basis());
  for (int a = 0; a < half; ++a) {
    const int b = a + half;
    for (int j = 0; j < n; ++j) {
      const cplx ma = state.coeff(a, j);
      const cplx mb = state.coeff(b, j);
      rows.coeff(a, j) = r * ma + ir * mb;
      rows.coeff(b, j) = ir * ma + r * mb;
    }
  }
  // Columns: M' = T U^T.
  TwoPhotonAmplitudes out(state.basis());
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < half; ++a) {
      const int b = a + half;
      const cplx ta = rows.coeff(i, a);
      const cplx tb = rows.coeff(i, b);
      out.coeff(i, a) = r * ta + ir * tb;
      out.coeff(i, b) = ir * ta + r * tb;
    }
  }
  return out;
}

OutcomeClasses outcome_classes(const TwoPhotonAmplitudes& state) {
  const auto& basis = state.basis();
  OutcomeClasses out;
  for (int i = 0; i < state.dim(); ++i) {
    const Port pi = basis.label(i).port;
    for (int j = i; j < state.dim(); ++j) {
      const double p = state.outcome_probability(i, j);
      const Port pj = basis.label(j).port;
      if (pi != pj) {
        out.coincidence += p;
      } else if (pi == Port::kA) {
        out.both_in_a += p;
      } else {
        out.both_in_b += p;
      }
    }
  }
  return out;
}

double coincidence_probability(const TwoPhotonAmplitudes& state, const ProjectionPair& proj,
                               SectorSelect sector_1, SectorSelect sector_2) {
  const auto& basis = state.basis();
  const int n = basis.n_sectors();
  for (const SectorSelect& s : {sector_1, sector_2}) {
    if (s && (*s < 0 || *s >= n)) throw std::out_of_range("sector outside the discretization");
  }
  const cplx w1[2] = {std::conj(proj.p1.h), std::conj(proj.p1.v)};
  const cplx w2[2] = {std::conj(proj.p2.h), std::conj(proj.p2.v)};
  const int k1_lo = sector_1 ? *sector_1 : 0, k1_hi = sector_1 ? *sector_1 + 1 : n;
  const int k2_lo = sector_2 ? *sector_2 : 0, k2_hi = sector_2 ? *sector_2 + 1 : n;

  double total = 0.0;
  for (int k1 = k1_lo; k1 < k1_hi; ++k1) {
    for (int k2 = k2_lo; k2 < k2_hi; ++k2) {
      for (int b1 = 0; b1 < DiscreteModeBasis::kBins; ++b1) {
        for (int b2 = 0; b2 < DiscreteModeBasis::kBins; ++b2) {
          cplx amp{0.0, 0.0};
          for (int s = 0; s < 2; ++s) {
            const int i = basis.index(Port::kA, k1, static_cast<Pol>(s), b1);
            for (int t = 0; t < 2; ++t) {
              const int j = basis.index(Port::kB, k2, static_cast<Pol>(t), b2);
              amp += w1[s] * w2[t] * state.coeff(i, j);
            }
          }
          total += 4.0 * std::norm(amp);
        }
      }
    }
  }
  return total;
}

TwoPhotonAmplitudes output_state(const VectorMode& mode_a, const VectorMode& mode_b,
                                 const DiscreteModeBasis& basis, bool same_bin) {
  const auto x = discretize_mode(mode_a, Port::kA, basis, 0);
  const auto y = discretize_mode(mode_b, Port::kB, basis, same_bin ? 0 : 1);
  return apply_bs(TwoPhotonAmplitudes::product(basis, x, y));
}

std::optional<double> oracle_visibility(const BiphotonInput& input, const ProjectionPair& proj,
                                        int n_sectors, SectorSelect sector_1) {
  const DiscreteModeBasis basis(n_sectors);
  const double p_out = coincidence_probability(
      output_state(input.mode_a(), input.mode_b(), basis, false), proj, sector_1, kAllSectors);
  if (p_out < 1e-12) return std::nullopt;
  const double p_in = coincidence_probability(
      output_state(input.mode_a(), input.mode_b(), basis, true), proj, sector_1, kAllSectors);
  return (p_out - p_in) / p_out;
}

}  // namespace homsim::oracle

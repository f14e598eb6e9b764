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

// Brute-force Fock-space model of the same experiment. Each photon is
// discretized into (port, azimuthal sector, polarization, time bin) modes,
// the beamsplitter acts as an explicit single-particle unitary on creation
// operators, and coincidences are read off by projecting onto polarizer
// eigenmodes. Nothing here calls into the interference kernel.

#include <optional>
#include <vector>

#include "homsim/interference.hpp"
#include "homsim/modes.hpp"

namespace homsim::oracle {

enum class Port { kA = 0, kB = 1 };
enum class Pol { kH = 0, kV = 1 };

struct ModeLabel {
  Port port;
  int sector;
  Pol pol;
  int bin;
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

class DiscreteModeBasis {
 public:
  static constexpr int kBins = 2;

  explicit DiscreteModeBasis(int n_sectors);

  int n_sectors() const { return n_sectors_; }
  int size() const { return 2 * n_sectors_ * 2 * kBins; }
  int index(Port port, int sector, Pol pol, int bin) const;
  ModeLabel label(int index) const;
  /// Center angle 2 pi (k + 1/2) / n of sector k.
  double sector_angle(int sector) const;

  friend bool operator==(const DiscreteModeBasis&, const DiscreteModeBasis&) = default;

 private:
  int n_sectors_;
};

using SinglePhotonAmplitudes = std::vector<cplx>;

/// Amplitudes pol_field(phi_k)[pol] / sqrt(n) on the given port and bin.
SinglePhotonAmplitudes discretize_mode(const VectorMode& mode, Port port,
                                       const DiscreteModeBasis& basis, int bin = 0);

/// |psi> = sum_ij M_ij a_i^dag a_j^dag |0> with M symmetric. The norm is
/// 2 sum_ij |M_ij|^2; a distinct-mode outcome {i, j} has probability
/// 4 |M_ij|^2 and a doubly occupied mode 2 |M_ii|^2.
class TwoPhotonAmplitudes {
 public:
  explicit TwoPhotonAmplitudes(DiscreteModeBasis basis);

  /// a_x^dag a_y^dag |0> for two single-photon wavepackets.
  static TwoPhotonAmplitudes product(const DiscreteModeBasis& basis,
                                     const SinglePhotonAmplitudes& x,
                                     const SinglePhotonAmplitudes& y);

  const DiscreteModeBasis& basis() const { return basis_; }
  int dim() const { return basis_.size(); }
  cplx coeff(int i, int j) const { return m_[flat(i, j)]; }
  cplx& coeff(int i, int j) { return m_[flat(i, j)]; }

  double norm() const;
  /// Probability of finding one photon in i and one in j (i may equal j).
  double outcome_probability(int i, int j) const;

 private:
  std::size_t flat(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(j);
  }

  DiscreteModeBasis basis_;
  std::vector<cplx> m_;
};

/// 50:50 beamsplitter with i on reflection, a_A -> (a_A + i a_B)/sqrt2 and
/// a_B -> (i a_A + a_B)/sqrt2, identical on every sector, polarization and bin.
/// Throws std::invalid_argument if the input is not normalized.
TwoPhotonAmplitudes apply_bs(const TwoPhotonAmplitudes& state);

struct OutcomeClasses {
  double both_in_a = 0.0;
  double both_in_b = 0.0;
  double coincidence = 0.0;
  double total() const { return both_in_a + both_in_b + coincidence; }
};

OutcomeClasses outcome_classes(const TwoPhotonAmplitudes& state);

/// Sector selector; nullopt means every sector (bucket detection).
using SectorSelect = std::optional<int>;
inline constexpr SectorSelect kAllSectors = std::nullopt;

/// One photon in port A passing p1 (in the selected sectors) and one in port
/// B passing p2, summed over time bins and unselected sectors.
double coincidence_probability(const TwoPhotonAmplitudes& state, const ProjectionPair& proj,
                               SectorSelect sector_1, SectorSelect sector_2);

/// Input pair (mode_a on port A in bin 0, mode_b on port B in bin 0 or 1)
/// after the beamsplitter.
TwoPhotonAmplitudes output_state(const VectorMode& mode_a, const VectorMode& mode_b,
                                 const DiscreteModeBasis& basis, bool same_bin);

/// (P_out - P_in) / P_out with arm 2 bucket-integrated; nullopt when
/// P_out < 1e-12.
std::optional<double> oracle_visibility(const BiphotonInput& input, const ProjectionPair& proj,
                                        int n_sectors, SectorSelect sector_1);

}  // namespace homsim::oracle

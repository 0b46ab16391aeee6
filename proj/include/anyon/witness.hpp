// Copyright 2026 The anyon-bell authors
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

#ifndef ANYON_WITNESS_HPP
#define ANYON_WITNESS_HPP

#include <vector>

#include "anyon/sector.hpp"

namespace anyon {

// The measurement quorum: Alice reads the total charge of pairs (1,2) and
// (2,3), Bob of (4,5) and (5,6). Inner pairs are diagonal in the unprimed
// basis; outer pairs in the primed one.
enum class MeasPair { a12, a23, b45, b56 };

// Channel-sign convention: eigenvalue -1 when the pair fuses to the vacuum
// and +1 otherwise. W is invariant under flipping this convention on all
// four operators at once.
inline constexpr double kVacuumSign = -1.0;

// Two-channel models only: the +-1-valued charge observable on the sector
// (value +1 on the trailing beta block, where every quorum outcome is the
// non-vacuum channel). D(S3) input -> hard error; use upsilon_projectors.
Mat upsilon(const SectorBasis& basis, MeasPair pair);

// Outcome projectors {P_y} of the pair measurement, one per fusion channel
// of generator x generator, summing to the identity on the sector. Works
// for every model; this is the three-outcome interface D(S3) needs.
std::vector<Mat> upsilon_projectors(const SectorBasis& basis, MeasPair pair);

enum class WitnessKind { chsh_w, cglmp_i3 };

struct WitnessOperator {
  WitnessKind kind;
  Mat matrix;
  double lhv_bound;
  double quantum_bound;
};

// W = Y^A_12 Y^B_45 + Y^A_12 Y^B_56 - Y^A_23 Y^B_56 + Y^A_23 Y^B_45,
// LHV bound 2, Tsirelson bound 2 sqrt(2). Two-channel models only.
WitnessOperator build_W(const SectorBasis& basis);

// The two-qutrit CGLMP witness on the fixed quorum, transcribed as eight
// signed groups of outcome-projector products (the trailing paired block
// picks up the flat +2 diagonal). LHV bound 2, quantum bound 4.
WitnessOperator build_I3(const SectorBasis& basis);

// |r(a)> = a/sqrt2 (|phi0>+|phi3>) + sqrt(1-a^2)/sqrt2 (|phi1>-|phi2>).
Vec r_state(const SectorBasis& basis, double a);

// Eq.-(5) closed forms for the SU(2)_k family.
double a_plus_closed_form(int k);
double a_minus_closed_form(int k);
// max <W> = sec^2(pi/(k+2)) sqrt(4 cos(2pi/(k+2)) + cos(4pi/(k+2))/2 + 5/2)
double su2k_max_violation(int k);

// Deterministic-strategy enumeration: 2^4 = 16 assignments for W, 3^4 = 81
// for I3. Convexity makes these the LHV extrema. The I3 correlator is the
// 24-term outcome polynomial (the trailing +2 terms are sector bookkeeping,
// not outcome functions).
struct LhvExtrema {
  double max;
  double min;
  int strategies;
};
LhvExtrema lhv_bound_oracle(WitnessKind kind);

}  // namespace anyon

#endif  // ANYON_WITNESS_HPP

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

#ifndef ANYON_SECTOR_HPP
#define ANYON_SECTOR_HPP

#include <array>
#include <string>
#include <vector>

#include "anyon/model.hpp"

namespace anyon {

// One element of the six-anyon vacuum-sector basis: Alice's triple in the
// pair-channel state |x(alpha,beta)>_A, Bob's in |y(alpha,beta)>_B, with
// the shared total charge beta. Unprimed channels diagonalise the inner
// pair measurements (2,3) and (5,6); primed combinations are reached via
// the change matrix O.
struct SectorElement {
  Charge x;
  Charge y;
  Charge beta;
  bool paired;  // trailing singleton pair (x == y forced, beta != generator)
};

// Canonical order: the m*m product states with beta = generator, x slow /
// y fast over the vacuum-first channel list, then the paired singletons
// (absent for SU(2)_2; (beta=Lambda, beta=1) for D(S3)).
struct SectorBasis {
  AnyonModel model;
  std::vector<SectorElement> elems;

  int dim() const { return int(elems.size()); }
  int channels() const { return model.channel_count(); }
  int product_dim() const { return channels() * channels(); }
  int trailing_dim() const { return dim() - product_dim(); }

  int product_index(int xi, int yi) const { return xi * channels() + yi; }
  std::string element_name(int i) const;
};

// dim of the charge-c sector of the given anyon list, by dynamic
// programming over the fusion chain.
long sector_dimension(const AnyonModel& m, const std::vector<Charge>& anyons,
                      Charge total);

// Closed-form multiplicities of Phi^{x n} in D(S3):
// (1/3)(2^{n-1}+(-1)^n) each for 1 and Lambda, (1/3)(2^n+(-1)^{n-1}) for Phi.
struct PhiPowerCounts {
  long n1;
  long nLam;
  long nPhi;
};
PhiPowerCounts phi_power_multiplicities(int n);

SectorBasis build_sector_basis(const AnyonModel& m);

// O maps product-basis coordinates to primed (phi-slot) coordinates:
// (F (x) 1_m) on the product block, identity on the trailing states.
// Real, orthogonal and involutory for all four models.
Mat primed_change_matrix(const SectorBasis& basis);

// |phi_0>: three adjacent vacuum pairs, i.e. the primed-vacuum (x) vacuum
// state. Product coordinates are the first column of O.
Vec phi0_state(const SectorBasis& basis);

// Product coordinates of the paper-enumerated state |phi_j>. The paper
// lists the primed label as the fast index; canonical slots are A-slow, so
// the two enumerations differ by a transposition of the middle states.
Vec phi_state(const SectorBasis& basis, int j);
int phi_slot(const SectorBasis& basis, int j);

}  // namespace anyon

#endif  // ANYON_SECTOR_HPP

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

#include "anyon/sector.hpp"

#include <algorithm>
#include <stdexcept>

namespace anyon {

std::string SectorBasis::element_name(int i) const {
  const SectorElement& e = elems.at(i);
  const std::string alpha = model.labels[model.generator];
  const std::string beta = model.labels[e.beta];
  return "|" + model.labels[e.x] + "(" + alpha + "," + beta + ")>_A |" +
         model.labels[e.y] + "(" + alpha + "," + beta + ")>_B";
}

long sector_dimension(const AnyonModel& m, const std::vector<Charge>& anyons,
                      Charge total) {
  if (anyons.empty()) return total == m.vacuum ? 1 : 0;
  std::vector<long> count(m.labels.size(), 0);
  count[anyons[0]] = 1;
  for (size_t i = 1; i < anyons.size(); ++i) {
    std::vector<long> next(m.labels.size(), 0);
    for (Charge b = 0; b < Charge(count.size()); ++b) {
      if (count[b] == 0) continue;
      for (Charge c : fusion_multiply(m, b, anyons[i])) next[c] += count[b];
    }
    count = next;
  }
  return count[total];
}

PhiPowerCounts phi_power_multiplicities(int n) {
  if (n < 1) throw std::invalid_argument("phi_power_multiplicities: need n >= 1");
  const long sgn = (n % 2 == 0) ? 1 : -1;
  const long tri = ((1L << (n - 1)) + sgn) / 3;
  const long phi = ((1L << n) - sgn) / 3;
  return {tri, tri, phi};
}

SectorBasis build_sector_basis(const AnyonModel& m) {
  if (m.kind != ModelKind::su2 && m.kind != ModelKind::su2k &&
      m.kind != ModelKind::fib && m.kind != ModelKind::ds3)
    throw std::invalid_argument("build_sector_basis: unsupported model");

  SectorBasis b;
  b.model = m;
  const Charge g = m.generator;
  const auto& channels = m.gen_channels;

  for (Charge x : channels)
    for (Charge y : channels) b.elems.push_back({x, y, g, false});

  // Trailing paired singletons: a channel x of g*g whose triple total beta
  // differs from g but is admissible (beta in x*g, beta != g), shared by
  // both sides. SU(2): beta = 3/2 (absent at k = 2); Fibonacci: beta = 1;
  // D(S3): beta = Lambda then beta = 1, matching the listing order.
  std::vector<SectorElement> trailing;
  for (Charge x : channels) {
    for (Charge beta : fusion_multiply(m, x, g)) {
      if (beta == g) continue;
      trailing.push_back({x, x, beta, true});
    }
  }
  // listing order: descending beta-label index puts Lambda before 1 for
  // D(S3) and leaves the single SU(2)/Fibonacci state untouched
  std::stable_sort(trailing.begin(), trailing.end(),
                   [](const SectorElement& u, const SectorElement& v) {
                     return u.beta > v.beta;
                   });
  for (const auto& e : trailing) b.elems.push_back(e);

  const long expect = sector_dimension(m, std::vector<Charge>(6, g), m.vacuum);
  if (expect != b.dim())
    throw std::logic_error("build_sector_basis: dimension mismatch vs chain count");
  return b;
}

Mat primed_change_matrix(const SectorBasis& basis) {
  const int m = basis.channels();
  const int t = basis.trailing_dim();
  if (t == 0) return kron(basis.model.f_gen, Mat::identity(m));
  return direct_sum({kron(basis.model.f_gen, Mat::identity(m)), Mat::identity(t)});
}

Vec phi0_state(const SectorBasis& basis) {
  const Mat o = primed_change_matrix(basis);
  Vec v(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) v[i] = o(i, 0);
  return v;
}

int phi_slot(const SectorBasis& basis, int j) {
  const int m = basis.channels();
  const int block = m * m;
  if (j < 0 || j >= basis.dim())
    throw std::invalid_argument("phi_slot: index out of range");
  if (j >= block) return j;
  // paper enumeration: primed label fast, Bob's label slow
  const int xp = j % m;
  const int y = j / m;
  return basis.product_index(xp, y);
}

Vec phi_state(const SectorBasis& basis, int j) {
  const Mat o = primed_change_matrix(basis);
  const int slot = phi_slot(basis, j);
  Vec v(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) v[i] = o(i, slot);
  return v;
}

}  // namespace anyon

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

#include "anyon/witness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyon {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_primed(MeasPair p) { return p == MeasPair::a12 || p == MeasPair::b45; }
bool is_alice(MeasPair p) { return p == MeasPair::a12 || p == MeasPair::a23; }

// Local single-channel projector |y><y| (or its primed conjugate F|y><y|F)
// on the m-dimensional triple space.
Mat local_projector(const SectorBasis& basis, int channel_index, bool primed) {
  const int m = basis.channels();
  Mat p(m, m);
  p(channel_index, channel_index) = 1.0;
  if (!primed) return p;
  const Mat& f = basis.model.f_gen;
  return dagger(f) * p * f;
}

// Channel index of the pair measured by `pair` on a trailing paired state.
// Both the inner and the outer pair channel are forced there, and in all
// four models they coincide with the stored inner channel e.x.
int trailing_channel_index(const SectorBasis& basis, const SectorElement& e,
                           MeasPair pair) {
  (void)pair;
  const auto& ch = basis.model.gen_channels;
  for (int i = 0; i < int(ch.size()); ++i)
    if (ch[i] == e.x) return i;
  throw std::logic_error("trailing state channel not in generator channels");
}

}  // namespace

std::vector<Mat> upsilon_projectors(const SectorBasis& basis, MeasPair pair) {
  const int m = basis.channels();
  const int dim = basis.dim();
  std::vector<Mat> out;
  for (int yi = 0; yi < m; ++yi) {
    const Mat local = local_projector(basis, yi, is_primed(pair));
    const Mat block = is_alice(pair) ? kron(local, Mat::identity(m))
                                     : kron(Mat::identity(m), local);
    Mat p(dim, dim);
    for (int i = 0; i < m * m; ++i)
      for (int j = 0; j < m * m; ++j) p(i, j) = block(i, j);
    for (int t = m * m; t < dim; ++t)
      if (trailing_channel_index(basis, basis.elems[t], pair) == yi) p(t, t) = 1.0;
    out.push_back(p);
  }
  return out;
}

Mat upsilon(const SectorBasis& basis, MeasPair pair) {
  if (basis.channels() != 2)
    throw std::invalid_argument(
        "upsilon: +-1-valued observable needs a two-channel model; use "
        "upsilon_projectors");
  const auto proj = upsilon_projectors(basis, pair);
  // vacuum channel is listed first
  return kVacuumSign * proj[0] + (-kVacuumSign) * proj[1];
}

WitnessOperator build_W(const SectorBasis& basis) {
  if (basis.channels() != 2)
    throw std::invalid_argument("build_W: two-channel models only (use build_I3)");
  const Mat a12 = upsilon(basis, MeasPair::a12);
  const Mat a23 = upsilon(basis, MeasPair::a23);
  const Mat b45 = upsilon(basis, MeasPair::b45);
  const Mat b56 = upsilon(basis, MeasPair::b56);
  WitnessOperator w;
  w.kind = WitnessKind::chsh_w;
  w.matrix = a12 * b45 + a12 * b56 - a23 * b56 + a23 * b45;
  w.lhv_bound = 2.0;
  w.quantum_bound = 2.0 * std::sqrt(2.0);
  return w;
}

WitnessOperator build_I3(const SectorBasis& basis) {
  if (basis.model.kind != ModelKind::ds3)
    throw std::invalid_argument("build_I3: D(S3) only (use build_W)");
  const auto pa = upsilon_projectors(basis, MeasPair::a23);   // pi on A
  const auto pat = upsilon_projectors(basis, MeasPair::a12);  // pi-tilde on A
  const auto pb = upsilon_projectors(basis, MeasPair::b56);   // pi on B
  const auto pbt = upsilon_projectors(basis, MeasPair::b45);  // pi-tilde on B

  const int One = 0, Lam = 1, Phi = 2;
  Mat i3(basis.dim(), basis.dim());
  auto add = [&](double sign, const Mat& a, const Mat& b) { i3 += sign * (a * b); };

  // Four positive groups: matches in both bases plus the two shifted sets.
  for (int c : {One, Lam, Phi}) add(+1, pat[c], pbt[c]);
  add(+1, pa[Phi], pbt[One]);
  add(+1, pa[One], pbt[Lam]);
  add(+1, pa[Lam], pbt[Phi]);
  for (int c : {One, Lam, Phi}) add(+1, pa[c], pb[c]);
  for (int c : {One, Lam, Phi}) add(+1, pat[c], pb[c]);
  // Four negative groups (the cyclically shifted complements).
  add(-1, pat[One], pbt[Lam]);
  add(-1, pat[Lam], pbt[Phi]);
  add(-1, pat[Phi], pbt[One]);
  for (int c : {One, Lam, Phi}) add(-1, pa[c], pbt[c]);
  add(-1, pa[One], pb[Lam]);
  add(-1, pa[Lam], pb[Phi]);
  add(-1, pa[Phi], pb[One]);
  add(-1, pat[Lam], pb[One]);
  add(-1, pat[Phi], pb[Lam]);
  add(-1, pat[One], pb[Phi]);

  WitnessOperator w;
  w.kind = WitnessKind::cglmp_i3;
  w.matrix = i3;
  w.lhv_bound = 2.0;
  w.quantum_bound = 4.0;
  return w;
}

Vec r_state(const SectorBasis& basis, double a) {
  if (std::abs(a) > 1.0) throw std::invalid_argument("r_state: need |a| <= 1");
  if (basis.channels() != 2)
    throw std::invalid_argument("r_state: two-channel models only");
  const double b = std::sqrt(1.0 - a * a);
  const double s = 1.0 / std::sqrt(2.0);
  Vec phi(basis.dim());
  phi[phi_slot(basis, 0)] = a * s;
  phi[phi_slot(basis, 1)] = b * s;
  phi[phi_slot(basis, 2)] = -b * s;
  phi[phi_slot(basis, 3)] = a * s;
  return primed_change_matrix(basis) * phi;
}

double a_plus_closed_form(int k) {
  const double t = kPi / (k + 2);
  const double den = 8 * std::cos(2 * t) + std::cos(4 * t) + 5;
  const double c2 = std::cos(2 * t);
  const double inner =
      c2 * c2 + 4 * c2 + std::sqrt(2.0 * std::pow(std::cos(t), 4) * den) + 2;
  return -std::sqrt(inner / den);
}

double a_minus_closed_form(int k) {
  const double ap = a_plus_closed_form(k);
  return std::sqrt(1.0 - ap * ap);
}

double su2k_max_violation(int k) {
  const double t = kPi / (k + 2);
  const double sec = 1.0 / std::cos(t);
  return sec * sec *
         std::sqrt(4 * std::cos(2 * t) + 0.5 * std::cos(4 * t) + 2.5);
}

LhvExtrema lhv_bound_oracle(WitnessKind kind) {
  LhvExtrema e{-1e300, 1e300, 0};
  if (kind == WitnessKind::chsh_w) {
    for (int bits = 0; bits < 16; ++bits) {
      const double m12 = (bits & 1) ? 1 : -1;
      const double m23 = (bits & 2) ? 1 : -1;
      const double m45 = (bits & 4) ? 1 : -1;
      const double m56 = (bits & 8) ? 1 : -1;
      const double v = m12 * m45 + m12 * m56 - m23 * m56 + m23 * m45;
      e.max = std::max(e.max, v);
      e.min = std::min(e.min, v);
      ++e.strategies;
    }
    return e;
  }
  // I3: deterministic outcomes in {0,1,2} for (A unprimed, A primed,
  // B unprimed, B primed); evaluate the 24-term indicator polynomial.
  const int One = 0, Lam = 1, Phi = 2;
  for (int aU = 0; aU < 3; ++aU)
    for (int aP = 0; aP < 3; ++aP)
      for (int bU = 0; bU < 3; ++bU)
        for (int bP = 0; bP < 3; ++bP) {
          auto t = [&](int x, int y) { return aP == x && bP == y ? 1.0 : 0.0; };
          auto ut = [&](int x, int y) { return aU == x && bP == y ? 1.0 : 0.0; };
          auto uu = [&](int x, int y) { return aU == x && bU == y ? 1.0 : 0.0; };
          auto tu = [&](int x, int y) { return aP == x && bU == y ? 1.0 : 0.0; };
          double v = 0;
          for (int c : {One, Lam, Phi}) v += t(c, c) + uu(c, c) + tu(c, c);
          v += ut(Phi, One) + ut(One, Lam) + ut(Lam, Phi);
          v -= t(One, Lam) + t(Lam, Phi) + t(Phi, One);
          for (int c : {One, Lam, Phi}) v -= ut(c, c);
          v -= uu(One, Lam) + uu(Lam, Phi) + uu(Phi, One);
          v -= tu(Lam, One) + tu(Phi, Lam) + tu(One, Phi);
          e.max = std::max(e.max, v);
          e.min = std::min(e.min, v);
          ++e.strategies;
        }
  return e;
}

}  // namespace anyon

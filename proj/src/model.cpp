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

#include "anyon/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyon {

namespace {

constexpr double kPi = std::numbers::pi;

std::string spin_name(int twice_j) {
  if (twice_j % 2 == 0) return std::to_string(twice_j / 2);
  return std::to_string(twice_j) + "/2";
}

}  // namespace

Charge AnyonModel::charge_of_label(const std::string& name) const {
  for (Charge c = 0; c < Charge(labels.size()); ++c)
    if (labels[c] == name || (!aliases[c].empty() && aliases[c] == name)) return c;
  throw std::invalid_argument("unknown charge label '" + name + "' in model " + id);
}

std::vector<int> su2k_fusion(int k, int twice_j1, int twice_j2) {
  if (twice_j1 < 0 || twice_j2 < 0 || (k >= 0 && (twice_j1 > k || twice_j2 > k)))
    throw std::invalid_argument("su2k_fusion: inadmissible spin at this level");
  std::vector<int> out;
  for (int tj = std::abs(twice_j1 - twice_j2); tj <= twice_j1 + twice_j2; tj += 2) {
    if (k >= 0 && (tj > k || twice_j1 + twice_j2 + tj > 2 * k)) continue;
    out.push_back(tj);
  }
  return out;
}

double quantum_integer(int m, int k) {
  return std::sin(m * kPi / (k + 2)) / std::sin(kPi / (k + 2));
}

namespace {

// Shared scaffolding for the SU(2)-family models. Labels are spins indexed
// by twice-spin; charge index == twice_j. max_twice_j bounds the stored
// table (counting utilities never need chain charges above it).
AnyonModel su2_family(int k, int max_twice_j) {
  AnyonModel m;
  m.kind = k < 0 ? ModelKind::su2 : ModelKind::su2k;
  m.level = k;
  m.id = k < 0 ? "su2" : "su2k:" + std::to_string(k);
  const int n = max_twice_j + 1;
  for (int tj = 0; tj < n; ++tj) {
    m.labels.push_back(spin_name(tj));
    m.aliases.push_back("");
  }
  if (k == 2) {
    // nu = 5/2 nomenclature: {1, sigma, psi} <-> {0, 1/2, 1}
    m.aliases = {"1", "sigma", "psi"};
  }
  m.vacuum = 0;
  m.generator = 1;  // spin 1/2
  m.fusion.assign(n, std::vector<std::vector<Charge>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<Charge> ch;
      for (int tj : su2k_fusion(k, a, b))
        if (tj < n) ch.push_back(tj);
      m.fusion[a][b] = ch;
    }
  m.qdim.resize(n);
  for (int tj = 0; tj < n; ++tj)
    m.qdim[tj] = k < 0 ? double(tj + 1) : quantum_integer(tj + 1, k);
  m.gen_channels = {0, 2};  // spins 0 and 1
  if (k < 0) {
    const double s3 = std::sqrt(3.0);
    m.f_gen = 0.5 * Mat(2, 2, {1.0, s3, s3, -1.0});
  } else {
    const double q2 = quantum_integer(2, k);
    const double q3 = quantum_integer(3, k);
    m.f_gen = (1.0 / q2) * Mat(2, 2, {1.0, std::sqrt(q3), std::sqrt(q3), -1.0});
  }
  if (k == 2) {
    // counterclockwise sigma exchange: R = 1 (+) i on channels {1, psi}
    m.r_gen = {{0, cplx(1, 0)}, {2, cplx(0, 1)}};
    m.has_braiding = true;
  }
  return m;
}

}  // namespace

AnyonModel su2_model() {
  // Spins up to 6 cover chain charges for every counting utility in scope
  // (twelve spin-1/2 anyons at most).
  return su2_family(-1, 12);
}

AnyonModel su2k_model(int k) {
  if (k < 2) throw std::invalid_argument("su2k_model: need k >= 2");
  return su2_family(k, k);
}

AnyonModel fibonacci_model() {
  AnyonModel m;
  m.kind = ModelKind::fib;
  m.id = "fib";
  m.labels = {"1", "tau"};
  m.aliases = {"", ""};
  m.vacuum = 0;
  m.generator = 1;
  m.fusion = {{{0}, {1}}, {{1}, {0, 1}}};  // tau x tau = 1 + tau
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  m.qdim = {1.0, phi};
  m.gen_channels = {0, 1};
  m.f_gen = Mat(2, 2,
                {1.0 / phi, 1.0 / std::sqrt(phi), 1.0 / std::sqrt(phi), -1.0 / phi});
  m.r_gen = {{0, std::polar(1.0, 4 * kPi / 5)}, {1, std::polar(1.0, 7 * kPi / 5)}};
  m.has_braiding = true;
  return m;
}

AnyonModel ds3_model() {
  AnyonModel m;
  m.kind = ModelKind::ds3;
  m.id = "ds3";
  m.labels = {"1", "Lam", "Phi"};
  m.aliases = {"", "Lambda", ""};
  m.vacuum = 0;
  m.generator = 2;
  // Lam x Lam = 1, Lam x Phi = Phi, Phi x Phi = 1 + Lam + Phi
  m.fusion = {{{0}, {1}, {2}}, {{1}, {0}, {2}}, {{2}, {2}, {0, 1, 2}}};
  m.qdim = {1.0, 1.0, 2.0};
  m.gen_channels = {0, 1, 2};
  const double r2 = 1.0 / std::sqrt(2.0);
  m.f_gen = Mat(3, 3, {0.5, 0.5, -r2, 0.5, 0.5, r2, -r2, r2, 0.0});
  m.r_gen = {{0, 1.0}, {1, -1.0}, {2, 1.0}};
  m.has_braiding = true;
  return m;
}

std::optional<AnyonModel> parse_model_id(const std::string& id) {
  if (id == "su2") return su2_model();
  if (id == "fib") return fibonacci_model();
  if (id == "ds3") return ds3_model();
  if (id.rfind("su2k:", 0) == 0) {
    try {
      size_t pos = 0;
      const int k = std::stoi(id.substr(5), &pos);
      if (pos != id.size() - 5 || k < 2) return std::nullopt;
      return su2k_model(k);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Charge> fusion_multiply(const AnyonModel& m, Charge a, Charge b) {
  if (a < 0 || b < 0 || a >= Charge(m.labels.size()) || b >= Charge(m.labels.size()))
    throw std::invalid_argument("fusion_multiply: unknown label");
  return m.fusion[a][b];
}

Mat f_matrix(const AnyonModel& m, Charge a, Charge b, Charge c, Charge d) {
  std::vector<Charge> xs;  // x in a*b with d in x*c
  for (Charge x : fusion_multiply(m, a, b)) {
    const auto& xc = fusion_multiply(m, x, c);
    if (std::find(xc.begin(), xc.end(), d) != xc.end()) xs.push_back(x);
  }
  std::vector<Charge> xps;  // x' in b*c with d in a*x'
  for (Charge xp : fusion_multiply(m, b, c)) {
    const auto& axp = fusion_multiply(m, a, xp);
    if (std::find(axp.begin(), axp.end(), d) != axp.end()) xps.push_back(xp);
  }
  if (xs.empty() || xps.empty())
    throw std::invalid_argument("f_matrix: no fusion path for (" + m.labels[a] + "," +
                                m.labels[b] + "," + m.labels[c] + ")->" + m.labels[d]);
  if (a == m.generator && b == m.generator && c == m.generator && d == m.generator)
    return m.f_gen;
  if (xs.size() == 1 && xps.size() == 1) return Mat::identity(1);
  throw std::invalid_argument("f_matrix: symbol not stored for this quadruple");
}

cplx r_symbol(const AnyonModel& m, Charge a, Charge b, Charge c) {
  const auto& ab = fusion_multiply(m, a, b);
  if (std::find(ab.begin(), ab.end(), c) == ab.end())
    throw std::invalid_argument("r_symbol: " + m.labels[c] + " is not a fusion channel of " +
                                m.labels[a] + " x " + m.labels[b]);
  if (a == m.generator && b == m.generator) {
    const auto it = m.r_gen.find(c);
    if (it != m.r_gen.end()) return it->second;
  }
  throw std::invalid_argument("r_symbol: phase not supplied by the theory data");
}

double quantum_dimension(const AnyonModel& m, Charge a) {
  if (a < 0 || a >= Charge(m.qdim.size()))
    throw std::invalid_argument("quantum_dimension: unknown label");
  return m.qdim[a];
}

std::vector<DS3Irrep> ds3_irrep_table() {
  return {
      {"Pi^[e]_{R1+}", 1.0},      // vacuum
      {"Pi^[c]_{beta0}", 2.0},    // pure magnetic
      {"Pi^[t]_{gamma0}", 3.0},   // pure magnetic
      {"Pi^[e]_{R1-}", 1.0},      // pure electric
      {"Pi^[e]_{R2}", 2.0},       // pure electric
      {"Pi^[c]_{beta1}", 2.0},    // dyon
      {"Pi^[c]_{beta2}", 2.0},    // dyon
      {"Pi^[t]_{gamma1}", 3.0},   // dyon
  };
}

}  // namespace anyon

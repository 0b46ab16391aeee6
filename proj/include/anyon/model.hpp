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

#ifndef ANYON_MODEL_HPP
#define ANYON_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anyon/linalg.hpp"

namespace anyon {

// Charges are indices into a model's label table. Every label in the four
// implemented theories is its own dual.
using Charge = int;

enum class ModelKind { su2, su2k, fib, ds3 };

// One anyon theory as data: labels, fusion coefficients N_ab^c (all in
// {0,1}), quantum dimensions, the single recoupling matrix each witness
// construction needs, and the braid phases the theory supplies.
//
// F-symbols beyond the generator block are not solved for: wherever a
// quadruple admits a single intermediate channel the symbol is fixed to +1
// in the chosen gauge, and that is the only other case f_matrix serves.
struct AnyonModel {
  std::string id;
  ModelKind kind = ModelKind::su2;
  int level = 0;  // k for the su2k family; unused otherwise

  std::vector<std::string> labels;
  std::vector<std::string> aliases;  // per-label alternate names ("" if none)
  Charge vacuum = 0;
  Charge generator = 0;  // the anyon the six-particle protocol braids

  // fusion[a][b] = sorted channels c with N_ab^c = 1
  std::vector<std::vector<std::vector<Charge>>> fusion;
  std::vector<double> qdim;

  // channels of generator x generator, in canonical (vacuum-first) order
  std::vector<Charge> gen_channels;
  // F^beta_ggg on gen_channels, beta = generator (real, symmetric, F^2 = 1)
  Mat f_gen;
  // R^c_{gg} for c in gen_channels, when the theory supplies braiding
  std::map<Charge, cplx> r_gen;
  bool has_braiding = false;

  int channel_count() const { return int(gen_channels.size()); }
  Charge charge_of_label(const std::string& name) const;  // throws if unknown
};

AnyonModel su2_model();        // k -> infinity; no braid data
AnyonModel su2k_model(int k);  // k >= 2; braid data only at k = 2
AnyonModel fibonacci_model();
AnyonModel ds3_model();  // the {1,Lambda,Phi} magnetic subtheory of D(S3)

// Model ids: "su2", "su2k:<k>", "fib", "ds3".
std::optional<AnyonModel> parse_model_id(const std::string& id);

std::vector<Charge> fusion_multiply(const AnyonModel& m, Charge a, Charge b);

// SU(2)_k truncated angular-momentum fusion on twice-spin integers:
// j in j1 x j2 iff |j1-j2| <= j <= j1+j2, j1+j2+j integer, j <= k/2 and
// j1+j2+j <= k. Pass k < 0 for plain SU(2).
std::vector<int> su2k_fusion(int k, int twice_j1, int twice_j2);

// [m]_q = sin(m pi/(k+2)) / sin(pi/(k+2)), q = e^{2 pi i/(k+2)}.
double quantum_integer(int m, int k);

// (F^d_{abc})_x^{x'} over admissible intermediate charges.
Mat f_matrix(const AnyonModel& m, Charge a, Charge b, Charge c, Charge d);

cplx r_symbol(const AnyonModel& m, Charge a, Charge b, Charge c);

double quantum_dimension(const AnyonModel& m, Charge a);

// The full 8-irrep table of D(S3), inert metadata kept for the
// quantum-dimension sum rule sum d^2 = |S3|^2 = 36.
struct DS3Irrep {
  std::string label;
  double qdim;
};
std::vector<DS3Irrep> ds3_irrep_table();

}  // namespace anyon

#endif  // ANYON_MODEL_HPP

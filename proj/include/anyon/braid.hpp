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

#ifndef ANYON_BRAID_HPP
#define ANYON_BRAID_HPP

#include <array>
#include <string>
#include <vector>

#include "anyon/witness.hpp"

namespace anyon {

struct BraidLetter {
  int gen;       // 1..5
  bool inverse;  // true for B_k^{-1}
};

// Letters are stored in temporal order: letters[0] acts first on the state.
// The string grammar mirrors operator notation (leftmost token applied
// last), so parsing reverses the token sequence. Grammar: whitespace-
// separated tokens `b<k>` or `b<k>'` (prime = inverse), or a bracketed
// group with repetition suffix: `( b3 b4' b1' b3' b2' ) x5`.
struct BraidWord {
  std::vector<BraidLetter> letters;

  int length() const { return int(letters.size()); }
};

BraidWord parse_braid_word(const std::string& text);   // throws on bad syntax
std::string format_braid_word(const BraidWord& word);  // operator notation

// The five braid-group generators on the six-anyon vacuum sector. B_j
// exchanges anyons j and j+1 counterclockwise. Supplied for SU(2)_2,
// Fibonacci and D(S3); SU(2) itself has no braid representation in scope.
struct BraidRep {
  SectorBasis basis;
  std::array<Mat, 5> gen;
  std::array<Mat, 5> inv;
  std::string b3_assignment;  // record of the resolved summand order

  const Mat& letter_matrix(const BraidLetter& l) const {
    return l.inverse ? inv[l.gen - 1] : gen[l.gen - 1];
  }
};

BraidRep braid_generators(const SectorBasis& basis);

// Operator diagonal in the (3,4)-pair channel basis with one phase per
// fusion channel of generator x generator (vacuum-first order). B3 is this
// with the R-phases; the straddling interaction gate is this with e^{i
// theta}. The (gen,gen) phi-slot mixes with the trailing beta block through
// F^-1 diag F in reversed channel order.
Mat straddle_channel_operator(const SectorBasis& basis,
                              std::span<const cplx> channel_diag);

Mat word_matrix(const BraidRep& rep, const BraidWord& word);
Vec apply_word(const BraidRep& rep, const BraidWord& word, const Vec& v);

struct RelationReport {
  double unitarity;      // max ||B^dag B - 1||_max
  double yang_baxter;    // max ||B_i B_{i+1} B_i - B_{i+1} B_i B_{i+1}||_max
  double far_commute;    // max ||[B_i, B_j]||_max over |i-j| >= 2
  double involution;     // max ||B_j^2 - 1||_max (D(S3) only, else -1)
  bool pass;
};
RelationReport verify_braid_relations(const BraidRep& rep);

// Breadth-first closure of {start} under the generators and inverses,
// deduplicated modulo global phase at tolerance 1e-8. Throws if the orbit
// exceeds max_states.
std::vector<Vec> orbit_states(const BraidRep& rep, const Vec& start,
                              int max_states);
std::vector<Vec> orbit_states(const std::vector<Mat>& generators,
                              const Vec& start, int max_states);

// One braid word per permutation of S6 (valid because B_j^2 = 1 makes the
// image state depend only on the permutation), evaluated against a witness.
struct PermScanResult {
  std::vector<double> values;  // 720 entries, lexicographic permutation order
  double max_abs;
  double min;
  double max;
  bool constant;
  bool alt_pairing_in_orbit;   // B3 B4 B2 B1 |phi0> reached by some permutation
  bool word_invariance_ok;     // random same-permutation words agree
};
PermScanResult ds3_permutation_scan(const BraidRep& rep,
                                    const WitnessOperator& witness);

}  // namespace anyon

#endif  // ANYON_BRAID_HPP

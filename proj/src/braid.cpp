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

#include "anyon/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace anyon {

namespace {

constexpr double kOrbitDedupTol = 1e-8;

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(cur), cur.clear();
    } else if (c == '(' || c == ')') {
      if (!cur.empty()) tokens.push_back(cur), cur.clear();
      tokens.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

BraidLetter parse_letter(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'b')
    throw std::invalid_argument("braid word: bad token '" + tok + "'");
  std::string body = tok.substr(1);
  bool inverse = false;
  if (!body.empty() && body.back() == '\'') {
    inverse = true;
    body.pop_back();
  }
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("braid word: bad token '" + tok + "'");
  const int k = std::stoi(body);
  if (k < 1 || k > 5)
    throw std::invalid_argument("braid word: generator index out of range in '" + tok + "'");
  return {k, inverse};
}

}  // namespace

BraidWord parse_braid_word(const std::string& text) {
  const auto tokens = tokenize(text);
  // operator-notation token list, possibly one bracketed group + xN suffix
  std::vector<BraidLetter> listed;
  int repeat = 1;
  size_t i = 0;
  if (!tokens.empty() && tokens[0] == "(") {
    size_t close = 0;
    for (size_t j = 1; j < tokens.size(); ++j)
      if (tokens[j] == ")") {
        close = j;
        break;
      }
    if (close == 0) throw std::invalid_argument("braid word: unbalanced '('");
    for (size_t j = 1; j < close; ++j) listed.push_back(parse_letter(tokens[j]));
    i = close + 1;
    if (i < tokens.size()) {
      const std::string& rep = tokens[i];
      if (rep.size() < 2 || rep[0] != 'x' ||
          rep.find_first_not_of("0123456789", 1) != std::string::npos)
        throw std::invalid_argument("braid word: expected repetition suffix, got '" + rep + "'");
      repeat = std::stoi(rep.substr(1));
      if (repeat < 0) throw std::invalid_argument("braid word: negative repetition");
      ++i;
    }
    if (i != tokens.size())
      throw std::invalid_argument("braid word: trailing tokens after group");
  } else {
    for (; i < tokens.size(); ++i) {
      if (tokens[i] == "(" || tokens[i] == ")")
        throw std::invalid_argument("braid word: stray bracket");
      listed.push_back(parse_letter(tokens[i]));
    }
  }

  // The listed product acts right-to-left; store letters in temporal order.
  BraidWord w;
  for (int r = 0; r < repeat; ++r)
    for (auto it = listed.rbegin(); it != listed.rend(); ++it) w.letters.push_back(*it);
  return w;
}

std::string format_braid_word(const BraidWord& word) {
  std::ostringstream out;
  bool first = true;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (!first) out << ' ';
    out << 'b' << it->gen << (it->inverse ? "'" : "");
    first = false;
  }
  return out.str();
}

namespace {

// phi-slot scalar data for B3 / the straddling interaction gate: the pair
// (3,4) channel c is forced on every phi-slot except (generator,generator);
// those states mix with the trailing beta block through M = F^-1 R F.
struct StraddleLayout {
  std::vector<int> scalar_channel;  // per phi-slot (x',y) outside the block
  std::vector<int> block_slots;     // (gen,gen) slot then trailing slots
  std::vector<int> block_channel;   // channel index per block slot (reversal)
};

StraddleLayout straddle_layout(const SectorBasis& basis) {
  const AnyonModel& m = basis.model;
  const auto& ch = m.gen_channels;
  const int n = int(ch.size());
  StraddleLayout lay;
  lay.scalar_channel.assign(basis.dim(), -1);
  for (int xi = 0; xi < n; ++xi)
    for (int yi = 0; yi < n; ++yi) {
      const int slot = basis.product_index(xi, yi);
      // c in (x' * y) intersect (g * g)
      std::vector<Charge> cs;
      for (Charge c : fusion_multiply(m, ch[xi], ch[yi]))
        if (std::find(ch.begin(), ch.end(), c) != ch.end()) cs.push_back(c);
      if (cs.size() == 1) {
        const auto pos = std::find(ch.begin(), ch.end(), cs[0]) - ch.begin();
        lay.scalar_channel[slot] = int(pos);
      } else {
        lay.block_slots.push_back(slot);  // the (g,g) slot
      }
    }
  for (int t = basis.product_dim(); t < basis.dim(); ++t) lay.block_slots.push_back(t);
  // Block rows run (beta = g, then the trailing betas in listing order),
  // which is exactly the reversed channel order in all three braided models.
  for (size_t i = 0; i < lay.block_slots.size(); ++i)
    lay.block_channel.push_back(int(lay.block_slots.size()) - 1 - int(i));
  return lay;
}

// O^dag [ per-slot scalars + block(channel-diagonal conjugated by F) ] O,
// shared between B3 (diag = R) and the (3,4) interaction gate (diag = e^{i theta}).
Mat straddle_operator(const SectorBasis& basis, const std::vector<cplx>& channel_diag) {
  const AnyonModel& m = basis.model;
  const auto lay = straddle_layout(basis);
  const int dim = basis.dim();
  Mat inner(dim, dim);
  for (int s = 0; s < dim; ++s)
    if (lay.scalar_channel[s] >= 0) inner(s, s) = channel_diag[lay.scalar_channel[s]];
  if (!lay.block_slots.empty()) {
    const int bn = int(lay.block_slots.size());
    Mat d(bn, bn);
    for (int i = 0; i < bn; ++i) d(i, i) = channel_diag[i];
    const Mat mblk = dagger(m.f_gen) * d * m.f_gen;  // F^-1 diag F, F involutory
    for (int i = 0; i < bn; ++i)
      for (int j = 0; j < bn; ++j)
        inner(lay.block_slots[i], lay.block_slots[j]) =
            mblk(lay.block_channel[i], lay.block_channel[j]);
  }
  const Mat o = primed_change_matrix(basis);
  return dagger(o) * inner * o;
}

std::string describe_layout(const SectorBasis& basis) {
  const auto lay = straddle_layout(basis);
  std::ostringstream out;
  out << "B3 phi-slot channels:";
  for (int s = 0; s < basis.dim(); ++s) {
    if (lay.scalar_channel[s] >= 0)
      out << " " << basis.model.labels[basis.model.gen_channels[lay.scalar_channel[s]]];
    else
      out << " M";
  }
  out << "; block rows in reversed channel order";
  return out.str();
}

BraidRep su2_2_generators(const SectorBasis& basis) {
  // Exact exponentials of the Pauli forms, basis {1, psi} vacuum-first:
  // B1 = e^{-i pi/4 sx} (x) 1, B2 = e^{-i pi/4 sz} (x) 1,
  // B3 = e^{-i pi/4 sx (x) sz}, B4/B5 mirrored on Bob.
  const double c = std::cos(std::numbers::pi / 4);
  const cplx mis(0, -std::sin(std::numbers::pi / 4));
  const Mat sx(2, 2, {0, 1, 1, 0});
  const Mat sz(2, 2, {1, 0, 0, -1});
  const Mat i2 = Mat::identity(2);
  auto expm = [&](const Mat& p) {  // e^{-i pi/4 P} for P^2 = 1
    return cplx(c, 0) * Mat::identity(p.rows()) + mis * p;
  };
  BraidRep rep;
  rep.basis = basis;
  rep.gen[0] = kron(expm(sx), i2);
  rep.gen[1] = kron(expm(sz), i2);
  rep.gen[2] = expm(kron(sx, sz));
  rep.gen[3] = kron(i2, expm(sx));
  rep.gen[4] = kron(i2, expm(sz));
  rep.b3_assignment = "B3 = exp(-i pi/4 sx (x) sz) (Pauli form)";
  return rep;
}

BraidRep general_generators(const SectorBasis& basis) {
  const AnyonModel& m = basis.model;
  const int n = m.channel_count();
  const Mat in = Mat::identity(n);
  Mat r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = m.r_gen.at(m.gen_channels[i]);
  const Mat frf = m.f_gen * r * dagger(m.f_gen);

  // Trailing paired states carry the generator channel on every local pair,
  // so B1, B2, B4, B5 multiply them by R^{gen}_{gg}.
  const cplx r_trailing = m.r_gen.at(m.generator);
  const int t = basis.trailing_dim();
  auto lift = [&](const Mat& a, bool alice) {
    std::vector<Mat> blocks;
    blocks.push_back(alice ? kron(a, in) : kron(in, a));
    for (int i = 0; i < t; ++i) blocks.push_back(Mat::scalar(r_trailing));
    return direct_sum(blocks);
  };

  BraidRep rep;
  rep.basis = basis;
  rep.gen[0] = lift(frf, true);
  rep.gen[1] = lift(r, true);
  std::vector<cplx> rdiag(n);
  for (int i = 0; i < n; ++i) rdiag[i] = r(i, i);
  rep.gen[2] = straddle_operator(basis, rdiag);
  rep.gen[3] = lift(frf, false);
  rep.gen[4] = lift(r, false);
  rep.b3_assignment = describe_layout(basis);
  return rep;
}

}  // namespace

BraidRep braid_generators(const SectorBasis& basis) {
  const AnyonModel& m = basis.model;
  if (!m.has_braiding)
    throw std::invalid_argument("braid_generators: no braid representation in scope for " +
                                m.id);
  BraidRep rep = (m.kind == ModelKind::su2k && m.level == 2)
                     ? su2_2_generators(basis)
                     : general_generators(basis);
  for (int i = 0; i < 5; ++i) rep.inv[i] = dagger(rep.gen[i]);
  return rep;
}

Mat word_matrix(const BraidRep& rep, const BraidWord& word) {
  Mat u = Mat::identity(rep.basis.dim());
  for (const BraidLetter& l : word.letters) u = rep.letter_matrix(l) * u;
  return u;
}

Vec apply_word(const BraidRep& rep, const BraidWord& word, const Vec& v) {
  Vec w = v;
  for (const BraidLetter& l : word.letters) w = rep.letter_matrix(l) * w;
  return w;
}

RelationReport verify_braid_relations(const BraidRep& rep) {
  RelationReport r{0, 0, 0, -1, false};
  for (const Mat& b : rep.gen)
    r.unitarity = std::max(r.unitarity, unitarity_residual(b));
  for (int i = 0; i < 4; ++i) {
    const Mat& a = rep.gen[i];
    const Mat& b = rep.gen[i + 1];
    r.yang_baxter = std::max(r.yang_baxter, max_abs(a * b * a - b * a * b));
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 2; j < 5; ++j)
      r.far_commute =
          std::max(r.far_commute, max_abs(rep.gen[i] * rep.gen[j] - rep.gen[j] * rep.gen[i]));
  if (rep.basis.model.kind == ModelKind::ds3) {
    r.involution = 0;
    const Mat id = Mat::identity(rep.basis.dim());
    for (const Mat& b : rep.gen)
      r.involution = std::max(r.involution, max_abs(b * b - id));
  }
  r.pass = r.unitarity <= kTolStructure && r.yang_baxter <= kTolStructure &&
           r.far_commute <= kTolStructure &&
           (r.involution < 0 || r.involution <= kTolExact);
  return r;
}

std::vector<Vec> orbit_states(const std::vector<Mat>& generators, const Vec& start,
                              int max_states) {
  std::vector<Vec> states{normalized(start)};
  size_t frontier_begin = 0;
  while (frontier_begin < states.size()) {
    const size_t frontier_end = states.size();
    for (size_t s = frontier_begin; s < frontier_end; ++s) {
      for (const Mat& g : generators) {
        const Vec t = g * states[s];
        bool known = false;
        for (const Vec& u : states)
          if (states_equal_up_to_phase(u, t, kOrbitDedupTol)) {
            known = true;
            break;
          }
        if (!known) {
          states.push_back(t);
          if (int(states.size()) > max_states)
            throw std::runtime_error("orbit_states: orbit exceeded max_states");
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return states;
}

std::vector<Vec> orbit_states(const BraidRep& rep, const Vec& start, int max_states) {
  std::vector<Mat> gens(rep.gen.begin(), rep.gen.end());
  gens.insert(gens.end(), rep.inv.begin(), rep.inv.end());
  return orbit_states(gens, start, max_states);
}

namespace {

// Adjacent-transposition word realizing a permutation (bubble sort).
std::vector<int> permutation_word(std::array<int, 6> p) {
  std::vector<int> word;
  for (int pass = 0; pass < 6; ++pass)
    for (int j = 0; j + 1 < 6; ++j)
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        word.push_back(j + 1);
      }
  return word;
}

}  // namespace

PermScanResult ds3_permutation_scan(const BraidRep& rep, const WitnessOperator& witness) {
  if (rep.basis.model.kind != ModelKind::ds3)
    throw std::invalid_argument("ds3_permutation_scan: D(S3) only");
  const Vec phi0 = phi0_state(rep.basis);

  PermScanResult res;
  res.max_abs = 0;
  res.min = 1e300;
  res.max = -1e300;

  // alternative vacuum-pair configuration, B1 acting first
  Vec alt = phi0;
  for (int k : {1, 2, 4, 3}) alt = rep.gen[k - 1] * alt;
  res.alt_pairing_in_orbit = false;

  std::array<int, 6> p{0, 1, 2, 3, 4, 5};
  do {
    Vec v = phi0;
    for (int k : permutation_word(p)) v = rep.gen[k - 1] * v;
    const double val = expectation(witness.matrix, v);
    res.values.push_back(val);
    res.max_abs = std::max(res.max_abs, std::abs(val));
    res.min = std::min(res.min, val);
    res.max = std::max(res.max, val);
    if (!res.alt_pairing_in_orbit && states_equal_up_to_phase(v, alt, kOrbitDedupTol))
      res.alt_pairing_in_orbit = true;
  } while (std::next_permutation(p.begin(), p.end()));

  res.constant = (res.max - res.min) <= 1e-9;

  // B_j^2 = 1 plus the braid relations make the image state a function of
  // the permutation alone; spot-check on random same-permutation word pairs.
  std::mt19937_64 rng(12345);
  res.word_invariance_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> w1;
    const int len = int(rng() % 12);
    for (int i = 0; i < len; ++i) w1.push_back(int(rng() % 5) + 1);
    std::vector<int> w2 = w1;
    const int extra = int(rng() % 5) + 1;
    w2.push_back(extra);
    w2.push_back(extra);  // B_j^2 = 1
    Vec v1 = phi0, v2 = phi0;
    for (int k : w1) v1 = rep.gen[k - 1] * v1;
    for (int k : w2) v2 = rep.gen[k - 1] * v2;
    if (!states_equal_up_to_phase(v1, v2, 1e-9)) res.word_invariance_ok = false;
  }
  return res;
}

}  // namespace anyon

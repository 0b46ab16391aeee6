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

#ifndef ANYON_LINALG_HPP
#define ANYON_LINALG_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace anyon {

using cplx = std::complex<double>;

// Tolerance policy: structural identities (unitarity, braid relations,
// involutions) are checked at 1e-10 or tighter; reproductions of the
// 4-decimal reference values at 5e-4 absolute.
inline constexpr double kTolUnitary = 1e-10;
inline constexpr double kTolHermitian = 1e-12;
inline constexpr double kTolStructure = 1e-10;
inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolPaperValue = 5e-4;

// Dense row-major complex matrix. All operators in this project act on
// spaces of dimension <= 64, so no sparsity or blocking is attempted.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Mat(int rows, int cols, std::initializer_list<cplx> entries);

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat diag(std::span<const cplx> d);
  static Mat scalar(cplx z);  // 1x1 block, convenient for direct sums

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cplx z);

  std::vector<cplx> column(int j) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(cplx z, Mat a);
Mat operator*(const Mat& a, const Mat& b);  // dimension mismatch -> throw

Mat dagger(const Mat& a);
Mat transpose(const Mat& a);

// Kronecker product; the LEFT factor is the slow (most significant) index.
// Subsystem A is the slow index everywhere in this project.
Mat kron(const Mat& a, const Mat& b);

// Block-diagonal matrix, block order = argument order. All blocks square.
Mat direct_sum(std::span<const Mat> blocks);
Mat direct_sum(std::initializer_list<Mat> blocks);

double max_abs(const Mat& a);
double unitarity_residual(const Mat& u);     // ||U^dag U - 1||_max
double hermiticity_residual(const Mat& a);   // ||A - A^dag||_max
double max_abs_diff(const Mat& a, const Mat& b);

// Complex column vector.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : a_(dim) {}
  Vec(std::initializer_list<cplx> entries) : a_(entries) {}

  static Vec unit(int dim, int k);

  int dim() const { return int(a_.size()); }
  cplx& operator[](int i) { return a_[i]; }
  const cplx& operator[](int i) const { return a_[i]; }

 private:
  std::vector<cplx> a_;
};

Vec operator*(const Mat& a, const Vec& v);
Vec operator*(cplx z, Vec v);
Vec operator+(Vec u, const Vec& v);
Vec operator-(Vec u, const Vec& v);

cplx inner(const Vec& u, const Vec& v);  // <u|v>, conjugate-linear in u
double norm(const Vec& v);
Vec normalized(Vec v);

// <v|A|v> as a real number; imaginary part must be roundoff for Hermitian A.
double expectation(const Mat& a, const Vec& v);

// Global braid phases are physically irrelevant: two unit vectors describe
// the same state iff |<u|v>| >= 1 - tol.
bool states_equal_up_to_phase(const Vec& u, const Vec& v, double tol);

struct EigResult {
  std::vector<double> values;  // ascending
  Mat vectors;                 // columns, orthonormal
};

// Cyclic Jacobi diagonalisation of a Hermitian matrix, dim <= 64.
// Residual contract: ||A v - lambda v||_2 <= 1e-10 per pair.
EigResult hermitian_eigensystem(const Mat& a);

}  // namespace anyon

#endif  // ANYON_LINALG_HPP

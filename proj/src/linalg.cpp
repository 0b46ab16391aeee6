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

#include "anyon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace anyon {

Mat::Mat(int rows, int cols, std::initializer_list<cplx> entries)
    : rows_(rows), cols_(cols), a_(entries) {
  if (a_.size() != size_t(rows) * cols)
    throw std::invalid_argument("Mat: entry count does not match shape");
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(std::span<const cplx> d) {
  Mat m(int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::scalar(cplx z) {
  Mat m(1, 1);
  m(0, 0) = z;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: shape mismatch in +=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: shape mismatch in -=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(cplx z) {
  for (auto& x : a_) x *= z;
  return *this;
}

std::vector<cplx> Mat::column(int j) const {
  std::vector<cplx> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(cplx z, Mat a) { return a *= z; }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: inner dimensions disagree");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Mat dagger(const Mat& a) {
  Mat d(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d(j, i) = std::conj(a(i, j));
  return d;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

Mat direct_sum(std::span<const Mat> blocks) {
  int n = 0;
  for (const Mat& b : blocks) {
    if (b.rows() != b.cols())
      throw std::invalid_argument("direct_sum: blocks must be square");
    n += b.rows();
  }
  Mat s(n, n);
  int off = 0;
  for (const Mat& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) s(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return s;
}

Mat direct_sum(std::initializer_list<Mat> blocks) {
  return direct_sum(std::span<const Mat>(blocks.begin(), blocks.size()));
}

double max_abs(const Mat& a) {
  double m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

double unitarity_residual(const Mat& u) {
  return max_abs(dagger(u) * u - Mat::identity(u.cols()));
}

double hermiticity_residual(const Mat& a) { return max_abs(a - dagger(a)); }

double max_abs_diff(const Mat& a, const Mat& b) { return max_abs(a - b); }

Vec Vec::unit(int dim, int k) {
  Vec v(dim);
  v[k] = 1.0;
  return v;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.dim())
    throw std::invalid_argument("matvec: dimension mismatch");
  Vec w(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    cplx s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    w[i] = s;
  }
  return w;
}

Vec operator*(cplx z, Vec v) {
  for (int i = 0; i < v.dim(); ++i) v[i] *= z;
  return v;
}

Vec operator+(Vec u, const Vec& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("vec +: dim mismatch");
  for (int i = 0; i < u.dim(); ++i) u[i] += v[i];
  return u;
}

Vec operator-(Vec u, const Vec& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("vec -: dim mismatch");
  for (int i = 0; i < u.dim(); ++i) u[i] -= v[i];
  return u;
}

cplx inner(const Vec& u, const Vec& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("inner: dim mismatch");
  cplx s = 0;
  for (int i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const Vec& v) { return std::sqrt(std::real(inner(v, v))); }

Vec normalized(Vec v) {
  const double n = norm(v);
  if (n == 0) throw std::invalid_argument("normalized: zero vector");
  for (int i = 0; i < v.dim(); ++i) v[i] /= n;
  return v;
}

double expectation(const Mat& a, const Vec& v) {
  return std::real(inner(v, a * v));
}

bool states_equal_up_to_phase(const Vec& u, const Vec& v, double tol) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("states_equal_up_to_phase: dim mismatch");
  return std::abs(inner(u, v)) >= 1.0 - tol;
}

namespace {

double off_diag_norm(const Mat& a) {
  double s = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eigensystem(const Mat& input) {
  const int n = input.rows();
  if (n != input.cols() || n > 64)
    throw std::invalid_argument("hermitian_eigensystem: need square dim <= 64");
  if (hermiticity_residual(input) > kTolHermitian * std::max(1.0, max_abs(input)) + kTolHermitian)
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");

  Mat a = input;
  // Symmetrise away representation roundoff so the rotations stay exact.
  for (int i = 0; i < n; ++i) {
    a(i, i) = std::real(a(i, i));
    for (int j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  Mat v = Mat::identity(n);

  const double scale = std::max(1.0, max_abs(a));
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diag_norm(a) < 1e-14 * scale) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        // Unitary 2x2 rotation annihilating a(p,q): first absorb the phase,
        // then a real Jacobi rotation.
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double absq = std::abs(apq);
        const cplx phase = apq / absq;  // e^{i arg}
        const double tau = (aqq - app) / (2.0 * absq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Column rotation G: col p' = c*p - s*conj(phase)*q ; col q' = s*phase*p + c*q
        for (int i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return std::real(a(i, i)) < std::real(a(j, j));
  });

  EigResult r;
  r.values.resize(n);
  r.vectors = Mat(n, n);
  for (int k = 0; k < n; ++k) {
    r.values[k] = std::real(a(order[k], order[k]));
    for (int i = 0; i < n; ++i) r.vectors(i, k) = v(i, order[k]);
  }
  return r;
}

}  // namespace anyon

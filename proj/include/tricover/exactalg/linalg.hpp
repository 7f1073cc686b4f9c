/* Copyright (C) 2026 The tricover authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tricover/exactalg/field.hpp"

namespace tricover {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Row-reduces M in place to reduced echelon form; returns pivot columns.
// Pivots are the entries of largest FieldTraits magnitude (first nonzero for
// exact domains).
template <class K>
std::vector<int> rref(Matrix<K>& M) {
  std::vector<int> piv;
  if (M.empty()) return piv;
  const int rows = static_cast<int>(M.size()), cols = static_cast<int>(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    double bm = 0.0;
    for (int i = r; i < rows; ++i) {
      double m = FieldTraits<K>::magnitude(M[i][c]);
      if (!is_zero(M[i][c]) && (best < 0 || m > bm)) {
        best = i;
        bm = m;
        if (FieldTraits<K>::exact) break;
      }
    }
    if (best < 0) continue;
    std::swap(M[r], M[best]);
    K inv = one_like(M[r][c]) / M[r][c];
    for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(M[i][c])) continue;
      K f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

// Basis of {x : M x = 0}; one vector per free column.
template <class K>
std::vector<std::vector<K>> kernel(Matrix<K> M, const K& zero, int cols) {
  std::vector<std::vector<K>> basis;
  std::vector<int> piv = M.empty() ? std::vector<int>{} : rref(M);
  std::vector<int> is_piv(cols, -1);
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) is_piv[piv[i]] = i;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f] >= 0) continue;
    std::vector<K> v(cols, zero);
    v[f] = one_like(zero);
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) v[piv[i]] = -M[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
K determinant(Matrix<K> M) {
  const int n = static_cast<int>(M.size());
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  K det = one_like(M[0][0]);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    double bm = 0.0;
    for (int i = c; i < n; ++i) {
      double m = FieldTraits<K>::magnitude(M[i][c]);
      if (!is_zero(M[i][c]) && (best < 0 || m > bm)) {
        best = i;
        bm = m;
        if (FieldTraits<K>::exact) break;
      }
    }
    if (best < 0) return zero_like(det);
    if (best != c) {
      std::swap(M[c], M[best]);
      det = -det;
    }
    det = det * M[c][c];
    K inv = one_like(det) / M[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(M[i][c])) continue;
      K f = M[i][c] * inv;
      for (int j = c; j < n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  return det;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& M) {
  const int n = static_cast<int>(M.size());
  Matrix<K> A(n);
  const K zero = zero_like(M[0][0]);
  for (int i = 0; i < n; ++i) {
    A[i] = M[i];
    for (int j = 0; j < n; ++j) A[i].push_back(i == j ? one_like(zero) : zero);
  }
  std::vector<int> piv = rref(A);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<K> R(n);
  for (int i = 0; i < n; ++i) R[i].assign(A[i].begin() + n, A[i].end());
  return R;
}

template <class K>
Matrix<K> mat_mul(const Matrix<K>& A, const Matrix<K>& B) {
  const std::size_t n = A.size(), m = B[0].size(), k = B.size();
  Matrix<K> C(n, std::vector<K>(m, zero_like(A[0][0])));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) C[i][j] += A[i][l] * B[l][j];
  return C;
}

template <class K>
std::vector<K> mat_vec(const Matrix<K>& A, const std::vector<K>& v) {
  std::vector<K> r(A.size(), zero_like(v.at(0)));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += A[i][j] * v[j];
  return r;
}

}  // namespace tricover

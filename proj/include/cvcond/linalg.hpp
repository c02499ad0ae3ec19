// Copyright 2019-2024 Cambridge Quantum Computing
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

#pragma once

#include <optional>
#include <vector>

#include "cvcond/quad_field.hpp"

namespace cvcond {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

// ---- linear algebra over the quadratic field ----

struct Rref {
  Mat<QuadScalar> m;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(Mat<QuadScalar> a, size_t ncols);
size_t rank(const Mat<QuadScalar>& a, size_t ncols);
// One solution of a x = b with free variables set to 0.
std::optional<Vec<QuadScalar>> solve(const Mat<QuadScalar>& a, size_t ncols,
                                     const Vec<QuadScalar>& b);
// Basis of {x : a x = 0}.
Mat<QuadScalar> nullspace(const Mat<QuadScalar>& a, size_t ncols);
Mat<QuadScalar> transpose(const Mat<QuadScalar>& a, size_t ncols);

// ---- integer linear algebra ----

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct Smith {
  Mat<Integer> U, D, V;
  std::vector<Integer> diagonal() const;
};
Smith smith_normal_form(const Mat<Integer>& a);

// Integer x with a x = b, if one exists.
std::optional<Vec<Integer>> solve_integer(const Mat<Integer>& a, size_t ncols,
                                          const Vec<Integer>& b);
// Determinant by fraction-free elimination.
Integer det_bareiss(Mat<Integer> a);
// Echelon basis of the Z-span of the given integer rows (zero rows dropped).
Mat<Integer> hermite_rows(Mat<Integer> rows, size_t ncols);

// ---- mixed real / integer membership ----

// Decides whether target = A_real * r + A_int * n for some real r and
// integer n, where the columns live in K^N. On success returns n.
std::optional<Vec<Integer>> solve_mixed(const Mat<QuadScalar>& real_cols,
                                        const Mat<QuadScalar>& int_cols,
                                        const Vec<QuadScalar>& target);

// The set {p in R^r : l_k(p) in Z for all integrality functionals,
//                     l_k(p) = 0 for all vanishing functionals}
// presented as lattice generators plus a continuous span.
struct QuantizedDomain {
  Mat<QuadScalar> lattice;     // Z-generators
  Mat<QuadScalar> continuous;  // R-span
};
QuantizedDomain quantize(const Mat<QuadScalar>& integral, const Mat<QuadScalar>& vanishing,
                         size_t r);

// Rational and surd coordinates of a K-vector, 2N entries (N if d == 0).
Vec<Rational> split_components(const Vec<QuadScalar>& v, long d);
long common_discriminant(const Mat<QuadScalar>& m);

}  // namespace cvcond

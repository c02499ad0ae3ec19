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

#include "cvcond/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "cvcond/errors.hpp"

namespace cvcond {

Rref rref(Mat<QuadScalar> a, size_t ncols) {
  Rref out;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < a.size(); ++col) {
    size_t piv = row;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    QuadScalar inv = a[row][col].inverse();
    for (size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      QuadScalar f = a[i][col];
      for (size_t j = col; j < ncols; ++j) {
        if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  out.m = std::move(a);
  return out;
}

size_t rank(const Mat<QuadScalar>& a, size_t ncols) { return rref(a, ncols).pivots.size(); }

std::optional<Vec<QuadScalar>> solve(const Mat<QuadScalar>& a, size_t ncols,
                                     const Vec<QuadScalar>& b) {
  Mat<QuadScalar> aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Rref r = rref(std::move(aug), ncols + 1);
  Vec<QuadScalar> x(ncols);
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == ncols) return std::nullopt;
    x[r.pivots[i]] = r.m[i][ncols];
  }
  return x;
}

Mat<QuadScalar> nullspace(const Mat<QuadScalar>& a, size_t ncols) {
  Rref r = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  Mat<QuadScalar> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec<QuadScalar> v(ncols);
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat<QuadScalar> transpose(const Mat<QuadScalar>& a, size_t ncols) {
  Mat<QuadScalar> t(ncols, Vec<QuadScalar>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) t[j][i] = a[i][j];
  return t;
}

// ---- integers ----

namespace {

Mat<Integer> identity(size_t n) {
  Mat<Integer> m(n, Vec<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_axpy(Mat<Integer>& m, size_t dst, size_t src, const Integer& q) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_axpy(Mat<Integer>& m, size_t dst, size_t src, const Integer& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void col_swap(Mat<Integer>& m, size_t a, size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> Smith::diagonal() const {
  std::vector<Integer> d;
  for (size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
  return d;
}

Smith smith_normal_form(const Mat<Integer>& a) {
  const size_t m = a.size();
  const size_t n = m ? a[0].size() : 0;
  Smith s{identity(m), a, identity(n)};
  Mat<Integer>& D = s.D;
  for (size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return s;
      std::swap(D[t], D[pi]);
      std::swap(s.U[t], s.U[pi]);
      col_swap(D, t, pj);
      col_swap(s.V, t, pj);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        Integer q = tdiv(D[i][t], D[t][t]);
        row_axpy(D, i, t, q);
        row_axpy(s.U, i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        Integer q = tdiv(D[t][j], D[t][t]);
        col_axpy(D, j, t, q);
        col_axpy(s.V, j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            row_axpy(D, t, i, -1);
            row_axpy(s.U, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
  }
  return s;
}

std::optional<Vec<Integer>> solve_integer(const Mat<Integer>& a, size_t ncols,
                                          const Vec<Integer>& b) {
  const size_t m = a.size();
  if (m == 0) return Vec<Integer>(ncols, 0);
  Smith s = smith_normal_form(a);
  Vec<Integer> c(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k) c[i] += s.U[i][k] * b[k];
  Vec<Integer> y(ncols, 0);
  for (size_t i = 0; i < m; ++i) {
    Integer d = i < ncols ? s.D[i][i] : Integer(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  Vec<Integer> x(ncols, 0);
  for (size_t i = 0; i < ncols; ++i)
    for (size_t k = 0; k < ncols; ++k) x[i] += s.V[i][k] * y[k];
  return x;
}

Integer det_bareiss(Mat<Integer> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Mat<Integer> hermite_rows(Mat<Integer> rows, size_t ncols) {
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    while (true) {
      size_t piv = rows.size();
      for (size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col])))
          piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool done = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        row_axpy(rows, i, r, tdiv(rows[i][col], rows[r][col]));
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

// ---- mixed ----

long common_discriminant(const Mat<QuadScalar>& m) {
  long d = 0;
  for (const auto& row : m)
    for (const auto& x : row) {
      if (x.discriminant() == 0) continue;
      if (d != 0 && d != x.discriminant()) throw DiscriminantMismatch("mixed surds in matrix");
      d = x.discriminant();
    }
  return d;
}

Vec<Rational> split_components(const Vec<QuadScalar>& v, long d) {
  Vec<Rational> out;
  out.reserve(v.size() * 2);
  for (const auto& x : v) out.push_back(x.rational_part());
  if (d != 0)
    for (const auto& x : v) out.push_back(x.surd_part());
  return out;
}

namespace {

// Scales each rational row by the lcm of its denominators.
Mat<Integer> integerize(const Mat<Rational>& rows, Vec<Rational>* rhs) {
  Mat<Integer> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    Integer l = 1;
    for (const auto& x : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].get_den_mpz_t());
    Vec<Integer> row;
    for (const auto& x : rows[i]) row.push_back(Integer(x * Rational(l)));
    if (rhs) (*rhs)[i] *= Rational(l);
    out.push_back(std::move(row));
  }
  return out;
}

QuadScalar rebuild(const Rational& a, const Rational& b, long d) {
  if (d == 0) return QuadScalar(a);
  return QuadScalar(a, b, d);
}

}  // namespace

std::optional<Vec<Integer>> solve_mixed(const Mat<QuadScalar>& real_cols,
                                        const Mat<QuadScalar>& int_cols,
                                        const Vec<QuadScalar>& target) {
  const size_t N = target.size();
  // Left kernel of the real block, W * A_real = 0.
  Mat<QuadScalar> W;
  if (real_cols.empty()) {
    for (size_t i = 0; i < N; ++i) {
      Vec<QuadScalar> e(N);
      e[i] = 1;
      W.push_back(std::move(e));
    }
  } else {
    W = nullspace(real_cols, N);  // rows of real_cols are the columns of A_real
  }
  const size_t nz = int_cols.size();
  Mat<QuadScalar> M(W.size(), Vec<QuadScalar>(nz));
  Vec<QuadScalar> rhs(W.size());
  for (size_t i = 0; i < W.size(); ++i) {
    for (size_t k = 0; k < N; ++k) {
      if (W[i][k].is_zero()) continue;
      for (size_t j = 0; j < nz; ++j)
        if (!int_cols[j][k].is_zero()) M[i][j] += W[i][k] * int_cols[j][k];
      if (!target[k].is_zero()) rhs[i] += W[i][k] * target[k];
    }
  }
  Mat<QuadScalar> all = M;
  all.push_back(rhs);
  long d = common_discriminant(all);
  Mat<Rational> qrows;
  Vec<Rational> qrhs;
  for (size_t i = 0; i < M.size(); ++i) {
    Vec<Rational> ra, rb;
    for (const auto& x : M[i]) {
      ra.push_back(x.rational_part());
      rb.push_back(x.surd_part());
    }
    qrows.push_back(ra);
    qrhs.push_back(rhs[i].rational_part());
    if (d != 0) {
      qrows.push_back(rb);
      qrhs.push_back(rhs[i].surd_part());
    }
  }
  Mat<Integer> A = integerize(qrows, &qrhs);
  Vec<Integer> b;
  for (const auto& x : qrhs) b.push_back(Integer(x));
  return solve_integer(A, nz, b);
}

QuantizedDomain quantize(const Mat<QuadScalar>& integral, const Mat<QuadScalar>& vanishing,
                         size_t r) {
  Mat<QuadScalar> V0;
  if (vanishing.empty()) {
    for (size_t i = 0; i < r; ++i) {
      Vec<QuadScalar> e(r);
      e[i] = 1;
      V0.push_back(std::move(e));
    }
  } else {
    V0 = nullspace(vanishing, r);
  }
  const size_t s = V0.size();
  QuantizedDomain out;
  auto lift = [&](const Vec<QuadScalar>& q) {
    Vec<QuadScalar> p(r);
    for (size_t j = 0; j < s; ++j)
      for (size_t i = 0; i < r; ++i) p[i] += q[j] * V0[j][i];
    return p;
  };
  if (s == 0) return out;
  // Functionals restricted to the vanishing kernel.
  Mat<QuadScalar> restricted;
  for (const auto& l : integral) {
    Vec<QuadScalar> row(s);
    for (size_t j = 0; j < s; ++j)
      for (size_t i = 0; i < r; ++i) row[j] += l[i] * V0[j][i];
    restricted.push_back(std::move(row));
  }
  long d = common_discriminant(restricted);
  const size_t w = d == 0 ? 1 : 2;
  Mat<Rational> qrows;
  for (const auto& row : restricted) qrows.push_back(split_components(row, d));
  // Common scale so that the Z-span is preserved.
  Integer l = 1;
  for (const auto& row : qrows)
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Mat<Integer> irows;
  for (const auto& row : qrows) {
    Vec<Integer> v;
    for (const auto& x : row) v.push_back(Integer(x * Rational(l)));
    irows.push_back(std::move(v));
  }
  Mat<Integer> H = hermite_rows(irows, s * w);
  Mat<QuadScalar> B;
  for (const auto& row : H) {
    Vec<QuadScalar> v(s);
    for (size_t j = 0; j < s; ++j) {
      Rational a = Rational(row[j]) / Rational(l);
      Rational b = w == 2 ? Rational(row[s + j]) / Rational(l) : Rational(0);
      v[j] = rebuild(a, b, d);
    }
    B.push_back(std::move(v));
  }
  if (rank(B, s) < B.size()) throw NotDiscrete("integrality conditions are dense");
  for (size_t i = 0; i < B.size(); ++i) {
    Vec<QuadScalar> e(B.size());
    e[i] = 1;
    auto q = solve(B, s, e);
    out.lattice.push_back(lift(*q));
  }
  for (const auto& v : nullspace(B, s)) out.continuous.push_back(lift(v));
  return out;
}

}  // namespace cvcond

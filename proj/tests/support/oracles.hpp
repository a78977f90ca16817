/*
   Copyright 2026 The hypergeo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// library's algorithms beyond constructing inputs, so agreement is meaningful.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "hypergeo/poly.hpp"
#include "hypergeo/rational.hpp"

namespace hypergeo::test_support {

inline std::vector<double> to_doubles(const IntPoly& p) {
  std::vector<double> c;
  for (const auto& x : p.coeffs()) c.push_back(x.get_d());
  return c;
}

/// Roots as eigenvalues of the companion matrix, computed in floating point.
inline std::vector<std::complex<double>> numeric_roots(const std::vector<double>& asc) {
  const int n = static_cast<int>(asc.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -asc[i] / asc[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

/// Root angles in [0,1): for every j/m with m <= 64, the multiplicity of exp(2 pi i j/m) as a
/// root, read off from the first derivative that does not vanish there.
inline std::vector<Rat> numeric_angles(const IntPoly& p) {
  std::vector<double> c = to_doubles(p);
  std::vector<Rat> out;
  for (long m = 1; m <= 64; ++m)
    for (long j = 0; j < m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      const std::complex<double> z = std::polar(1.0, 2 * M_PI * double(j) / double(m));
      std::vector<double> d = c;
      int mult = 0;
      while (d.size() > 1) {
        std::complex<double> v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * z + d[i];
        if (std::abs(v) > 1e-7) break;
        ++mult;
        std::vector<double> next(d.size() - 1);
        for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * double(i);
        d = std::move(next);
      }
      for (int k = 0; k < mult; ++k) out.emplace_back(j, m);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sylvester resultant evaluated in floating point.
inline double numeric_resultant(const std::vector<double>& f, const std::vector<double>& g) {
  const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = g[n - j];
  return s.determinant();
}

/// Palindromic quartics X^4 + a X^3 + b X^2 + a X + 1 whose roots all lie on the unit
/// circle; by Kronecker these are exactly the degree-4 admissible cyclotomic products.
inline std::vector<std::array<long, 5>> brute_force_quartics() {
  std::vector<std::array<long, 5>> out;
  for (long a = -4; a <= 4; ++a)
    for (long b = -6; b <= 6; ++b) {
      std::vector<double> c{1.0, double(a), double(b), double(a), 1.0};
      bool unit = true;
      for (auto z : numeric_roots(c)) unit = unit && std::abs(std::abs(z) - 1.0) < 1e-3;
      if (unit) out.push_back({1, a, b, a, 1});
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Coprime primitive pairs among the brute-force quartics, f < g lexicographically.
inline std::vector<std::pair<std::array<long, 5>, std::array<long, 5>>> brute_force_pairs() {
  auto qs = brute_force_quartics();
  std::vector<std::pair<std::array<long, 5>, std::array<long, 5>>> out;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      const auto& f = qs[i];
      const auto& g = qs[j];
      std::vector<double> fd(f.begin(), f.end()), gd(g.begin(), g.end());
      if (std::abs(numeric_resultant(fd, gd)) < 0.5) continue;
      if (f[1] == 0 && g[1] == 0) continue;  // both in Z[X^2]
      out.emplace_back(f, g);
    }
  return out;
}

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

inline IMat companion_ll(const std::array<long, 5>& asc) {
  IMat m = IMat::Zero(4, 4);
  for (int i = 1; i < 4; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < 4; ++i) m(i, 3) = -asc[i];
  return m;
}

/// Inverse of a unimodular integer matrix via floating point and rounding.
inline IMat inverse_ll(const IMat& m) {
  Eigen::MatrixXd inv = m.cast<double>().inverse();
  IMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = std::llround(inv(i, j));
  return out;
}

/// Length of the shortest word gamma over A^{+-1}, B^{+-1} (all words, no reduction) with
/// |e_n coefficient of gamma v| in {1,2}, rank(v, gamma v, gamma^-1 v) = 3 and
/// Omega(v, gamma v) != 0, or -1 if none up to `depth`. Omega is supplied as a double matrix.
inline int brute_force_conjugator_length(const std::array<long, 5>& f, const std::array<long, 5>& g, int depth,
                                         const Eigen::MatrixXd& omega) {
  IMat a = companion_ll(f), b = companion_ll(g);
  IMat gens[4] = {a, inverse_ll(a), b, inverse_ll(b)};
  IMat invs[4] = {gens[1], gens[0], gens[3], gens[2]};
  Eigen::Matrix<long long, Eigen::Dynamic, 1> v(4);
  IMat c = inverse_ll(a) * b;
  for (int i = 0; i < 4; ++i) v(i) = c(i, 3) - (i == 3 ? 1 : 0);
  struct Node {
    IMat m, inv;
  };
  std::vector<Node> layer{{IMat::Identity(4, 4), IMat::Identity(4, 4)}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Node> next;
    for (const auto& nd : layer)
      for (int l = 0; l < 4; ++l) {
        Node n2{nd.m * gens[l], invs[l] * nd.inv};
        auto gv = n2.m * v;
        auto giv = n2.inv * v;
        long long coef = std::llabs(gv(3));
        if (coef == 1 || coef == 2) {
          Eigen::MatrixXd w(4, 3);
          w.col(0) = v.cast<double>();
          w.col(1) = gv.cast<double>();
          w.col(2) = giv.cast<double>();
          double form = v.cast<double>().dot(omega * gv.cast<double>());
          if (Eigen::FullPivLU<Eigen::MatrixXd>(w).rank() == 3 && std::abs(form) > 1e-9) return len;
        }
        next.push_back(std::move(n2));
      }
    layer = std::move(next);
  }
  return -1;
}

using I2 = std::array<long long, 4>;  // row-major 2x2

inline I2 mul2(const I2& x, const I2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

/// Every product of at most `len` letters from {M1^{+-1}, M2^{+-1}} with the given c.
inline std::set<I2> brute_force_sl2_ball(long long c, int len) {
  const I2 gens[4] = {{1, -c, 0, 1}, {1, c, 0, 1}, {1, 0, c, 1}, {1, 0, -c, 1}};
  std::set<I2> seen{{1, 0, 0, 1}};
  std::vector<I2> layer{{1, 0, 0, 1}};
  for (int l = 0; l < len; ++l) {
    std::vector<I2> next;
    for (const auto& m : layer)
      for (const auto& gmat : gens) {
        I2 p = mul2(m, gmat);
        if (seen.insert(p).second) next.push_back(p);
      }
    layer = std::move(next);
  }
  return seen;
}

}  // namespace hypergeo::test_support

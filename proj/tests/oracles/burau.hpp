#pragma once

// Alexander polynomials of braid closures from the reduced Burau representation:
//   Delta(t) ~ det(I - B(beta)) * (1 - t) / (1 - t^n)
// with the determinant taken by fraction-free (Bareiss) elimination over Z[t].
// Also the closed formula for torus knots.

#include "polynomial.hpp"

#include <map>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<Poly>>;

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = {1};
  return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].empty()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].empty()) r[i][j] = add(r[i][j], mul(a[i][k], b[k][j]));
      }
    }
  }
  return r;
}

// Reduced Burau matrix of the generator sigma_i (1-based) on n strands, size n-1.
inline Matrix burau_generator(std::size_t n, std::size_t i) {
  Matrix m = identity(n - 1);
  const std::size_t k = i - 1;
  m[k][k] = {0, -1};  // -t
  if (k > 0) m[k][k - 1] = {0, 1};  // t
  if (k + 1 < n - 1) m[k][k + 1] = {1};
  return m;
}

inline Poly determinant(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return {1};
  Poly prev = {1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divexact(sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])), prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  return sign > 0 ? d : neg(d);
}

// Alexander polynomial of the closure of a braid word on n strands, given as a list of
// positive generator indices.
inline std::map<long, mpz_class> braid_closure_alexander(std::size_t n, const std::vector<std::size_t>& word) {
  if (n == 1) return {{0, 1}};
  Matrix b = identity(n - 1);
  for (std::size_t g : word) b = matmul(b, burau_generator(n, g));
  Matrix m = identity(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) {
    for (std::size_t j = 0; j < n - 1; ++j) m[i][j] = sub(m[i][j], b[i][j]);
  }
  Poly det = determinant(m);
  Poly geometric(n, mpz_class(1));  // 1 + t + ... + t^(n-1) = (1 - t^n) / (1 - t)
  return symmetrize(divexact(det, geometric));
}

// The word (s_b ... s_1)(s_{omega-1} ... s_1)^m.
inline std::vector<std::size_t> one_bridge_word(long omega, long b, long m) {
  std::vector<std::size_t> w;
  for (long i = b; i >= 1; --i) w.push_back(static_cast<std::size_t>(i));
  for (long r = 0; r < m; ++r) {
    for (long i = omega - 1; i >= 1; --i) w.push_back(static_cast<std::size_t>(i));
  }
  return w;
}

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q >= 1.
inline std::map<long, mpz_class> torus_knot_alexander(long p, long q) {
  auto tm1 = [](long k) { return sub(monomial(1, static_cast<std::size_t>(k)), {1}); };
  Poly num = mul(tm1(p * q), tm1(1));
  Poly den = mul(tm1(p), tm1(q));
  return symmetrize(divexact(num, den));
}

}  // namespace oracle

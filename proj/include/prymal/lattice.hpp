#pragma once

// Integral lattices given by Gram matrices: exact short-vector enumeration
// (Fincke-Pohst over Q) and isometry testing against scaled E6.

#include "prymal/linalg.hpp"
#include "prymal/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace prymal {

using IntVector = std::vector<long>;

/// Cartan matrix of E6, Bourbaki labelling (chain 1-3-4-5-6, node 2 on 4).
inline Matrix e6_cartan() {
  Matrix c(6, 6);
  for (std::size_t i = 0; i < 6; ++i) c(i, i) = 2;
  const std::size_t edges[5][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
  for (const auto& e : edges) {
    c(e[0], e[1]) = -1;
    c(e[1], e[0]) = -1;
  }
  return c;
}

inline Matrix scaled(const Matrix& m, const Rational& s) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

inline Rational quadratic_form(const Matrix& gram, const IntVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[i] != 0 && x[j] != 0) s += gram(i, j) * x[i] * x[j];
  return s;
}

inline Rational bilinear_form(const Matrix& gram, const IntVector& x, const IntVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (x[i] != 0 && y[j] != 0) s += gram(i, j) * x[i] * y[j];
  return s;
}

/// Square-completion of a symmetric matrix: x^T Q x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
/// Returns nullopt when Q is not positive definite.
inline std::optional<Matrix> square_completion(const Matrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  const std::size_t n = gram.rows();
  Matrix q = gram;
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

inline bool is_positive_definite(const Matrix& gram) { return square_completion(gram).has_value(); }

/// All nonzero integer vectors with x^T Q x <= bound, for positive definite Q.
inline std::vector<IntVector> short_vectors(const Matrix& gram, const Rational& bound) {
  const auto q = square_completion(gram);
  if (!q) throw std::invalid_argument("short-vector enumeration needs a positive definite form");
  const std::size_t n = gram.rows();
  std::vector<IntVector> out;
  IntVector x(n, 0);

  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
    // center = -sum_{j > level} q_{level j} x_j
    Rational center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center -= (*q)(level, j) * x[j];
    const Rational qii = (*q)(level, level);
    const auto try_value = [&](long v) {
      const Rational t = Rational(v) - center;
      const Rational used = qii * t * t;
      if (used > budget) return false;
      x[level] = v;
      if (level == 0) {
        bool nonzero = false;
        for (long c : x) nonzero = nonzero || c != 0;
        if (nonzero) out.push_back(x);
      } else {
        descend(level - 1, budget - used);
      }
      return true;
    };
    // Nearest integer: |v - center| grows monotonically in each direction from it.
    const Rational shifted = center + Rational(1, 2);
    Integer nearest = boost::multiprecision::numerator(shifted) / boost::multiprecision::denominator(shifted);
    if (shifted < 0 && !is_integer(shifted)) nearest -= 1;
    const long start = nearest.convert_to<long>();
    for (long v = start; try_value(v); ++v) {
    }
    for (long v = start - 1; try_value(v); --v) {
    }
    x[level] = 0;
  };
  if (n > 0) descend(n - 1, bound);
  return out;
}

/// Minimal nonzero norm of a positive definite lattice, searching up to `cap`.
inline std::optional<Rational> minimal_norm(const Matrix& gram, const Rational& cap) {
  std::optional<Rational> best;
  for (const auto& v : short_vectors(gram, cap)) {
    const Rational nv = quadratic_form(gram, v);
    if (!best || nv < *best) best = nv;
  }
  return best;
}

/// An integral change of basis B with B^T G B = target, found by matching the
/// images of the target basis among vectors of G with the right norms.
inline std::optional<Matrix> find_isometry(const Matrix& gram, const Matrix& target) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n || target.rows() != n || target.cols() != n) return std::nullopt;
  if (!gram.is_symmetric() || !target.is_symmetric()) return std::nullopt;
  // Definite forms only; a negative definite pair is handled by negating both.
  Matrix g = gram, t = target;
  if (!is_positive_definite(g)) {
    g = scaled(g, -1);
    t = scaled(t, -1);
    if (!is_positive_definite(g)) return std::nullopt;
  }
  if (!is_positive_definite(t)) return std::nullopt;
  if (determinant(g) != determinant(t)) return std::nullopt;

  Rational max_norm = 0;
  for (std::size_t i = 0; i < n; ++i) max_norm = std::max(max_norm, t(i, i));
  const auto candidates = short_vectors(g, max_norm);
  // Isometric lattices have the same number of vectors of each norm.
  const auto norm_counts = [](const Matrix& m, const std::vector<IntVector>& vs) {
    std::map<Rational, std::size_t> counts;
    for (const auto& v : vs) ++counts[quadratic_form(m, v)];
    return counts;
  };
  if (norm_counts(g, candidates) != norm_counts(t, short_vectors(t, max_norm))) return std::nullopt;

  std::vector<IntVector> chosen;
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == n) {
      Matrix b(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) b(r, c) = chosen[c][r];
      const Rational det = determinant(b);
      return det == 1 || det == -1;
    }
    for (const auto& v : candidates) {
      if (quadratic_form(g, v) != t(k, k)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = bilinear_form(g, chosen[j], v) == t(j, k);
      if (!ok) continue;
      chosen.push_back(v);
      if (place(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  Matrix b(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) b(r, c) = chosen[c][r];
  return b;
}

/// Whether `gram` is integrally isometric to E6(scale).
inline bool check_E6_isometry(const Matrix& gram, int scale) {
  if (gram.rows() != 6 || gram.cols() != 6) return false;
  const auto b = find_isometry(gram, scaled(e6_cartan(), scale));
  return b && b->transpose() * gram * *b == scaled(e6_cartan(), scale);
}

}  // namespace prymal

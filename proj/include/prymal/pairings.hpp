#pragma once

// Pairings between 27 classes indexed by the lines of a cubic surface, solved
// from the tritangent-triple constraints
//     sum_{Y in T} p(X, Y) = total   for every line X and every triple T,
// and the lattice-level checks built on top of the solved tables.

#include "prymal/cubic27.hpp"
#include "prymal/lattice.hpp"
#include "prymal/linalg.hpp"
#include "prymal/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prymal {

class PairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PairingTable {
 public:
  PairingTable(std::vector<Line> lines, Matrix values) : lines_(std::move(lines)), values_(std::move(values)) {
    if (values_.rows() != lines_.size() || values_.cols() != lines_.size())
      throw std::invalid_argument("pairing table shape does not match the line list");
    if (!values_.is_symmetric()) throw std::invalid_argument("pairing table must be symmetric");
  }

  std::size_t size() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(std::size_t i) const { return lines_.at(i); }
  const Matrix& values() const { return values_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const Rational& self_value() const { return values_(0, 0); }

  std::size_t index_of(const PicVector& v) const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
      if (lines_[i].v == v) return i;
    throw std::out_of_range("not one of the 27 lines: " + v.to_string());
  }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
      if (lines_[i].label() == label) return i;
    throw std::out_of_range("unknown line label: " + label);
  }

 private:
  std::vector<Line> lines_;
  Matrix values_;
};

namespace detail {

/// Sparse row: column -> coefficient, with the right-hand side kept apart.
struct SparseRow {
  std::map<std::size_t, Rational> coeffs;
  Rational rhs = 0;
};

inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  // Row-major enumeration of i < j.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// row -= f * pivot
inline void eliminate(SparseRow& row, const SparseRow& pivot, const Rational& f) {
  for (const auto& [c, v] : pivot.coeffs) {
    auto [it, inserted] = row.coeffs.try_emplace(c, Rational(0));
    it->second -= f * v;
    if (it->second == 0) row.coeffs.erase(it);
  }
  row.rhs -= f * pivot.rhs;
}

}  // namespace detail

struct PairingSystemReport {
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

/// Solves the triple constraints with p(X, X) = self_value.
///
/// Exact sparse elimination: each equation is reduced against the pivot rows
/// found so far (pivot = its leading column); a nonzero remainder becomes a
/// new pivot row, a zero remainder with nonzero right-hand side is an
/// inconsistency. Back substitution then yields the unique solution.
inline PairingTable solve_pairings(const Rational& self_value, const Rational& triple_total,
                                   PairingSystemReport* report = nullptr) {
  const auto lines = enumerate_lines();
  const auto triples = tritangent_triples(lines);
  const std::size_t n = lines.size();
  const std::size_t unknowns = n * (n - 1) / 2;

  std::map<std::size_t, detail::SparseRow> pivots;  // leading column -> row
  std::size_t equations = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& t : triples) {
      detail::SparseRow row;
      row.rhs = triple_total;
      for (std::size_t y : t) {
        if (y == x) {
          row.rhs -= self_value;
        } else {
          row.coeffs[detail::pair_index(x, y, n)] += 1;
        }
      }
      ++equations;
      while (!row.coeffs.empty()) {
        const auto lead = row.coeffs.begin();
        const auto p = pivots.find(lead->first);
        if (p == pivots.end()) break;
        const Rational f = lead->second;
        detail::eliminate(row, p->second, f);
      }
      if (row.coeffs.empty()) {
        if (row.rhs != 0) throw LinearSystemError("inconsistent pairing constraints", pivots.size(), unknowns);
        continue;
      }
      // Normalize so the leading coefficient is 1.
      const Rational lead = row.coeffs.begin()->second;
      for (auto& [c, v] : row.coeffs) v /= lead;
      row.rhs /= lead;
      pivots.emplace(row.coeffs.begin()->first, std::move(row));
    }
  if (report) *report = {equations, unknowns, pivots.size()};
  if (pivots.size() != unknowns) throw LinearSystemError("underdetermined pairing constraints", pivots.size(), unknowns);

  // Back substitution from the last pivot column.
  std::vector<Rational> value(unknowns, Rational(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rational v = it->second.rhs;
    for (const auto& [c, coef] : it->second.coeffs)
      if (c != it->first) v -= coef * value[c];
    value[it->first] = v;
  }

  Matrix table(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table(i, j) = i == j ? self_value : value[detail::pair_index(i, j, n)];
  return PairingTable(lines, std::move(table));
}

/// Line-to-line intersection number including L.L = -1.
inline int line_dot(const Line& a, const Line& b) { return dot(a.v, b.v); }

struct AffineForm {
  Rational constant;
  Rational slope;
};

/// Fits p(X, Y) = a + b (L_X . L_Y) over all pairs including the diagonal.
inline AffineForm verify_affine_form(const PairingTable& t) {
  // Values of p on the three incidence levels -1 (diagonal), 0 (skew), 1 (meet).
  std::map<int, Rational> level;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      const int e = line_dot(t.line(i), t.line(j));
      const auto [it, inserted] = level.try_emplace(e, t(i, j));
      if (!inserted && it->second != t(i, j))
        throw PairingError("no exact affine fit: pairing is not a function of line intersection");
    }
  if (!level.count(0) || !level.count(1)) throw PairingError("no exact affine fit: missing incidence levels");
  AffineForm f{level.at(0), level.at(1) - level.at(0)};
  for (const auto& [e, v] : level)
    if (f.constant + f.slope * e != v) throw PairingError("no exact affine fit");
  return f;
}

/// Configuration for difference classes [X_i] - [Y].
struct DeltaConfig {
  std::array<std::size_t, 6> xs{};
  std::size_t y = 0;
};

/// Standard configuration X_i = E_i, Y = F12.
inline DeltaConfig standard_delta_config(const PairingTable& t) {
  DeltaConfig c;
  for (int i = 0; i < 6; ++i) c.xs[i] = t.index_of(make_E(i + 1).v);
  c.y = t.index_of(make_F(1, 2).v);
  return c;
}

inline void validate_delta_config(const PairingTable& t, const DeltaConfig& c) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (c.xs[i] >= t.size()) throw std::out_of_range("line index out of range");
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (c.xs[i] == c.xs[j]) throw PairingError("invalid configuration: the six lines must be distinct");
      if (line_dot(t.line(c.xs[i]), t.line(c.xs[j])) != 0)
        throw PairingError("invalid configuration: the six lines are not mutually skew");
    }
  }
  if (c.y >= t.size()) throw std::out_of_range("line index out of range");
  int meets = 0;
  for (std::size_t x : c.xs) {
    if (x == c.y) throw PairingError("invalid configuration: the extra line is one of the six");
    meets += line_dot(t.line(x), t.line(c.y));
  }
  if (meets != 2) throw PairingError("invalid configuration: the extra line must meet exactly two of the six");
}

/// Gram matrix of delta_i = [X_i] - [Y].
inline Matrix gram_delta(const PairingTable& t, const DeltaConfig& c) {
  validate_delta_config(t, c);
  Matrix g(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      g(i, j) = t(c.xs[i], c.xs[j]) - t(c.xs[i], c.y) - t(c.y, c.xs[j]) + t(c.y, c.y);
  return g;
}

inline Matrix gram_delta(const PairingTable& t) { return gram_delta(t, standard_delta_config(t)); }

/// p(i,k) - p(i,l) - p(j,k) + p(j,l) = -2 (L_i - L_j).(L_k - L_l) for all quadruples.
inline bool check_primal_minus_two_isometry(const PairingTable& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<long>> p(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(t(i, j))) return false;
      p[i][j] = to_int64(t(i, j));
    }
  std::vector<std::vector<long>> e(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = line_dot(t.line(i), t.line(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const long lhs = p[i][k] - p[i][l] - p[j][k] + p[j][l];
          const long rhs = -2 * (e[i][k] - e[i][l] - e[j][k] + e[j][l]);
          if (lhs != rhs) return false;
        }
  return true;
}

/// lambda_L = L + K/3 as a rational 7-vector.
inline std::array<Rational, 7> primitive_projection(const Line& l) {
  const PicVector k = canonical_class();
  std::array<Rational, 7> out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = Rational(l.v[i]) + Rational(k[i], 3);
  return out;
}

inline Rational pic_dot(const std::array<Rational, 7>& u, const std::array<Rational, 7>& v) {
  Rational s = u[0] * v[0];
  for (std::size_t i = 1; i < 7; ++i) s -= u[i] * v[i];
  return s;
}

/// Model of the 27 classes: [X] -> (1, lambda_L) with form c0 x0 y0 + c1 <lambda, lambda'>.
struct ClassModel {
  Rational c0;
  Rational c1;
  std::vector<std::array<Rational, 8>> vectors;
};

inline ClassModel class_model(const PairingTable& t) {
  const AffineForm f = verify_affine_form(t);
  // a + b L.L' = a + b (lambda.lambda' + 1/3)
  ClassModel m{f.constant + f.slope / 3, f.slope, {}};
  for (const auto& l : t.lines()) {
    const auto lam = primitive_projection(l);
    std::array<Rational, 8> v;
    v[0] = 1;
    for (std::size_t i = 0; i < 7; ++i) v[i + 1] = lam[i];
    m.vectors.push_back(v);
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto li = primitive_projection(t.line(i));
      const auto lj = primitive_projection(t.line(j));
      if (m.c0 + m.c1 * pic_dot(li, lj) != t(i, j)) throw PairingError("class model does not reproduce the table");
    }
  return m;
}

/// Rank of the model vectors of the selected classes.
inline std::size_t model_rank(const ClassModel& m, const std::vector<std::size_t>& which) {
  Matrix a(which.size(), 8);
  for (std::size_t r = 0; r < which.size(); ++r)
    for (std::size_t c = 0; c < 8; ++c) a(r, c) = m.vectors.at(which[r])[c];
  return rank(a);
}

/// Rank of the differences [X_i] - [Y].
inline std::size_t difference_rank(const ClassModel& m, const DeltaConfig& c) {
  Matrix a(6, 8);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t k = 0; k < 8; ++k) a(r, k) = m.vectors.at(c.xs[r])[k] - m.vectors.at(c.y)[k];
  return rank(a);
}

inline std::size_t span_rank(const PairingTable& t) {
  const ClassModel m = class_model(t);
  std::vector<std::size_t> all(t.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return model_rank(m, all);
}

/// Inverse of the E6 Cartan matrix: Gram matrix of the dual (weight) lattice.
inline Matrix e6_dual_gram() {
  const Matrix c = e6_cartan();
  Matrix out(6, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    std::vector<Rational> e(6, Rational(0));
    e[j] = 1;
    const auto col = solve_unique(c, e);
    for (std::size_t i = 0; i < 6; ++i) out(i, j) = col[i];
  }
  return out;
}

struct DualNormReport {
  bool uniform_norm = false;        // lambda_L^2 = -4/3 for every line
  bool pairing_shift = false;       // lambda_L . lambda_L' = L.L' - 1/3
  bool integral_on_roots = false;   // lambda_L pairs integrally with K-perp
  bool model_matches_diagonal = false;
  Rational lambda_norm;             // in the negative definite K-perp
  Rational scaled_norm;             // c1 * lambda^2
  Rational dual_minimal_norm;       // of the positive definite E6 weight lattice
  std::size_t dual_minimal_count = 0;
  bool ok() const {
    return uniform_norm && pairing_shift && integral_on_roots && model_matches_diagonal &&
           -lambda_norm == dual_minimal_norm;
  }
};

inline DualNormReport dual_norm_report(const PairingTable& t) {
  DualNormReport r;
  const ClassModel m = class_model(t);
  const std::size_t n = t.size();
  r.lambda_norm = pic_dot(primitive_projection(t.line(0)), primitive_projection(t.line(0)));
  r.scaled_norm = m.c1 * r.lambda_norm;
  r.uniform_norm = true;
  r.pairing_shift = true;
  r.model_matches_diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto li = primitive_projection(t.line(i));
    r.uniform_norm = r.uniform_norm && pic_dot(li, li) == Rational(-4, 3);
    r.model_matches_diagonal = r.model_matches_diagonal && m.c0 + m.c1 * pic_dot(li, li) == t(i, i);
    for (std::size_t j = 0; j < n; ++j)
      r.pairing_shift = r.pairing_shift &&
                        pic_dot(li, primitive_projection(t.line(j))) == Rational(line_dot(t.line(i), t.line(j))) - Rational(1, 3);
  }
  r.integral_on_roots = true;
  for (const auto& root : e6_roots())
    for (const auto& l : t.lines()) {
      std::array<Rational, 7> rv;
      for (std::size_t k = 0; k < 7; ++k) rv[k] = root[k];
      r.integral_on_roots = r.integral_on_roots && is_integer(pic_dot(primitive_projection(l), rv));
    }
  const Matrix dual = e6_dual_gram();
  const auto shortest = short_vectors(dual, Rational(4, 3));
  Rational best = Rational(4, 3);
  for (const auto& v : shortest) best = std::min(best, quadratic_form(dual, v));
  r.dual_minimal_norm = best;
  for (const auto& v : shortest)
    if (quadratic_form(dual, v) == best) ++r.dual_minimal_count;
  return r;
}

inline bool dual_norm_check(const PairingTable& t) { return dual_norm_report(t).ok(); }

/// p(gX, gY) = p(X, Y) for each given Weyl element.
inline bool weyl_invariant(const PairingTable& t, const std::vector<WeylElement>& elements) {
  for (const auto& g : elements) {
    std::vector<std::size_t> image(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) image[i] = t.index_of(g(t.line(i).v));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        if (t(image[i], image[j]) != t(i, j)) return false;
  }
  return true;
}

struct RowSumReport {
  std::size_t containing = 0;      // (X, T) with X in T
  std::size_t not_containing = 0;  // (X, T) with X not in T
  bool containing_ok = true;
  bool not_containing_ok = true;
};

inline RowSumReport row_sums(const PairingTable& t, const Rational& total) {
  RowSumReport r;
  const auto triples = tritangent_triples(t.lines());
  for (std::size_t x = 0; x < t.size(); ++x)
    for (const auto& tr : triples) {
      const Rational s = t(x, tr[0]) + t(x, tr[1]) + t(x, tr[2]);
      const bool in = tr[0] == x || tr[1] == x || tr[2] == x;
      if (in) {
        ++r.containing;
        r.containing_ok = r.containing_ok && s == total;
      } else {
        ++r.not_containing;
        r.not_containing_ok = r.not_containing_ok && s == total;
      }
    }
  return r;
}

/// Every valid (sixer, extra line) configuration, in a canonical order.
inline std::vector<DeltaConfig> all_delta_configs(const PairingTable& t) {
  std::vector<DeltaConfig> out;
  for (const auto& s : sixers(t.lines()))
    for (std::size_t y = 0; y < t.size(); ++y) {
      int meets = 0;
      bool member = false;
      for (std::size_t x : s) {
        member = member || x == y;
        if (x != y) meets += line_dot(t.line(x), t.line(y));
      }
      if (!member && meets == 2) out.push_back(DeltaConfig{s, y});
    }
  return out;
}

}  // namespace prymal

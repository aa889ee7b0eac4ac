#pragma once

// The 27 lines on a smooth cubic surface as vectors in its Picard lattice
// Z^{1,6}, their incidence structure, and the Weyl group W(E6) acting on them.
//
// Coordinates (a; b1..b6) stand for a h - sum b_i e_i, with the form
// <u, v> = a_u a_v - sum b_u,i b_v,i. The canonical class is (-3; -1, ..., -1).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace prymal {

struct PicVector {
  std::array<int, 7> c{};  // c[0] = a, c[1..6] = b_1..b_6

  int& operator[](std::size_t i) { return c[i]; }
  int operator[](std::size_t i) const { return c[i]; }

  friend PicVector operator+(PicVector u, const PicVector& v) {
    for (std::size_t i = 0; i < 7; ++i) u.c[i] += v.c[i];
    return u;
  }
  friend PicVector operator-(PicVector u, const PicVector& v) {
    for (std::size_t i = 0; i < 7; ++i) u.c[i] -= v.c[i];
    return u;
  }
  friend PicVector operator*(int s, PicVector u) {
    for (auto& x : u.c) x *= s;
    return u;
  }
  friend auto operator<=>(const PicVector&, const PicVector&) = default;

  std::string to_string() const {
    std::string s = "(" + std::to_string(c[0]) + ";";
    for (std::size_t i = 1; i < 7; ++i) s += (i > 1 ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }
};

inline int dot(const PicVector& u, const PicVector& v) {
  int s = u[0] * v[0];
  for (std::size_t i = 1; i < 7; ++i) s -= u[i] * v[i];
  return s;
}

inline PicVector canonical_class() { return PicVector{{-3, -1, -1, -1, -1, -1, -1}}; }
inline PicVector hyperplane_class() { return PicVector{{1, 0, 0, 0, 0, 0, 0}}; }

enum class LineKind { E, F, G };

struct Line {
  PicVector v;
  LineKind kind;
  int i = 0;  // E_i, G_i, or the smaller index of F_ij (1-based)
  int j = 0;  // larger index of F_ij

  std::string label() const {
    switch (kind) {
      case LineKind::E: return "E" + std::to_string(i);
      case LineKind::G: return "G" + std::to_string(i);
      case LineKind::F: return "F" + std::to_string(i) + std::to_string(j);
    }
    return "?";
  }
};

inline Line make_E(int i) {
  PicVector v;
  v[static_cast<std::size_t>(i)] = -1;
  return {v, LineKind::E, i, 0};
}
inline Line make_F(int i, int j) {
  PicVector v;
  v[0] = 1;
  v[static_cast<std::size_t>(i)] = 1;
  v[static_cast<std::size_t>(j)] = 1;
  return {v, LineKind::F, std::min(i, j), std::max(i, j)};
}
inline Line make_G(int j) {
  PicVector v{{2, 1, 1, 1, 1, 1, 1}};
  v[static_cast<std::size_t>(j)] = 0;
  return {v, LineKind::G, j, 0};
}

/// Classify an exceptional vector (v.v = -1, v.K = -1) as E, F or G.
inline Line classify_line(const PicVector& v) {
  if (dot(v, v) != -1 || dot(v, canonical_class()) != -1)
    throw std::invalid_argument("not a line class: " + v.to_string());
  std::vector<int> idx;
  switch (v[0]) {
    case 0:
      for (int i = 1; i <= 6; ++i)
        if (v[static_cast<std::size_t>(i)] != 0) idx.push_back(i);
      return {v, LineKind::E, idx.at(0), 0};
    case 1:
      for (int i = 1; i <= 6; ++i)
        if (v[static_cast<std::size_t>(i)] != 0) idx.push_back(i);
      return {v, LineKind::F, idx.at(0), idx.at(1)};
    case 2:
      for (int i = 1; i <= 6; ++i)
        if (v[static_cast<std::size_t>(i)] == 0) idx.push_back(i);
      return {v, LineKind::G, idx.at(0), 0};
    default:
      throw std::invalid_argument("unexpected line class: " + v.to_string());
  }
}

/// Canonical order: E1..E6, F12..F56, G1..G6.
inline bool label_order(const Line& x, const Line& y) {
  const auto key = [](const Line& l) { return std::array<int, 3>{static_cast<int>(l.kind), l.i, l.j}; };
  return key(x) < key(y);
}

/// All v with v.v = -1 and v.K = -1, found by exhaustive search over
/// |a| <= 2, |b_i| <= 1, in canonical label order.
inline std::vector<Line> enumerate_lines() {
  const PicVector K = canonical_class();
  std::vector<Line> lines;
  PicVector v;
  for (v[0] = -2; v[0] <= 2; ++v[0])
    for (int code = 0; code < 729; ++code) {
      int r = code;
      for (std::size_t i = 1; i < 7; ++i) {
        v[i] = r % 3 - 1;
        r /= 3;
      }
      if (dot(v, v) == -1 && dot(v, K) == -1) lines.push_back(classify_line(v));
    }
  std::sort(lines.begin(), lines.end(), label_order);
  if (lines.size() != 27)
    throw std::logic_error("line enumeration found " + std::to_string(lines.size()) + " vectors, expected 27");
  return lines;
}

/// l1 . l2 for distinct lines; 1 when they meet, 0 when skew.
inline int incidence(const Line& l1, const Line& l2) {
  if (l1.v == l2.v) throw std::invalid_argument("self-incidence undefined; self-intersection is -1");
  return dot(l1.v, l2.v);
}

using Triple = std::array<std::size_t, 3>;

/// Unordered triples of mutually meeting lines (indices into `lines`).
inline std::vector<Triple> tritangent_triples(const std::vector<Line>& lines) {
  std::vector<Triple> out;
  const std::size_t n = lines.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (incidence(lines[a], lines[b]) != 1) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (incidence(lines[a], lines[c]) == 1 && incidence(lines[b], lines[c]) == 1) out.push_back({a, b, c});
    }
  return out;
}

using LineSet = std::array<std::size_t, 6>;

/// All sets of six mutually skew lines, by clique search in the skew graph.
inline std::vector<LineSet> sixers(const std::vector<Line>& lines) {
  const std::size_t n = lines.size();
  std::vector<LineSet> out;
  LineSet current{};
  auto extend = [&](auto& self, std::size_t depth, std::size_t start) -> void {
    if (depth == 6) {
      out.push_back(current);
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      bool skew = true;
      for (std::size_t k = 0; k < depth && skew; ++k) skew = incidence(lines[current[k]], lines[c]) == 0;
      if (!skew) continue;
      current[depth] = c;
      self(self, depth + 1, c + 1);
    }
  };
  extend(extend, 0, 0);
  return out;
}

/// Vectors of K-perp with v.v = -2 (the E6 roots), by search over
/// |a| <= 3, |b_i| <= 2.
inline std::vector<PicVector> e6_roots() {
  const PicVector K = canonical_class();
  std::vector<PicVector> roots;
  PicVector v;
  for (v[0] = -3; v[0] <= 3; ++v[0])
    for (int code = 0; code < 15625; ++code) {
      int r = code;
      for (std::size_t i = 1; i < 7; ++i) {
        v[i] = r % 5 - 2;
        r /= 5;
      }
      if (dot(v, v) == -2 && dot(v, K) == 0) roots.push_back(v);
    }
  return roots;
}

/// Integer 7x7 matrix acting on column vectors of PicVector coordinates.
struct WeylElement {
  std::array<std::int16_t, 49> m{};

  static WeylElement identity() {
    WeylElement e;
    for (std::size_t i = 0; i < 7; ++i) e.m[i * 7 + i] = 1;
    return e;
  }

  /// Reflection v -> v + (v.r) r in a root r (r.r = -2).
  static WeylElement reflection(const PicVector& r) {
    if (dot(r, r) != -2) throw std::invalid_argument("reflection needs a (-2)-vector");
    WeylElement e;
    for (std::size_t col = 0; col < 7; ++col) {
      PicVector basis;
      basis[col] = 1;
      const PicVector img = basis + dot(basis, r) * r;
      for (std::size_t row = 0; row < 7; ++row) e.m[row * 7 + col] = static_cast<std::int16_t>(img[row]);
    }
    return e;
  }

  PicVector operator()(const PicVector& v) const {
    PicVector out;
    for (std::size_t row = 0; row < 7; ++row) {
      int s = 0;
      for (std::size_t col = 0; col < 7; ++col) s += m[row * 7 + col] * v[col];
      out[row] = s;
    }
    return out;
  }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement c;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        int s = 0;
        for (std::size_t k = 0; k < 7; ++k) s += a.m[i * 7 + k] * b.m[k * 7 + j];
        c.m[i * 7 + j] = static_cast<std::int16_t>(s);
      }
    return c;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  bool preserves_form() const {
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        PicVector ei, ej;
        ei[i] = 1;
        ej[j] = 1;
        if (dot((*this)(ei), (*this)(ej)) != dot(ei, ej)) return false;
      }
    return true;
  }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e.m) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

class WeylGroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// W(E6) as an explicit set of matrices, generated by the index transpositions
/// (reflections in e_i - e_j) and the Cremona reflection in h - e1 - e2 - e3.
class WeylGroup {
 public:
  static constexpr std::size_t kClosureCap = 60000;

  static std::vector<WeylElement> standard_generators() {
    std::vector<WeylElement> gens;
    for (std::size_t i = 1; i <= 6; ++i)
      for (std::size_t j = i + 1; j <= 6; ++j) {
        PicVector r;  // e_i - e_j in (a; b) coordinates
        r[i] = -1;
        r[j] = 1;
        gens.push_back(WeylElement::reflection(r));
      }
    gens.push_back(WeylElement::reflection(PicVector{{1, 1, 1, 1, 0, 0, 0}}));
    return gens;
  }

  explicit WeylGroup(std::vector<WeylElement> generators = standard_generators(),
                     std::size_t cap = kClosureCap)
      : generators_(std::move(generators)) {
    // Breadth-first closure under right multiplication by generators.
    std::unordered_set<WeylElement, WeylElementHash> seen;
    std::vector<WeylElement> frontier{WeylElement::identity()};
    seen.insert(frontier.front());
    elements_.push_back(frontier.front());
    while (!frontier.empty()) {
      std::vector<WeylElement> next;
      for (const auto& x : frontier)
        for (const auto& s : generators_) {
          WeylElement y = x * s;
          if (seen.insert(y).second) {
            if (seen.size() > cap) throw WeylGroupError("group closure exceeds cap; generators are wrong");
            elements_.push_back(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const std::vector<WeylElement>& generators() const { return generators_; }

  /// Orbit of a vector.
  std::set<PicVector> orbit(const PicVector& v) const {
    std::set<PicVector> out;
    for (const auto& g : elements_) out.insert(g(v));
    return out;
  }

  /// Orbit of a set of vectors (acting elementwise).
  std::set<std::set<PicVector>> orbit(const std::set<PicVector>& s) const {
    std::set<std::set<PicVector>> out;
    for (const auto& g : elements_) {
      std::set<PicVector> image;
      for (const auto& v : s) image.insert(g(v));
      out.insert(std::move(image));
    }
    return out;
  }

  /// Whether the group acts transitively on `targets`.
  template <class T>
  bool is_transitive(const std::vector<T>& targets) const {
    if (targets.empty()) return true;
    const auto orb = orbit(targets.front());
    if (orb.size() != targets.size()) return false;
    return std::all_of(targets.begin(), targets.end(), [&](const T& t) { return orb.count(t) == 1; });
  }

 private:
  std::vector<WeylElement> generators_;
  std::vector<WeylElement> elements_;
};

}  // namespace prymal

// Copyright 2026 The twistcube authors
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

// Exact-rational directed geometry: rank functions, the metric-induced
// closed partial order d(x,y) <= f(y) - f(x), corner embeddings of the
// cube families, and the embedding checker for graph pospaces.

#ifndef TWISTCUBE_POSPACE_HPP_
#define TWISTCUBE_POSPACE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace twistcube {

struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords.at(i); }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const RationalPoint& a, const RationalPoint& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
      if (i) s += ",";
      s += rational_str(coords[i]);
    }
    return s + ")";
  }
};

enum class RankKind { standard, twisted };

//! Standard rank: the plain coordinate sum.
inline Rational rank_standard(const RationalPoint& x) {
  Rational sum = 0;
  for (const auto& c : x.coords) sum += c;
  return sum;
}

//! Twisted rank as a closed sum: term i is x_i * 2^(n-1-i) *
//! prod_{j<i} x_j.  Earlier coordinates can flip the direction of later
//! ones, and the power weights make every term dominate its tail inside
//! the [-1,1] box.
inline Rational rank_twisted(const RationalPoint& x) {
  const int n = x.dim();
  Rational sum = 0;
  Rational prefix = 1;
  for (int i = 0; i < n; ++i) {
    sum += x[i] * pow2(n - 1 - i) * prefix;
    prefix *= x[i];
  }
  return sum;
}

//! The recursive form at arity n+1 is x0 * (2^n + rank(rest)); it
//! unfolds to the sum above as a polynomial identity, which the
//! property suite checks on random rational points.
inline Rational rank_twisted_recursive(const RationalPoint& x) {
  Rational acc = 0;
  for (int i = x.dim() - 1; i >= 0; --i) {
    acc = x[i] * (pow2(x.dim() - 1 - i) + acc);
  }
  return acc;
}

inline Rational rank(RankKind kind, const RationalPoint& x) {
  return kind == RankKind::standard ? rank_standard(x) : rank_twisted(x);
}

//! A rank function together with a closed rational box domain; the pair
//! generates a closed partial order.
struct RankedSpace {
  RankKind kind;
  int dim = 0;
  std::vector<std::pair<Rational, Rational>> box;

  bool contains(const RationalPoint& x) const {
    if (x.dim() != dim) return false;
    for (int i = 0; i < dim; ++i) {
      if (x[i] < box[i].first || x[i] > box[i].second) return false;
    }
    return true;
  }

  //! All 2^dim corner points, in binary-word order of their digits.
  std::vector<RationalPoint> corners() const {
    std::vector<RationalPoint> out;
    for (const auto& w : BinaryWord::all(dim)) {
      std::vector<Rational> coords;
      coords.reserve(dim);
      for (int i = 0; i < dim; ++i) {
        coords.push_back(w[i] == 0 ? box[i].first : box[i].second);
      }
      out.push_back(RationalPoint(std::move(coords)));
    }
    return out;
  }
};

//! The standard-cube pospace over [0,1]^n.
inline RankedSpace cube_pospace(int n) {
  return RankedSpace{RankKind::standard, n,
                     std::vector<std::pair<Rational, Rational>>(
                         n, {Rational(0), Rational(1)})};
}

//! The twisted-cube pospace over [-1,1]^n; the twisted rank is only
//! order faithful inside this box.
inline RankedSpace twisted_pospace(int n) {
  return RankedSpace{RankKind::twisted, n,
                     std::vector<std::pair<Rational, Rational>>(
                         n, {Rational(-1), Rational(1)})};
}

inline RankedSpace boxed_space(RankKind kind, int n, const Rational& lo,
                               const Rational& hi) {
  if (hi < lo) throw Error("boxed_space: empty box");
  return RankedSpace{kind, n,
                     std::vector<std::pair<Rational, Rational>>(n, {lo, hi})};
}

//! The generated order x below y: d(x,y) <= f(y) - f(x), decided
//! exactly as a sign check plus a squared comparison (both sides are
//! non-negative once rank(y) >= rank(x), so no square roots).
inline bool below(const RankedSpace& space, const RationalPoint& x,
                  const RationalPoint& y) {
  if (!space.contains(x)) throw OutsideBox("point outside box: " + x.str());
  if (!space.contains(y)) throw OutsideBox("point outside box: " + y.str());
  const Rational delta = rank(space.kind, y) - rank(space.kind, x);
  if (delta < 0) return false;
  Rational dist2 = 0;
  for (int i = 0; i < space.dim; ++i) {
    const Rational d = y[i] - x[i];
    dist2 += d * d;
  }
  return dist2 <= delta * delta;
}

//! Coordinatewise order of the Euclidean pospace.
inline bool product_leq(const RationalPoint& x, const RationalPoint& y) {
  if (x.dim() != y.dim()) throw Error("product_leq: dimension mismatch");
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

//! Corner embedding of a binary word: 0/1 coordinates for the standard
//! cube, affinely mapped to -1/1 for the twisted one.
inline RationalPoint emb(RankKind kind, const BinaryWord& b) {
  std::vector<Rational> coords;
  coords.reserve(b.length());
  for (int i = 0; i < b.length(); ++i) {
    if (kind == RankKind::standard) {
      coords.push_back(Rational(b[i]));
    } else {
      coords.push_back(Rational(2 * static_cast<int>(b[i]) - 1));
    }
  }
  return RationalPoint(std::move(coords));
}

struct EmbedReport {
  bool pass = true;
  std::string reason;
  std::optional<std::pair<std::string, std::string>> witness;
};

//! Decides whether a finite acyclic graph embeds into the space: the
//! embedding must be injective, cover every extreme point (= box
//! corner), and carry reachability into the generated order.  Edges are
//! scanned first so an order failure reports a witness edge.
inline EmbedReport can_embed(
    const Graph& g, const RankedSpace& space,
    const std::function<RationalPoint(const std::string&)>& emb_map) {
  if (!is_acyclic(g)) throw CyclicInput("can_embed requires an acyclic graph");
  EmbedReport report;

  std::vector<RationalPoint> image(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) image[v] = emb_map(g.label(v));

  for (int a = 0; a < g.node_count(); ++a) {
    for (int b = a + 1; b < g.node_count(); ++b) {
      if (image[a] == image[b]) {
        return {false, "not injective", {{g.label(a), g.label(b)}}};
      }
    }
  }

  for (const auto& corner : space.corners()) {
    bool covered = false;
    for (const auto& p : image) {
      if (p == corner) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return {false, "extreme point not covered: " + corner.str(), {}};
    }
  }

  for (const auto& [s, t] : g.edges()) {
    if (!below(space, image[s], image[t])) {
      return {false, "edge not order-preserved", {{g.label(s), g.label(t)}}};
    }
  }
  for (int s = 0; s < g.node_count(); ++s) {
    for (int t = 0; t < g.node_count(); ++t) {
      if (reachable(g, g.label(s), g.label(t)) &&
          !below(space, image[s], image[t])) {
        return {false, "path not order-preserved", {{g.label(s), g.label(t)}}};
      }
    }
  }
  return report;
}

struct IdentityReport {
  bool pass = true;
  std::string witness;
};

//! The corner rank identity rank_tw(emb_tw(b)) = 2*sort_num(b) -
//! (2^n - 1), checked exactly at every corner.
inline IdentityReport rank_sort_identity(int n, const Budget& budget =
                                                    default_budget()) {
  if (n < 0 || n > budget.max_word_length) {
    throw BudgetExceeded("rank_sort_identity: dimension beyond budget");
  }
  for (const auto& b : BinaryWord::all(n, budget)) {
    const Rational lhs = rank_twisted(emb(RankKind::twisted, b));
    const Rational rhs =
        Rational(2) * Rational(static_cast<long>(sort_num(b))) -
        (pow2(n) - 1);
    if (lhs != rhs) {
      return {false, b.str() + ": " + rational_str(lhs) +
                         " != " + rational_str(rhs)};
    }
  }
  return {};
}

enum class SimplexCoordMap { phi, psi };

//! Mutually inverse simplex coordinate changes: phi takes running
//! prefix sums, psi takes consecutive differences.
inline RationalPoint simplex_coords(SimplexCoordMap direction,
                                    const RationalPoint& x) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  if (direction == SimplexCoordMap::phi) {
    Rational acc = 0;
    for (int i = 0; i < x.dim(); ++i) {
      acc += x[i];
      out.push_back(acc);
    }
  } else {
    for (int i = 0; i < x.dim(); ++i) {
      out.push_back(i == 0 ? x[0] : x[i] - x[i - 1]);
    }
  }
  return RationalPoint(std::move(out));
}

//! Membership in the ordered-coordinates simplex.
inline bool in_simplex(const RationalPoint& x) {
  Rational prev = 0;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] < prev) return false;
    prev = x[i];
  }
  return x.dim() == 0 || prev <= 1;
}

//! Membership in the textbook simplex (non-negative coordinates with
//! sum at most one).
inline bool in_simplex_alt(const RationalPoint& x) {
  Rational sum = 0;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] < 0) return false;
    sum += x[i];
  }
  return sum <= 1;
}

//! Extreme point of the n-simplex at index i: n-i zeros then i ones.
inline RationalPoint simplex_extreme_point(int n, int i) {
  if (i < 0 || i > n) throw IndexOutOfRange("extreme point index beyond n");
  std::vector<Rational> coords;
  coords.reserve(n);
  for (int j = 0; j < n; ++j) {
    coords.push_back(Rational(i + j < n ? 0 : 1));
  }
  return RationalPoint(std::move(coords));
}

//! Deterministic rational samples for the property suites: numerators
//! drawn mod (2*bound+1) shifted to [-bound, bound], denominators in
//! [1, max_den].  Uses raw mt19937_64 draws, so streams are platform
//! stable.
inline Rational sample_rational(std::mt19937_64& rng, long bound,
                                long max_den) {
  const long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  const long den = static_cast<long>(rng() % max_den) + 1;
  return make_rational(num, den);
}

inline RationalPoint sample_point(std::mt19937_64& rng, int dim, long bound,
                                  long max_den) {
  std::vector<Rational> coords;
  coords.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    coords.push_back(sample_rational(rng, bound, max_den));
  }
  return RationalPoint(std::move(coords));
}

//! A sample constrained to the [-1,1] box (num drawn after den).
inline RationalPoint sample_point_in_unit_box(std::mt19937_64& rng, int dim,
                                              long max_den) {
  std::vector<Rational> coords;
  coords.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    const long den = static_cast<long>(rng() % max_den) + 1;
    const long num = static_cast<long>(rng() % (2 * den + 1)) - den;
    coords.push_back(make_rational(num, den));
  }
  return RationalPoint(std::move(coords));
}

}  // namespace twistcube

#endif  // TWISTCUBE_POSPACE_HPP_

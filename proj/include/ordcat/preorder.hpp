#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcat/bool_mat.hpp"

namespace ordcat {

/// A finite preordered set: elements 0..size-1 with a reflexive-transitive
/// boolean order matrix. Antisymmetry is not required.
struct FinPreorder {
  int size = 0;
  BoolMat leq;  // leq.at(i, j) means i <= j

  FinPreorder() = default;
  FinPreorder(int n, BoolMat m) : size(n), leq(std::move(m)) {}

  bool operator==(const FinPreorder& o) const { return size == o.size && leq == o.leq; }
  bool operator!=(const FinPreorder& o) const { return !(*this == o); }
};

inline std::optional<std::string> preorder_violation(const FinPreorder& p) {
  if (p.leq.rows() != p.size || p.leq.cols() != p.size)
    return "leq matrix shape does not match size";
  for (int i = 0; i < p.size; ++i)
    if (!p.leq.at(i, i)) return "not reflexive at " + std::to_string(i);
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j)
      if (p.leq.at(i, j))
        for (int k = 0; k < p.size; ++k)
          if (p.leq.at(j, k) && !p.leq.at(i, k))
            return "not transitive at (" + std::to_string(i) + "," + std::to_string(j) +
                   "," + std::to_string(k) + ")";
  return std::nullopt;
}

inline bool is_preorder(const FinPreorder& p) { return !preorder_violation(p).has_value(); }

inline void require_preorder(const FinPreorder& p) {
  if (auto why = preorder_violation(p)) throw std::invalid_argument("FinPreorder: " + *why);
}

/// Smallest preorder on 0..size-1 containing the given pairs.
inline FinPreorder closure_preorder(int size, const std::vector<std::pair<int, int>>& pairs) {
  if (size < 0) throw std::invalid_argument("closure_preorder: negative size");
  BoolMat m(size, size);
  for (int i = 0; i < size; ++i) m.set(i, i, true);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw std::invalid_argument("closure_preorder: index out of range");
    m.set(a, b, true);
  }
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      if (m.at(i, k))
        for (int j = 0; j < size; ++j)
          if (m.at(k, j)) m.set(i, j, true);
  return FinPreorder(size, std::move(m));
}

inline FinPreorder discrete_preorder(int n) { return closure_preorder(n, {}); }

inline FinPreorder chain_preorder(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return closure_preorder(n, pairs);
}

inline FinPreorder indiscrete_preorder(int n) {
  return FinPreorder(n, BoolMat(n, n, true));
}

inline bool is_antisymmetric(const FinPreorder& p) {
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j)
      if (i != j && p.leq.at(i, j) && p.leq.at(j, i)) return false;
  return true;
}

/// A monotone map between finite preorders, stored as a value table.
struct MonotoneMap {
  FinPreorder dom;
  FinPreorder cod;
  std::vector<int> table;

  int operator()(int a) const { return table[static_cast<std::size_t>(a)]; }

  bool operator==(const MonotoneMap& o) const {
    return dom == o.dom && cod == o.cod && table == o.table;
  }
  bool operator!=(const MonotoneMap& o) const { return !(*this == o); }
};

inline std::optional<std::string> map_violation(const MonotoneMap& f) {
  if (static_cast<int>(f.table.size()) != f.dom.size) return "table length != dom size";
  for (int a = 0; a < f.dom.size; ++a)
    if (f.table[a] < 0 || f.table[a] >= f.cod.size)
      return "value out of codomain at " + std::to_string(a);
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < f.dom.size; ++b)
      if (f.dom.leq.at(a, b) && !f.cod.leq.at(f(a), f(b)))
        return "not monotone on (" + std::to_string(a) + "," + std::to_string(b) + ")";
  return std::nullopt;
}

inline bool is_monotone(const MonotoneMap& f) { return !map_violation(f).has_value(); }

inline void require_map(const MonotoneMap& f) {
  if (auto why = map_violation(f)) throw std::invalid_argument("MonotoneMap: " + *why);
}

inline MonotoneMap identity_map(const FinPreorder& x) {
  std::vector<int> t(static_cast<std::size_t>(x.size));
  std::iota(t.begin(), t.end(), 0);
  return MonotoneMap{x, x, std::move(t)};
}

inline MonotoneMap constant_map(const FinPreorder& dom, const FinPreorder& cod, int value) {
  if (value < 0 || value >= cod.size)
    throw std::invalid_argument("constant_map: value out of codomain");
  return MonotoneMap{dom, cod, std::vector<int>(static_cast<std::size_t>(dom.size), value)};
}

/// g after f.
inline MonotoneMap compose_map(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose_map: boundary mismatch");
  std::vector<int> t(f.table.size());
  for (std::size_t a = 0; a < f.table.size(); ++a) t[a] = g.table[static_cast<std::size_t>(f.table[a])];
  return MonotoneMap{f.dom, g.cod, std::move(t)};
}

/// The pointwise hom-preorder on parallel monotone maps.
inline bool hom_leq(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw std::invalid_argument("hom_leq: maps are not parallel");
  for (int a = 0; a < f.dom.size; ++a)
    if (!f.cod.leq.at(f(a), g(a))) return false;
  return true;
}

/// Fully faithful: f a <= f a' downstairs forces a <= a' upstairs.
inline bool is_ff(const MonotoneMap& f) {
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < f.dom.size; ++b)
      if (f.cod.leq.at(f(a), f(b)) && !f.dom.leq.at(a, b)) return false;
  return true;
}

inline bool is_injective(const MonotoneMap& f) {
  std::vector<char> seen(static_cast<std::size_t>(f.cod.size), 0);
  for (int a = 0; a < f.dom.size; ++a) {
    if (seen[static_cast<std::size_t>(f(a))]) return false;
    seen[static_cast<std::size_t>(f(a))] = 1;
  }
  return true;
}

inline bool is_ff_mono(const MonotoneMap& f) { return is_ff(f) && is_injective(f); }

/// so-morphisms of the Ord backend are the surjective monotone maps; the
/// test suite checks this characterisation against orthogonality.
inline bool is_so(const MonotoneMap& f) {
  std::vector<char> hit(static_cast<std::size_t>(f.cod.size), 0);
  for (int a = 0; a < f.dom.size; ++a) hit[static_cast<std::size_t>(f(a))] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

struct Factorization {
  MonotoneMap e;  // so part, onto the image
  MonotoneMap m;  // ff-mono part, into the codomain
};

/// (so-morphism, ff-monomorphism) factorisation: the image carries the
/// order restricted from the codomain; image points keep codomain index
/// order (smallest representative first).
inline Factorization so_ff_factorize(const MonotoneMap& f) {
  std::vector<int> image;  // codomain indices, ascending
  std::vector<int> pos(static_cast<std::size_t>(f.cod.size), -1);
  for (int y = 0; y < f.cod.size; ++y) {
    bool hit = false;
    for (int a = 0; a < f.dom.size && !hit; ++a) hit = (f(a) == y);
    if (hit) {
      pos[static_cast<std::size_t>(y)] = static_cast<int>(image.size());
      image.push_back(y);
    }
  }
  int k = static_cast<int>(image.size());
  BoolMat order(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) order.set(i, j, f.cod.leq.at(image[i], image[j]));
  FinPreorder img(k, std::move(order));
  std::vector<int> etab(static_cast<std::size_t>(f.dom.size));
  for (int a = 0; a < f.dom.size; ++a) etab[static_cast<std::size_t>(a)] = pos[static_cast<std::size_t>(f(a))];
  MonotoneMap e{f.dom, img, std::move(etab)};
  MonotoneMap m{img, f.cod, image};
  return Factorization{std::move(e), std::move(m)};
}

struct CommaObject {
  FinPreorder obj;
  MonotoneMap pi1;
  MonotoneMap pi2;
  std::vector<std::pair<int, int>> points;  // (x, z) carrier, lexicographic
};

/// Strict comma object f/g: pairs (x, z) with f x <= g z, ordered
/// componentwise.
inline CommaObject comma(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.cod != g.cod) throw std::invalid_argument("comma: codomain mismatch");
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < f.dom.size; ++x)
    for (int z = 0; z < g.dom.size; ++z)
      if (f.cod.leq.at(f(x), g(z))) pts.emplace_back(x, z);
  int k = static_cast<int>(pts.size());
  BoolMat order(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      order.set(i, j, f.dom.leq.at(pts[i].first, pts[j].first) &&
                          g.dom.leq.at(pts[i].second, pts[j].second));
  FinPreorder obj(k, std::move(order));
  std::vector<int> t1(static_cast<std::size_t>(k)), t2(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    t1[static_cast<std::size_t>(i)] = pts[i].first;
    t2[static_cast<std::size_t>(i)] = pts[i].second;
  }
  MonotoneMap pi1{obj, f.dom, std::move(t1)};
  MonotoneMap pi2{obj, g.dom, std::move(t2)};
  return CommaObject{std::move(obj), std::move(pi1), std::move(pi2), std::move(pts)};
}

struct ProductObject {
  FinPreorder obj;
  MonotoneMap pi1;
  MonotoneMap pi2;
  int cols = 0;  // pair (i, j) sits at index i*cols + j

  int pair_index(int i, int j) const { return i * cols + j; }
};

/// Binary product: carrier X x Y with the componentwise order.
inline ProductObject product(const FinPreorder& x, const FinPreorder& y) {
  int n = x.size * y.size;
  BoolMat order(n, n);
  for (int i = 0; i < x.size; ++i)
    for (int j = 0; j < y.size; ++j)
      for (int i2 = 0; i2 < x.size; ++i2)
        for (int j2 = 0; j2 < y.size; ++j2)
          order.set(i * y.size + j, i2 * y.size + j2,
                    x.leq.at(i, i2) && y.leq.at(j, j2));
  FinPreorder obj(n, std::move(order));
  std::vector<int> t1(static_cast<std::size_t>(n)), t2(static_cast<std::size_t>(n));
  for (int i = 0; i < x.size; ++i)
    for (int j = 0; j < y.size; ++j) {
      t1[static_cast<std::size_t>(i * y.size + j)] = i;
      t2[static_cast<std::size_t>(i * y.size + j)] = j;
    }
  MonotoneMap pi1{obj, x, std::move(t1)};
  MonotoneMap pi2{obj, y, std::move(t2)};
  return ProductObject{std::move(obj), std::move(pi1), std::move(pi2), y.size};
}

inline MonotoneMap pairing(const ProductObject& p, const MonotoneMap& f, const MonotoneMap& g) {
  if (f.dom != g.dom) throw std::invalid_argument("pairing: domain mismatch");
  std::vector<int> t(static_cast<std::size_t>(f.dom.size));
  for (int a = 0; a < f.dom.size; ++a) t[static_cast<std::size_t>(a)] = p.pair_index(f(a), g(a));
  return MonotoneMap{f.dom, p.obj, std::move(t)};
}

struct CoproductObject {
  FinPreorder obj;
  MonotoneMap in1;
  MonotoneMap in2;
};

/// Binary coproduct: disjoint union, no order across summands.
inline CoproductObject coproduct(const FinPreorder& x, const FinPreorder& y) {
  int n = x.size + y.size;
  BoolMat order(n, n);
  for (int i = 0; i < x.size; ++i)
    for (int j = 0; j < x.size; ++j) order.set(i, j, x.leq.at(i, j));
  for (int i = 0; i < y.size; ++i)
    for (int j = 0; j < y.size; ++j) order.set(x.size + i, x.size + j, y.leq.at(i, j));
  FinPreorder obj(n, std::move(order));
  std::vector<int> t1(static_cast<std::size_t>(x.size)), t2(static_cast<std::size_t>(y.size));
  std::iota(t1.begin(), t1.end(), 0);
  std::iota(t2.begin(), t2.end(), x.size);
  MonotoneMap in1{x, obj, std::move(t1)};
  MonotoneMap in2{y, obj, std::move(t2)};
  return CoproductObject{std::move(obj), std::move(in1), std::move(in2)};
}

struct PullbackObject {
  FinPreorder obj;
  MonotoneMap p1;
  MonotoneMap p2;
  std::vector<std::pair<int, int>> points;
};

/// 2-pullback: pairs (x, y) with f x = g y, componentwise order.
inline PullbackObject pullback(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.cod != g.cod) throw std::invalid_argument("pullback: codomain mismatch");
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < f.dom.size; ++x)
    for (int y = 0; y < g.dom.size; ++y)
      if (f(x) == g(y)) pts.emplace_back(x, y);
  int k = static_cast<int>(pts.size());
  BoolMat order(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      order.set(i, j, f.dom.leq.at(pts[i].first, pts[j].first) &&
                          g.dom.leq.at(pts[i].second, pts[j].second));
  FinPreorder obj(k, std::move(order));
  std::vector<int> t1(static_cast<std::size_t>(k)), t2(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    t1[static_cast<std::size_t>(i)] = pts[i].first;
    t2[static_cast<std::size_t>(i)] = pts[i].second;
  }
  MonotoneMap p1{obj, f.dom, std::move(t1)};
  MonotoneMap p2{obj, g.dom, std::move(t2)};
  return PullbackObject{std::move(obj), std::move(p1), std::move(p2), std::move(pts)};
}

/// Coinserter of a parallel pair a, b: X -> A. The result keeps A's carrier
/// and closes A's order under the pairs (a x, b x); the returned map is the
/// identity on points.
inline MonotoneMap coinserter(const MonotoneMap& a, const MonotoneMap& b) {
  if (a.dom != b.dom || a.cod != b.cod)
    throw std::invalid_argument("coinserter: maps are not parallel");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a.cod.size; ++i)
    for (int j = 0; j < a.cod.size; ++j)
      if (a.cod.leq.at(i, j)) pairs.emplace_back(i, j);
  for (int x = 0; x < a.dom.size; ++x) pairs.emplace_back(a(x), b(x));
  FinPreorder quotient = closure_preorder(a.cod.size, pairs);
  std::vector<int> t(static_cast<std::size_t>(a.cod.size));
  std::iota(t.begin(), t.end(), 0);
  return MonotoneMap{a.cod, std::move(quotient), std::move(t)};
}

/// Whether the so-morphism e is a bicoinserter of its comma-object
/// projections: the freely generated coinserter must be equivalent to
/// cod(e) over e, which at this scale amounts to e reflecting the
/// generated order.
inline bool bicoinserter_check(const MonotoneMap& e) {
  if (!is_so(e)) throw std::invalid_argument("bicoinserter_check: e is not an so-morphism");
  CommaObject c = comma(e, e);
  MonotoneMap ci = coinserter(c.pi1, c.pi2);
  const FinPreorder& generated = ci.cod;  // carrier = dom(e)
  for (int a = 0; a < e.dom.size; ++a)
    for (int b = 0; b < e.dom.size; ++b)
      if (generated.leq.at(a, b) != e.cod.leq.at(e(a), e(b))) return false;
  return true;
}

/// Exhaustive isomorphism search; intended for the small sizes (<= 8) the
/// suite uses.
inline bool preorder_isomorphic(const FinPreorder& p, const FinPreorder& q) {
  if (p.size != q.size) return false;
  std::vector<int> perm(static_cast<std::size_t>(p.size));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < p.size && ok; ++i)
      for (int j = 0; j < p.size && ok; ++j)
        ok = (p.leq.at(i, j) == q.leq.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p.size == 0;
}

/// All labeled preorders on n elements, in a fixed enumeration order.
inline std::vector<FinPreorder> enumerate_preorders(int n) {
  std::vector<FinPreorder> out;
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::uint64_t total = 1ull << offdiag.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BoolMat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    for (std::size_t b = 0; b < offdiag.size(); ++b)
      if (mask & (1ull << b)) m.set(offdiag[b].first, offdiag[b].second, true);
    FinPreorder p(n, std::move(m));
    if (is_preorder(p)) out.push_back(std::move(p));
  }
  return out;
}

/// All monotone maps X -> Y, ordered lexicographically by table.
inline std::vector<MonotoneMap> all_monotone_maps(const FinPreorder& x, const FinPreorder& y) {
  std::vector<MonotoneMap> out;
  if (x.size == 0) {
    out.push_back(MonotoneMap{x, y, {}});
    return out;
  }
  if (y.size == 0) return out;
  std::vector<int> t(static_cast<std::size_t>(x.size), 0);
  while (true) {
    MonotoneMap f{x, y, t};
    if (is_monotone(f)) out.push_back(std::move(f));
    int i = x.size - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == y.size - 1) {
      t[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

/// The hom-set Ord(Y, X) as a finite preorder under the pointwise order;
/// maps are listed in all_monotone_maps order.
inline FinPreorder hom_preorder(const std::vector<MonotoneMap>& maps) {
  int n = static_cast<int>(maps.size());
  BoolMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, hom_leq(maps[static_cast<std::size_t>(i)], maps[static_cast<std::size_t>(j)]));
  return FinPreorder(n, std::move(m));
}

}  // namespace ordcat

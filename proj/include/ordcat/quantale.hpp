#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordcat/gen.hpp"
#include "ordcat/preorder.hpp"

namespace ordcat {

/// A finite unital integral quantale: a lattice-ordered carrier with an
/// associative, join-preserving tensor whose unit is the top element.
struct FinQuantale {
  std::string name;  // fixture tag, carried through reports
  int size = 0;
  BoolMat leq;
  std::vector<std::vector<int>> tensor;
  int unit = 0;

  bool less(int a, int b) const { return leq.at(a, b); }
  int times(int a, int b) const { return tensor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  /// Least upper bound by scan; -1 when none exists (flagged by the checker).
  int join(int a, int b) const {
    int best = -1;
    for (int c = 0; c < size; ++c)
      if (less(a, c) && less(b, c) && (best < 0 || less(c, best))) best = c;
    if (best >= 0 && (!less(a, best) || !less(b, best))) return -1;
    for (int c = 0; c < size; ++c)
      if (less(a, c) && less(b, c) && !less(best, c)) return -1;
    return best;
  }

  int meet(int a, int b) const {
    int best = -1;
    for (int c = 0; c < size; ++c)
      if (less(c, a) && less(c, b) && (best < 0 || less(best, c))) best = c;
    if (best >= 0 && (!less(best, a) || !less(best, b))) return -1;
    for (int c = 0; c < size; ++c)
      if (less(c, a) && less(c, b) && !less(c, best)) return -1;
    return best;
  }

  int bot() const {
    for (int c = 0; c < size; ++c) {
      bool below_all = true;
      for (int d = 0; d < size && below_all; ++d) below_all = less(c, d);
      if (below_all) return c;
    }
    return -1;
  }

  int top() const {
    for (int c = 0; c < size; ++c) {
      bool above_all = true;
      for (int d = 0; d < size && above_all; ++d) above_all = less(d, c);
      if (above_all) return c;
    }
    return -1;
  }

  bool operator==(const FinQuantale& o) const {
    return size == o.size && leq == o.leq && tensor == o.tensor && unit == o.unit;
  }
  bool operator!=(const FinQuantale& o) const { return !(*this == o); }
};

/// Validates every axiom; on failure reports the first violated one with
/// the offending indices.
inline bool quantale_check(const FinQuantale& v, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (v.size <= 0) return fail("carrier must be nonempty");
  if (v.leq.rows() != v.size || v.leq.cols() != v.size) return fail("leq shape mismatch");
  if (static_cast<int>(v.tensor.size()) != v.size) return fail("tensor shape mismatch");
  for (const auto& row : v.tensor) {
    if (static_cast<int>(row.size()) != v.size) return fail("tensor shape mismatch");
    for (int x : row)
      if (x < 0 || x >= v.size) return fail("tensor value out of range");
  }
  for (int a = 0; a < v.size; ++a)
    if (!v.less(a, a)) return fail("order not reflexive at " + std::to_string(a));
  for (int a = 0; a < v.size; ++a)
    for (int b = 0; b < v.size; ++b) {
      if (a != b && v.less(a, b) && v.less(b, a))
        return fail("order not antisymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (v.less(a, b))
        for (int c = 0; c < v.size; ++c)
          if (v.less(b, c) && !v.less(a, c))
            return fail("order not transitive at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    }
  if (v.bot() < 0) return fail("no bottom element");
  if (v.top() < 0) return fail("no top element");
  for (int a = 0; a < v.size; ++a)
    for (int b = 0; b < v.size; ++b) {
      if (v.join(a, b) < 0)
        return fail("missing join of (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (v.meet(a, b) < 0)
        return fail("missing meet of (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  for (int a = 0; a < v.size; ++a)
    for (int b = 0; b < v.size; ++b)
      for (int c = 0; c < v.size; ++c)
        if (v.times(v.times(a, b), c) != v.times(a, v.times(b, c)))
          return fail("tensor not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  if (v.unit < 0 || v.unit >= v.size) return fail("unit out of range");
  for (int a = 0; a < v.size; ++a)
    if (v.times(v.unit, a) != a || v.times(a, v.unit) != a)
      return fail("unit fails at " + std::to_string(a));
  if (v.unit != v.top()) return fail("unit not top (quantale must be integral)");
  int bottom = v.bot();
  for (int a = 0; a < v.size; ++a)
    if (v.times(a, bottom) != bottom || v.times(bottom, a) != bottom)
      return fail("tensor does not absorb bottom at " + std::to_string(a));
  // binary joins distribute on each side; with bottom absorption this
  // covers all finite joins
  for (int a = 0; a < v.size; ++a)
    for (int b = 0; b < v.size; ++b)
      for (int c = 0; c < v.size; ++c) {
        if (v.times(a, v.join(b, c)) != v.join(v.times(a, b), v.times(a, c)))
          return fail("tensor fails join preservation on the right at (" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
        if (v.times(v.join(b, c), a) != v.join(v.times(b, a), v.times(c, a)))
          return fail("tensor fails join preservation on the left at (" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
  return true;
}

inline void require_quantale(const FinQuantale& v) {
  std::string why;
  if (!quantale_check(v, &why)) throw std::invalid_argument("FinQuantale: " + why);
}

// ---- fixtures -------------------------------------------------------------

/// The Boolean quantale: {bot, top} with tensor = meet.
inline FinQuantale quantale_bool2() {
  FinQuantale v;
  v.name = "bool2";
  v.size = 2;
  v.leq = chain_preorder(2).leq;
  v.tensor = {{0, 0}, {0, 1}};
  v.unit = 1;
  return v;
}

/// Three-element chain with tensor = meet.
inline FinQuantale quantale_chain3_meet() {
  FinQuantale v;
  v.name = "chain3-meet";
  v.size = 3;
  v.leq = chain_preorder(3).leq;
  v.tensor = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  v.unit = 2;
  return v;
}

/// Three-element chain {0, 1/2, 1} with the Lukasiewicz tensor
/// max(0, a + b - 1), encoded on indices as max(0, i + j - 2).
inline FinQuantale quantale_chain3_lukasiewicz() {
  FinQuantale v;
  v.name = "chain3-lukasiewicz";
  v.size = 3;
  v.leq = chain_preorder(3).leq;
  v.tensor.assign(3, std::vector<int>(3, 0));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) v.tensor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::max(0, a + b - 2);
  v.unit = 2;
  return v;
}

/// The diamond lattice bot < a, b < top (a, b incomparable), tensor = meet.
inline FinQuantale quantale_diamond_meet() {
  FinQuantale v;
  v.name = "diamond-meet";
  v.size = 4;
  v.leq = closure_preorder(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).leq;
  v.tensor.assign(4, std::vector<int>(4, 0));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) v.tensor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v.meet(a, b);
  v.unit = 3;
  return v;
}

inline FinQuantale quantale_fixture(const std::string& name) {
  if (name == "bool2" || name == "v2") return quantale_bool2();
  if (name == "chain3-meet") return quantale_chain3_meet();
  if (name == "chain3-lukasiewicz") return quantale_chain3_lukasiewicz();
  if (name == "diamond-meet") return quantale_diamond_meet();
  throw std::invalid_argument("unknown quantale fixture: " + name);
}

inline std::vector<FinQuantale> all_quantale_fixtures() {
  return {quantale_fixture("bool2"), quantale_fixture("chain3-meet"),
          quantale_fixture("chain3-lukasiewicz"), quantale_fixture("diamond-meet")};
}

// ---- V-categories ----------------------------------------------------------

/// A finite category enriched in a quantale: hom values are indices into V.
struct FinVCat {
  FinQuantale v;
  int size = 0;
  std::vector<std::vector<int>> hom;

  int at(int x, int y) const { return hom[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

  bool operator==(const FinVCat& o) const { return v == o.v && size == o.size && hom == o.hom; }
  bool operator!=(const FinVCat& o) const { return !(*this == o); }
};

inline bool vcat_check(const FinVCat& x, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(x.hom.size()) != x.size) return fail("hom shape mismatch");
  for (const auto& row : x.hom) {
    if (static_cast<int>(row.size()) != x.size) return fail("hom shape mismatch");
    for (int h : row)
      if (h < 0 || h >= x.v.size) return fail("hom value out of range");
  }
  for (int a = 0; a < x.size; ++a)
    if (!x.v.less(x.v.unit, x.at(a, a)))
      return fail("identity fails at " + std::to_string(a));
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b)
      for (int c = 0; c < x.size; ++c)
        if (!x.v.less(x.v.times(x.at(b, c), x.at(a, b)), x.at(a, c)))
          return fail("composition fails at (" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(c) + ")");
  return true;
}

inline void require_vcat(const FinVCat& x) {
  std::string why;
  if (!vcat_check(x, &why)) throw std::invalid_argument("FinVCat: " + why);
}

struct VFunctor {
  FinVCat dom;
  FinVCat cod;
  std::vector<int> table;

  int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }
};

inline bool vfunctor_check(const VFunctor& f, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.dom.v != f.cod.v) return fail("dom and cod enriched in different quantales");
  if (static_cast<int>(f.table.size()) != f.dom.size) return fail("table length mismatch");
  for (int x : f.table)
    if (x < 0 || x >= f.cod.size) return fail("value out of codomain");
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < f.dom.size; ++b)
      if (!f.dom.v.less(f.dom.at(a, b), f.cod.at(f(a), f(b))))
        return fail("hom inequality fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return true;
}

inline void require_vfunctor(const VFunctor& f) {
  std::string why;
  if (!vfunctor_check(f, &why)) throw std::invalid_argument("VFunctor: " + why);
}

inline VFunctor identity_vfunctor(const FinVCat& x) {
  std::vector<int> t(static_cast<std::size_t>(x.size));
  std::iota(t.begin(), t.end(), 0);
  return VFunctor{x, x, std::move(t)};
}

/// g after f.
inline VFunctor compose_vfunctor(const VFunctor& g, const VFunctor& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose_vfunctor: boundary mismatch");
  std::vector<int> t(f.table.size());
  for (std::size_t a = 0; a < f.table.size(); ++a) t[a] = g.table[static_cast<std::size_t>(f.table[a])];
  return VFunctor{f.dom, g.cod, std::move(t)};
}

/// The hom-preorder of the opposite enrichment: f below g when every
/// Y(f x, g x) is the unit.
inline bool vhom_leq(const VFunctor& f, const VFunctor& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw std::invalid_argument("vhom_leq: functors are not parallel");
  for (int x = 0; x < f.dom.size; ++x)
    if (f.cod.at(f(x), g(x)) != f.cod.v.unit) return false;
  return true;
}

/// Product V-category: hom is the meet of the component homs.
inline FinVCat product_vcat(const FinVCat& x, const FinVCat& y) {
  if (x.v != y.v) throw std::invalid_argument("product_vcat: quantale mismatch");
  FinVCat p;
  p.v = x.v;
  p.size = x.size * y.size;
  p.hom.assign(static_cast<std::size_t>(p.size), std::vector<int>(static_cast<std::size_t>(p.size), 0));
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < y.size; ++b)
      for (int a2 = 0; a2 < x.size; ++a2)
        for (int b2 = 0; b2 < y.size; ++b2)
          p.hom[static_cast<std::size_t>(a * y.size + b)][static_cast<std::size_t>(a2 * y.size + b2)] =
              x.v.meet(x.at(a, a2), y.at(b, b2));
  return p;
}

/// Over the Boolean quantale a V-category is exactly a preorder.
inline FinVCat vcat_from_preorder(const FinPreorder& p) {
  FinVCat x;
  x.v = quantale_bool2();
  x.size = p.size;
  x.hom.assign(static_cast<std::size_t>(p.size), std::vector<int>(static_cast<std::size_t>(p.size), 0));
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b) x.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = p.leq.at(a, b) ? 1 : 0;
  return x;
}

inline FinPreorder preorder_from_vcat(const FinVCat& x) {
  if (x.v != quantale_bool2())
    throw std::invalid_argument("preorder_from_vcat: not enriched in bool2");
  BoolMat m(x.size, x.size);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b) m.set(a, b, x.at(a, b) == 1);
  return FinPreorder(x.size, std::move(m));
}

/// All V-categories on n objects over a fixed quantale, hom tables in
/// lexicographic order. Exhaustive: |V|^(n^2) candidates get filtered.
inline std::vector<FinVCat> enumerate_vcats(const FinQuantale& v, int n) {
  std::vector<FinVCat> out;
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  while (true) {
    FinVCat x;
    x.v = v;
    x.size = n;
    x.hom.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) x.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = cells[static_cast<std::size_t>(a * n + b)];
    if (vcat_check(x)) out.push_back(std::move(x));
    std::size_t i = cells.size();
    while (i > 0 && cells[i - 1] == v.size - 1) cells[--i] = 0;
    if (i == 0) break;
    cells[i - 1] += 1;
  }
  return out;
}

/// Random V-functor into a fixed codomain along a given object table: the
/// domain gets random homs below the pulled-back ones, then a transitive
/// closure (which stays below them, so the table remains a V-functor).
inline VFunctor random_vfunctor_onto(Gen& gen, const FinVCat& cod, std::vector<int> table) {
  int n = static_cast<int>(table.size());
  FinVCat dom;
  dom.v = cod.v;
  dom.size = n;
  dom.hom.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int cap = cod.at(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)]);
      dom.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          (a == b) ? cod.v.unit : cod.v.meet(cap, gen.below(cod.v.size));
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int need = cod.v.join(dom.at(a, c), cod.v.times(dom.at(b, c), dom.at(a, b)));
          if (need != dom.at(a, c)) {
            dom.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = need;
            changed = true;
          }
        }
  }
  return VFunctor{std::move(dom), cod, std::move(table)};
}

/// Random V-category: random hom values pushed to a transitive closure,
/// diagonal pinned at the unit.
inline FinVCat random_vcat(Gen& gen, const FinQuantale& v, int n) {
  FinVCat x;
  x.v = v;
  x.size = n;
  x.hom.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      x.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a == b) ? v.unit : gen.below(v.size);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int need = v.join(x.at(a, c), v.times(x.at(b, c), x.at(a, b)));
          if (need != x.at(a, c)) {
            x.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = need;
            changed = true;
          }
        }
  }
  return x;
}

}  // namespace ordcat

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcat/preorder.hpp"

namespace ordcat {

/// A relation between finite preorders, stored tabulated: the boolean
/// matrix is the subset of dom x cod, carrying the componentwise order.
///
/// Composition is written diagrammatically throughout: compose(r, s)
/// relates x to z when some y has r(x, y) and s(y, z).
struct Rel {
  FinPreorder dom;
  FinPreorder cod;
  BoolMat mat;  // mat.at(x, y): x related to y

  bool operator==(const Rel& o) const { return dom == o.dom && cod == o.cod && mat == o.mat; }
  bool operator!=(const Rel& o) const { return !(*this == o); }
};

inline void require_shape(const Rel& r) {
  if (r.mat.rows() != r.dom.size || r.mat.cols() != r.cod.size)
    throw std::invalid_argument("Rel: matrix shape does not match boundaries");
}

inline Rel empty_rel(const FinPreorder& x, const FinPreorder& y) {
  return Rel{x, y, BoolMat(x.size, y.size)};
}

inline Rel total_rel(const FinPreorder& x, const FinPreorder& y) {
  return Rel{x, y, BoolMat(x.size, y.size, true)};
}

inline Rel diagonal_rel(const FinPreorder& x) {
  BoolMat m(x.size, x.size);
  for (int i = 0; i < x.size; ++i) m.set(i, i, true);
  return Rel{x, x, std::move(m)};
}

/// Witness for a failed weakening-closure check:
/// leq(x_low, x) and mat(x, y) and leq(y, y_high) but not mat(x_low, y_high).
struct IdealViolation {
  int x_low = 0;
  int x = 0;
  int y = 0;
  int y_high = 0;
};

inline std::optional<IdealViolation> ideal_violation(const Rel& r) {
  for (int x = 0; x < r.dom.size; ++x)
    for (int y = 0; y < r.cod.size; ++y)
      if (r.mat.at(x, y))
        for (int xl = 0; xl < r.dom.size; ++xl)
          if (r.dom.leq.at(xl, x))
            for (int yh = 0; yh < r.cod.size; ++yh)
              if (r.cod.leq.at(y, yh) && !r.mat.at(xl, yh))
                return IdealViolation{xl, x, y, yh};
  return std::nullopt;
}

inline bool is_ideal(const Rel& r) { return !ideal_violation(r).has_value(); }

inline void require_ideal(const Rel& r, const char* who) {
  if (auto v = ideal_violation(r))
    throw std::invalid_argument(std::string(who) + ": relation is not an ideal (witness " +
                                std::to_string(v->x_low) + "<=" + std::to_string(v->x) + ", (" +
                                std::to_string(v->x) + "," + std::to_string(v->y) + ") in R, " +
                                std::to_string(v->y) + "<=" + std::to_string(v->y_high) + ")");
}

/// The identity ideal I_X: the order relation of X itself.
inline Rel id_ideal(const FinPreorder& x) {
  return Rel{x, x, x.leq};
}

/// Smallest weakening-closed relation containing r.
inline Rel ideal_close(const Rel& r) {
  require_shape(r);
  BoolMat out(r.dom.size, r.cod.size);
  for (int x = 0; x < r.dom.size; ++x)
    for (int y = 0; y < r.cod.size; ++y)
      if (r.mat.at(x, y))
        for (int xl = 0; xl < r.dom.size; ++xl)
          if (r.dom.leq.at(xl, x))
            for (int yh = 0; yh < r.cod.size; ++yh)
              if (r.cod.leq.at(y, yh)) out.set(xl, yh, true);
  return Rel{r.dom, r.cod, std::move(out)};
}

/// Diagrammatic composite: first r, then s.
inline Rel compose(const Rel& r, const Rel& s) {
  if (r.cod != s.dom) throw std::invalid_argument("compose: boundary mismatch");
  return Rel{r.dom, s.cod, r.mat.multiply(s.mat)};
}

inline Rel meet(const Rel& r, const Rel& s) {
  if (r.dom != s.dom || r.cod != s.cod) throw std::invalid_argument("meet: boundary mismatch");
  return Rel{r.dom, r.cod, r.mat.meet(s.mat)};
}

inline Rel join(const Rel& r, const Rel& s) {
  if (r.dom != s.dom || r.cod != s.cod) throw std::invalid_argument("join: boundary mismatch");
  return Rel{r.dom, r.cod, r.mat.join(s.mat)};
}

inline Rel opp(const Rel& r) {
  return Rel{r.cod, r.dom, r.mat.transpose()};
}

inline bool rel_leq(const Rel& r, const Rel& s) {
  if (r.dom != s.dom || r.cod != s.cod) throw std::invalid_argument("rel_leq: boundary mismatch");
  return r.mat.subset_of(s.mat);
}

/// The span (1, f) of a map, as a tabulated relation (its graph).
inline Rel graph_rel(const MonotoneMap& f) {
  BoolMat m(f.dom.size, f.cod.size);
  for (int a = 0; a < f.dom.size; ++a) m.set(a, f(a), true);
  return Rel{f.dom, f.cod, std::move(m)};
}

/// f_* = f/1: x related to y when f x <= y.
inline Rel lower_star(const MonotoneMap& f) {
  BoolMat m(f.dom.size, f.cod.size);
  for (int a = 0; a < f.dom.size; ++a)
    for (int y = 0; y < f.cod.size; ++y) m.set(a, y, f.cod.leq.at(f(a), y));
  return Rel{f.dom, f.cod, std::move(m)};
}

/// f^* = 1/f: y related to x when y <= f x.
inline Rel upper_star(const MonotoneMap& f) {
  BoolMat m(f.cod.size, f.dom.size);
  for (int y = 0; y < f.cod.size; ++y)
    for (int a = 0; a < f.dom.size; ++a) m.set(y, a, f.cod.leq.at(y, f(a)));
  return Rel{f.cod, f.dom, std::move(m)};
}

/// The comma object f/g as a relation dom(f) -> dom(g): x ~ z iff f x <= g z.
inline Rel comma_rel(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.cod != g.cod) throw std::invalid_argument("comma_rel: codomain mismatch");
  BoolMat m(f.dom.size, g.dom.size);
  for (int x = 0; x < f.dom.size; ++x)
    for (int z = 0; z < g.dom.size; ++z) m.set(x, z, f.cod.leq.at(f(x), g(z)));
  return Rel{f.dom, g.dom, std::move(m)};
}

/// A span tabulating a relation: apex carries the componentwise order on
/// the related pairs.
struct Span {
  FinPreorder apex;
  MonotoneMap r1;
  MonotoneMap r2;
};

inline Span tabulate(const Rel& r) {
  require_shape(r);
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < r.dom.size; ++x)
    for (int y = 0; y < r.cod.size; ++y)
      if (r.mat.at(x, y)) pts.emplace_back(x, y);
  int k = static_cast<int>(pts.size());
  BoolMat order(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      order.set(i, j, r.dom.leq.at(pts[i].first, pts[j].first) &&
                          r.cod.leq.at(pts[i].second, pts[j].second));
  FinPreorder apex(k, std::move(order));
  std::vector<int> t1(static_cast<std::size_t>(k)), t2(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    t1[static_cast<std::size_t>(i)] = pts[i].first;
    t2[static_cast<std::size_t>(i)] = pts[i].second;
  }
  MonotoneMap r1{apex, r.dom, std::move(t1)};
  MonotoneMap r2{apex, r.cod, std::move(t2)};
  return Span{std::move(apex), std::move(r1), std::move(r2)};
}

/// R_* of a span: the ideal generated by the relation it tabulates;
/// x ~ y iff some apex point p has x <= r1 p and r2 p <= y.
inline Rel r_star(const MonotoneMap& r1, const MonotoneMap& r2) {
  if (r1.dom != r2.dom) throw std::invalid_argument("r_star: span legs must share a domain");
  return compose(upper_star(r1), lower_star(r2));
}

/// R^* of a span: the smallest ideal containing the opposite relation;
/// y ~ x iff some apex point p has y <= r2 p and r1 p <= x.
inline Rel r_upper(const MonotoneMap& r1, const MonotoneMap& r2) {
  if (r1.dom != r2.dom) throw std::invalid_argument("r_upper: span legs must share a domain");
  return compose(upper_star(r2), lower_star(r1));
}

inline Rel r_star_of(const Rel& r) {
  Span s = tabulate(r);
  return r_star(s.r1, s.r2);
}

inline Rel r_upper_of(const Rel& r) {
  Span s = tabulate(r);
  return r_upper(s.r1, s.r2);
}

/// Generalized-element membership (x, y) in R, pointwise over the shared
/// domain of x and y.
inline bool membership(const Rel& r, const MonotoneMap& x, const MonotoneMap& y) {
  if (x.dom != y.dom) throw std::invalid_argument("membership: elements must share a domain");
  if (x.cod != r.dom || y.cod != r.cod)
    throw std::invalid_argument("membership: codomain mismatch with relation boundaries");
  for (int a = 0; a < x.dom.size; ++a)
    if (!r.mat.at(x(a), y(a))) return false;
  return true;
}

inline void require_endo(const Rel& r, const char* who) {
  if (r.dom != r.cod) throw std::invalid_argument(std::string(who) + ": endo-relation required");
}

/// For ideals the diagonal test and the I_X test agree; both are computed
/// and compared, so a mismatch on a non-ideal input surfaces loudly.
inline bool is_reflexive(const Rel& r) {
  require_endo(r, "is_reflexive");
  bool via_identity = rel_leq(id_ideal(r.dom), r);
  bool via_diagonal = rel_leq(diagonal_rel(r.dom), r);
  if (is_ideal(r) && via_identity != via_diagonal)
    throw std::logic_error("is_reflexive: reflexivity tests disagree on an ideal");
  return via_identity;
}

inline bool is_transitive(const Rel& r) {
  require_endo(r, "is_transitive");
  return rel_leq(compose(r, r), r);
}

inline bool is_congruence(const Rel& r) {
  require_endo(r, "is_congruence");
  return is_reflexive(r) && is_transitive(r);
}

/// Every congruence in this backend is effective: build the quotient map f
/// with comma(f, f) equal to the congruence, taking least-index class
/// representatives.
inline MonotoneMap effective_witness(const Rel& r) {
  require_endo(r, "effective_witness");
  require_ideal(r, "effective_witness");
  if (!is_congruence(r)) throw std::invalid_argument("effective_witness: input is not a congruence");
  int n = r.dom.size;
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int classes = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    cls[static_cast<std::size_t>(x)] = classes;
    for (int y = x + 1; y < n; ++y)
      if (cls[static_cast<std::size_t>(y)] < 0 && r.mat.at(x, y) && r.mat.at(y, x))
        cls[static_cast<std::size_t>(y)] = classes;
    ++classes;
  }
  BoolMat order(classes, classes);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r.mat.at(x, y)) order.set(cls[static_cast<std::size_t>(x)], cls[static_cast<std::size_t>(y)], true);
  FinPreorder quotient(classes, std::move(order));
  require_preorder(quotient);
  MonotoneMap f{r.dom, std::move(quotient), cls};
  if (comma_rel(f, f) != r)
    throw std::logic_error("effective_witness: quotient map does not tabulate the congruence");
  return f;
}

/// Unit/counit inclusions of an adjunction candidate R -| Rbar:
/// I_X inside Rbar after R, and Rbar before R inside I_Y.
inline bool check_adjunction(const Rel& r, const Rel& rbar) {
  if (rbar.dom != r.cod || rbar.cod != r.dom)
    throw std::invalid_argument("check_adjunction: boundary mismatch");
  return rel_leq(id_ideal(r.dom), compose(r, rbar)) &&
         rel_leq(compose(rbar, r), id_ideal(r.cod));
}

/// Reconstruct the unique map with lower_star(f) = R from an adjoint pair,
/// breaking ties between order-isomorphic choices by least index.
inline MonotoneMap adjoint_to_map(const Rel& r, const Rel& rbar) {
  require_ideal(r, "adjoint_to_map");
  require_ideal(rbar, "adjoint_to_map");
  if (!check_adjunction(r, rbar))
    throw std::invalid_argument("adjoint_to_map: pair fails the adjunction inclusions");
  Rel s = meet(r, opp(rbar));
  std::vector<int> table(static_cast<std::size_t>(r.dom.size), -1);
  for (int x = 0; x < r.dom.size; ++x) {
    for (int y = 0; y < r.cod.size; ++y)
      if (s.mat.at(x, y)) {
        table[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (table[static_cast<std::size_t>(x)] < 0)
      throw std::invalid_argument(
          "adjoint_to_map: no value at " + std::to_string(x) +
          " (first projection of R meet opp(Rbar) is not surjective; corrupted input)");
  }
  MonotoneMap f{r.dom, r.cod, std::move(table)};
  require_map(f);
  if (lower_star(f) != r)
    throw std::logic_error("adjoint_to_map: reconstructed map does not reproduce R");
  return f;
}

/// All weakening-closed relations between two small preorders, in mask
/// order; exhaustive, so keep |X| * |Y| modest.
inline std::vector<Rel> enumerate_ideals(const FinPreorder& x, const FinPreorder& y) {
  std::vector<Rel> out;
  int cells = x.size * y.size;
  if (cells >= 20) throw std::invalid_argument("enumerate_ideals: boundaries too large");
  for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
    BoolMat m(x.size, y.size);
    for (int c = 0; c < cells; ++c)
      if (mask & (1ull << c)) m.set(c / y.size, c % y.size, true);
    Rel r{x, y, std::move(m)};
    if (is_ideal(r)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ordcat

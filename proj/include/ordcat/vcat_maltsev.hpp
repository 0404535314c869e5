#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ordcat/quantale.hpp"

namespace ordcat {

/// Cocomma object of the identity pair on X, taken in the opposite of the
/// category of V-categories: carrier X + X, homs X(x, x') between copies
/// i <= j and bottom from the second copy back into the first.
inline FinVCat cocomma_self(const FinVCat& x) {
  FinVCat out;
  out.v = x.v;
  out.size = 2 * x.size;
  int bottom = x.v.bot();
  out.hom.assign(static_cast<std::size_t>(out.size), std::vector<int>(static_cast<std::size_t>(out.size), bottom));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i > j) continue;
      for (int a = 0; a < x.size; ++a)
        for (int b = 0; b < x.size; ++b)
          out.hom[static_cast<std::size_t>(i * x.size + a)][static_cast<std::size_t>(j * x.size + b)] = x.at(a, b);
    }
  return out;
}

/// The ideal R_* generated by a relation with legs r1: X -> R, r2: Z -> R
/// (legs land in the apex because relations in this backend are co-spans
/// of V-functors, jointly surjective on objects). Carrier X + Z; cross
/// homs read R(r1 w, r2 w'), the reverse direction is bottom.
inline FinVCat r_star_vcat(const VFunctor& r1, const VFunctor& r2) {
  if (r1.cod != r2.cod) throw std::invalid_argument("r_star_vcat: legs must share the apex");
  if (r1.dom.v != r2.dom.v) throw std::invalid_argument("r_star_vcat: quantale mismatch");
  require_vfunctor(r1);
  require_vfunctor(r2);
  std::vector<char> hit(static_cast<std::size_t>(r1.cod.size), 0);
  for (int x : r1.table) hit[static_cast<std::size_t>(x)] = 1;
  for (int z : r2.table) hit[static_cast<std::size_t>(z)] = 1;
  for (char h : hit)
    if (!h) throw std::invalid_argument("r_star_vcat: legs are not jointly surjective on objects");

  const FinVCat& x = r1.dom;
  const FinVCat& z = r2.dom;
  FinVCat out;
  out.v = x.v;
  out.size = x.size + z.size;
  int bottom = x.v.bot();
  out.hom.assign(static_cast<std::size_t>(out.size), std::vector<int>(static_cast<std::size_t>(out.size), bottom));
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b) out.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = x.at(a, b);
  for (int a = 0; a < z.size; ++a)
    for (int b = 0; b < z.size; ++b)
      out.hom[static_cast<std::size_t>(x.size + a)][static_cast<std::size_t>(x.size + b)] = z.at(a, b);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < z.size; ++b)
      out.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(x.size + b)] = r1.cod.at(r1(a), r2(b));
  return out;
}

/// The span for the object-wise Mal'tsev test on Y: the sub-V-category D
/// of Y^3 on the triples (y1, y2, y2) and (y2, y2, y1), with the two
/// evident legs from Y x Y.
struct WMaltsevVCatSpan {
  FinVCat d;       // image inside Y^3, product homs
  VFunctor r1;     // (y1, y2) -> (y1, y2, y2)
  VFunctor r2;     // (y1, y2) -> (y2, y2, y1)
};

inline WMaltsevVCatSpan w_maltsev_vcat_span(const FinVCat& y) {
  FinVCat yy = product_vcat(y, y);
  std::map<std::tuple<int, int, int>, int> index;
  std::vector<std::tuple<int, int, int>> objects;
  auto intern = [&](int a, int b, int c) {
    auto key = std::make_tuple(a, b, c);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(objects.size());
    index.emplace(key, id);
    objects.push_back(key);
    return id;
  };
  std::vector<int> t1, t2;
  for (int y1 = 0; y1 < y.size; ++y1)
    for (int y2 = 0; y2 < y.size; ++y2) t1.push_back(intern(y1, y2, y2));
  for (int y1 = 0; y1 < y.size; ++y1)
    for (int y2 = 0; y2 < y.size; ++y2) t2.push_back(intern(y2, y2, y1));

  FinVCat d;
  d.v = y.v;
  d.size = static_cast<int>(objects.size());
  d.hom.assign(static_cast<std::size_t>(d.size), std::vector<int>(static_cast<std::size_t>(d.size), 0));
  for (int i = 0; i < d.size; ++i)
    for (int j = 0; j < d.size; ++j) {
      auto [a, b, c] = objects[static_cast<std::size_t>(i)];
      auto [a2, b2, c2] = objects[static_cast<std::size_t>(j)];
      d.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          y.v.meet(y.at(a, a2), y.v.meet(y.at(b, b2), y.at(c, c2)));
    }
  VFunctor r1{yy, d, std::move(t1)};
  VFunctor r2{yy, d, std::move(t2)};
  return WMaltsevVCatSpan{std::move(d), std::move(r1), std::move(r2)};
}

/// D_* on (Y x Y) + (Y x Y); the first-to-second cross hom is
/// Y(y1, y2') meet Y(y2, y2') meet Y(y2, y1').
inline FinVCat d_star_table(const FinVCat& y) {
  WMaltsevVCatSpan span = w_maltsev_vcat_span(y);
  return r_star_vcat(span.r1, span.r2);
}

/// Whether first-coordinate projection out of D_* is a V-functor into Y;
/// this is the object-wise Mal'tsev test for the opposite of V-categories.
/// All cases are checked even though only the first-to-second cross case
/// can fail.
inline bool h_is_vfunctor(const FinVCat& y) {
  FinVCat dstar = d_star_table(y);
  int block = y.size * y.size;
  auto first_coord = [&](int w) {
    int inside = w % block;
    return inside / y.size;  // (y1, y2) -> y1 on either summand
  };
  for (int w = 0; w < dstar.size; ++w)
    for (int w2 = 0; w2 < dstar.size; ++w2)
      if (!y.v.less(dstar.at(w, w2), y.at(first_coord(w), first_coord(w2)))) return false;
  return true;
}

/// Symmetric V_meet-category: symmetric homs that compose along binary
/// meets.
inline bool is_symmetric_vwedge(const FinVCat& y) {
  for (int a = 0; a < y.size; ++a)
    for (int b = 0; b < y.size; ++b)
      if (y.at(a, b) != y.at(b, a)) return false;
  for (int a = 0; a < y.size; ++a)
    for (int b = 0; b < y.size; ++b)
      for (int c = 0; c < y.size; ++c)
        if (!y.v.less(y.v.meet(y.at(a, b), y.at(b, c)), y.at(a, c))) return false;
  return true;
}

}  // namespace ordcat

#pragma once

#include <optional>
#include <utility>

#include "ordcat/preorder.hpp"

namespace ordcat {

/// Normal form m*y + n*x in the monoid on generators x, y subject to
/// x + y = 0. Multiplication cancels the inner block of x's against y's.
struct BicyclicElem {
  int m = 0;  // count of y's
  int n = 0;  // count of x's

  bool operator==(const BicyclicElem& o) const { return m == o.m && n == o.n; }
  bool operator!=(const BicyclicElem& o) const { return !(*this == o); }
};

inline BicyclicElem bicyclic_zero() { return {0, 0}; }
inline BicyclicElem bicyclic_x() { return {0, 1}; }
inline BicyclicElem bicyclic_y() { return {1, 0}; }

inline BicyclicElem bicyclic_add(BicyclicElem a, BicyclicElem b) {
  if (a.n >= b.m) return {a.m, a.n - b.m + b.n};
  return {a.m + b.m - a.n, b.n};
}

/// Gregarious witnesses u, v with u + e + v = 0: u = (e.m)*x, v = (e.n)*y.
inline std::pair<BicyclicElem, BicyclicElem> gregarious_witness(BicyclicElem e) {
  return {BicyclicElem{0, e.m}, BicyclicElem{e.n, 0}};
}

/// The relation D on the bicyclic monoid, literally: the diagonal together
/// with the pairs (m*y + n*x, (m+1)*y + (n+1)*x).
inline bool bicyclic_D_member(BicyclicElem a, BicyclicElem b) {
  return a == b || (b.m == a.m + 1 && b.n == a.n + 1);
}

struct DifunctionalityWitness {
  BicyclicElem a, b, c, d;
};

/// Exhaustive search for a difunctionality failure of a membership
/// predicate, over the box of coordinates <= bound.
template <typename Member>
inline std::optional<DifunctionalityWitness> find_difunctionality_witness(Member member, int bound) {
  std::vector<BicyclicElem> box;
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) box.push_back({m, n});
  for (BicyclicElem a : box)
    for (BicyclicElem b : box) {
      if (!member(a, b)) continue;
      for (BicyclicElem c : box) {
        if (!member(c, b)) continue;
        for (BicyclicElem d : box)
          if (member(c, d) && !member(a, d)) return DifunctionalityWitness{a, b, c, d};
      }
    }
  return std::nullopt;
}

/// Solve a + z = b for some z. Writing z = (p, q), the sum is
/// (a.m, a.n - p + q) when p <= a.n and (a.m + p - a.n, q) otherwise, so a
/// solution exists exactly when b.m >= a.m; a canonical one is returned.
inline std::optional<BicyclicElem> bicyclic_solve_right(BicyclicElem a, BicyclicElem b) {
  if (b.m < a.m) return std::nullopt;
  BicyclicElem z = (b.m == a.m) ? BicyclicElem{a.n, b.n}
                                : BicyclicElem{b.m - a.m + a.n, b.n};
  if (bicyclic_add(a, z) != b) return std::nullopt;
  return z;
}

}  // namespace ordcat

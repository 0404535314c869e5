#pragma once

#include <cstdint>
#include <random>

#include "ordcat/rel.hpp"

namespace ordcat {

/// Deterministic generator for randomized suites. mt19937_64 has a fully
/// specified output sequence, so identical seeds give identical runs on
/// every platform.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  int below(int n) { return n <= 0 ? 0 : static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

  bool flip() { return (rng_() & 1) != 0; }

  FinPreorder preorder(int max_size) {
    int n = range(0, max_size);
    std::vector<std::pair<int, int>> pairs;
    int edges = below(n * n + 1);
    for (int i = 0; i < edges; ++i) pairs.emplace_back(below(n), below(n));
    return closure_preorder(n, pairs);
  }

  FinPreorder nonempty_preorder(int max_size) {
    FinPreorder p = preorder(std::max(1, max_size));
    return p.size == 0 ? chain_preorder(1) : p;
  }

  /// Random monotone map; rejection sampling with a constant-map fallback.
  /// Requires a nonempty codomain when the domain is nonempty.
  MonotoneMap map(const FinPreorder& dom, const FinPreorder& cod) {
    if (dom.size == 0) return MonotoneMap{dom, cod, {}};
    if (cod.size == 0) throw std::invalid_argument("Gen::map: no map into an empty codomain");
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<int> t(static_cast<std::size_t>(dom.size));
      for (auto& v : t) v = below(cod.size);
      MonotoneMap f{dom, cod, std::move(t)};
      if (is_monotone(f)) return f;
    }
    return constant_map(dom, cod, below(cod.size));
  }

  /// Random surjection; falls back to a fresh codomain when rejection fails.
  MonotoneMap so_map(int max_size) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      FinPreorder dom = preorder(max_size);
      FinPreorder cod = preorder(max_size);
      if (cod.size > dom.size) continue;
      if (dom.size == 0 && cod.size == 0) return MonotoneMap{dom, cod, {}};
      if (cod.size == 0) continue;
      MonotoneMap f = map(dom, cod);
      if (is_so(f)) return f;
    }
    FinPreorder dom = nonempty_preorder(max_size);
    return identity_map(dom);
  }

  Rel rel(const FinPreorder& dom, const FinPreorder& cod) {
    BoolMat m(dom.size, cod.size);
    for (int x = 0; x < dom.size; ++x)
      for (int y = 0; y < cod.size; ++y)
        if (flip()) m.set(x, y, true);
    return Rel{dom, cod, std::move(m)};
  }

  Rel ideal(const FinPreorder& dom, const FinPreorder& cod) {
    // bias toward sparse generators so closures are not mostly total
    BoolMat m(dom.size, cod.size);
    for (int x = 0; x < dom.size; ++x)
      for (int y = 0; y < cod.size; ++y)
        if (below(4) == 0) m.set(x, y, true);
    return ideal_close(Rel{dom, cod, std::move(m)});
  }

  Rel reflexive_ideal(const FinPreorder& x) {
    return join(ideal(x, x), id_ideal(x));
  }

  Rel congruence(const FinPreorder& x) {
    Rel r = reflexive_ideal(x);
    for (int i = 0; i < x.size + 1; ++i) {
      Rel next = join(r, compose(r, r));
      if (next == r) break;
      r = std::move(next);
    }
    return r;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace ordcat

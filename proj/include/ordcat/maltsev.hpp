#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ordcat/gen.hpp"
#include "ordcat/rel.hpp"

namespace ordcat {

/// Plain difunctionality, by the defining quantifier:
/// x D y, u D y, u D v together force x D v.
inline bool is_difunctional(const Rel& d) {
  for (int x = 0; x < d.dom.size; ++x)
    for (int y = 0; y < d.cod.size; ++y)
      if (d.mat.at(x, y))
        for (int u = 0; u < d.dom.size; ++u)
          if (d.mat.at(u, y))
            for (int v = 0; v < d.cod.size; ++v)
              if (d.mat.at(u, v) && !d.mat.at(x, v)) return false;
  return true;
}

/// The composite route: D D^op D contained in D.
inline bool is_difunctional_composite(const Rel& d) {
  return rel_leq(compose(compose(d, opp(d)), d), d);
}

/// Order-interleaved difunctionality for ideals, by the defining picture:
/// x D y, y <= y', u D y', u <= u', u' D v together force x D v.
inline bool is_ord_difunctional(const Rel& d) {
  require_ideal(d, "is_ord_difunctional");
  for (int x = 0; x < d.dom.size; ++x)
    for (int y = 0; y < d.cod.size; ++y) {
      if (!d.mat.at(x, y)) continue;
      for (int y2 = 0; y2 < d.cod.size; ++y2) {
        if (!d.cod.leq.at(y, y2)) continue;
        for (int u = 0; u < d.dom.size; ++u) {
          if (!d.mat.at(u, y2)) continue;
          for (int u2 = 0; u2 < d.dom.size; ++u2) {
            if (!d.dom.leq.at(u, u2)) continue;
            for (int v = 0; v < d.cod.size; ++v)
              if (d.mat.at(u2, v) && !d.mat.at(x, v)) return false;
          }
        }
      }
    }
  return true;
}

/// The composite route: D D^* D equal to D, with D^* taken from the
/// tabulating span.
inline bool is_ord_difunctional_composite(const Rel& d) {
  require_ideal(d, "is_ord_difunctional_composite");
  return compose(compose(d, r_upper_of(d)), d) == d;
}

/// Both deciders must return the same verdict on every ideal.
inline bool dd_star_d_agreement(const Rel& d) {
  return is_ord_difunctional(d) == is_ord_difunctional_composite(d);
}

namespace detail {

struct WMaltsevConstruction {
  FinPreorder two_y;
  MonotoneMap iota1;   // Y -> 2Y
  Rel image;           // D, the image relation on 2Y x 2Y
  Rel image_ideal;     // D_*
};

inline WMaltsevConstruction w_maltsev_construction(const FinPreorder& y) {
  CoproductObject two = coproduct(y, y);
  CoproductObject two_and_one = coproduct(two.obj, y);  // carrier of 3Y, last block is copy 3
  const FinPreorder& three = two_and_one.obj;
  ProductObject square = product(two.obj, two.obj);

  // component pairings (i1,i2), (i2,i2), (i2,i1) on the three copies of Y
  std::vector<int> d1(static_cast<std::size_t>(three.size));
  std::vector<int> d2(static_cast<std::size_t>(three.size));
  for (int block = 0; block < 3; ++block)
    for (int v = 0; v < y.size; ++v) {
      int p = block * y.size + v;
      int i1 = two.in1(v);
      int i2 = two.in2(v);
      d1[static_cast<std::size_t>(p)] = (block == 0) ? i1 : i2;
      d2[static_cast<std::size_t>(p)] = (block == 2) ? i1 : i2;
    }
  MonotoneMap first{three, two.obj, std::move(d1)};
  MonotoneMap second{three, two.obj, std::move(d2)};
  MonotoneMap paired = pairing(square, first, second);

  Factorization fact = so_ff_factorize(paired);
  BoolMat m(two.obj.size, two.obj.size);
  for (int i = 0; i < fact.m.dom.size; ++i) {
    int idx = fact.m(i);
    m.set(idx / square.cols, idx % square.cols, true);
  }
  Rel image{two.obj, two.obj, std::move(m)};
  Rel closed = ideal_close(image);
  return WMaltsevConstruction{two.obj, two.in1, std::move(image), std::move(closed)};
}

}  // namespace detail

/// Coproduct test for an Ord-W-Mal'tsev object: factor the pairing
/// 3Y -> 2Y x 2Y, close the image to an ideal, and ask for
/// (iota1, iota1) as a generalized element.
inline bool w_maltsev_object_test(const FinPreorder& y) {
  auto c = detail::w_maltsev_construction(y);
  return membership(c.image_ideal, c.iota1, c.iota1);
}

/// Discrete-order (Set-like) variant: no ideal closure, membership in the
/// bare image. Coincides with the full test on discrete carriers.
inline bool w_maltsev_object_test_set_level(const FinPreorder& y) {
  auto c = detail::w_maltsev_construction(y);
  return membership(c.image, c.iota1, c.iota1);
}

struct DirectSearchWitness {
  FinPreorder x;
  FinPreorder z;
  Rel ideal;          // the ideal R: X -||-> Z that fails the implication from Y
  Rel hom_matrix;     // the induced relation on Ord(Y,X) x Ord(Y,Z)
};

struct DirectSearchResult {
  bool is_w_maltsev = true;
  std::optional<DirectSearchWitness> witness;
};

/// Search over ideals between preorders of size <= budget for a failure of
/// the defining implication with generalized elements out of y. The
/// implication is evaluated on the induced relation between the hom-sets
/// Ord(y, X) and Ord(y, Z), where it is literally the ideal picture.
inline DirectSearchResult ord_w_maltsev_direct(const FinPreorder& y, int budget) {
  for (int nx = 0; nx <= budget; ++nx) {
    std::vector<FinPreorder> xs = enumerate_preorders(nx);
    for (int nz = 0; nz <= budget; ++nz) {
      std::vector<FinPreorder> zs = enumerate_preorders(nz);
      for (const FinPreorder& x : xs) {
        std::vector<MonotoneMap> maps_x = all_monotone_maps(y, x);
        FinPreorder homx = hom_preorder(maps_x);
        for (const FinPreorder& z : zs) {
          std::vector<MonotoneMap> maps_z = all_monotone_maps(y, z);
          FinPreorder homz = hom_preorder(maps_z);
          for (Rel& r : enumerate_ideals(x, z)) {
            BoolMat m(homx.size, homz.size);
            for (int i = 0; i < homx.size; ++i)
              for (int j = 0; j < homz.size; ++j)
                m.set(i, j, membership(r, maps_x[static_cast<std::size_t>(i)],
                                       maps_z[static_cast<std::size_t>(j)]));
            Rel hom_rel{homx, homz, std::move(m)};
            if (!is_ord_difunctional_composite(hom_rel))
              return DirectSearchResult{false,
                                        DirectSearchWitness{x, z, std::move(r), std::move(hom_rel)}};
          }
        }
      }
    }
  }
  return DirectSearchResult{true, std::nullopt};
}

enum class SearchFilter { All, DiscreteOnly, TotalOnly };

/// Search for an ideal that is not Ord-difunctional: exhaustive below size
/// 3, seeded-random above.
inline std::optional<Rel> counterexample_search(int max_size, std::uint64_t seed,
                                                SearchFilter filter = SearchFilter::All) {
  if (max_size < 2) throw std::invalid_argument("counterexample_search: max_size must be >= 2");
  auto admit_preorder = [&](const FinPreorder& p) {
    return filter != SearchFilter::DiscreteOnly || p == discrete_preorder(p.size);
  };
  auto admit_rel = [&](const Rel& r) {
    return filter != SearchFilter::TotalOnly || r == total_rel(r.dom, r.cod);
  };
  int exhaustive_cap = std::min(max_size, 2);
  for (int nx = 0; nx <= exhaustive_cap; ++nx)
    for (int nz = 0; nz <= exhaustive_cap; ++nz)
      for (const FinPreorder& x : enumerate_preorders(nx)) {
        if (!admit_preorder(x)) continue;
        for (const FinPreorder& z : enumerate_preorders(nz)) {
          if (!admit_preorder(z)) continue;
          for (Rel& r : enumerate_ideals(x, z))
            if (admit_rel(r) && !is_ord_difunctional(r)) return r;
        }
      }
  std::mt19937_64 rng(seed);
  auto rnd = [&](int n) { return n <= 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int attempt = 0; attempt < 4000; ++attempt) {
    int nx = 2 + rnd(std::max(1, max_size - 1));
    int nz = 2 + rnd(std::max(1, max_size - 1));
    std::vector<std::pair<int, int>> px, pz;
    if (filter != SearchFilter::DiscreteOnly) {
      for (int i = 0; i < nx; ++i) px.emplace_back(rnd(nx), rnd(nx));
      for (int i = 0; i < nz; ++i) pz.emplace_back(rnd(nz), rnd(nz));
    }
    FinPreorder x = closure_preorder(nx, px);
    FinPreorder z = closure_preorder(nz, pz);
    BoolMat m(nx, nz);
    for (int c = 0; c < nx * nz; ++c)
      if (rng() & 1) m.set(c / nz, c % nz, true);
    Rel r = ideal_close(Rel{x, z, std::move(m)});
    if (filter == SearchFilter::TotalOnly) r = total_rel(x, z);
    if (admit_rel(r) && !is_ord_difunctional(r)) return r;
  }
  return std::nullopt;
}

struct CkpViolation {
  std::string implication;
  Rel instance;
};

struct CkpReport {
  int commuting_effective_cases = 0;   // (iii) => (iv) instances that fired
  int reflexive_composite_cases = 0;   // (iv) => (v) instances that fired
  int reflexive_closure_cases = 0;     // (v) => (i) support instances
  int commuting_congruence_cases = 0;  // (i) content instances that fired
  std::vector<CkpViolation> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

/// The effective congruences d1^* d1_* and d2^* d2_* on the tabulation of
/// an ideal; if they commute, the composite route must collapse D D^* D
/// back to D.
inline void ckp_effective_commute_step(const Rel& d, CkpReport& report) {
  Span span = tabulate(d);
  Rel e1 = compose(lower_star(span.r1), upper_star(span.r1));
  Rel e2 = compose(lower_star(span.r2), upper_star(span.r2));
  if (compose(e1, e2) != compose(e2, e1)) return;
  report.commuting_effective_cases += 1;
  if (compose(compose(d, r_upper_of(d)), d) != d)
    report.violations.push_back({"commuting effective congruences but DD*D != D", d});
}

inline void ckp_reflexive_transitive_step(const Rel& r, CkpReport& report) {
  if (!is_reflexive(r)) return;
  Rel rup = r_upper_of(r);
  if (!is_reflexive(rup))
    report.violations.push_back({"reflexive ideal with non-reflexive R^*", r});
  if (!rel_leq(compose(compose(r, rup), r), r)) return;
  report.reflexive_composite_cases += 1;
  if (!is_transitive(r))
    report.violations.push_back({"RR*R inside R but R not transitive", r});
}

inline void ckp_reflexive_compose_step(const Rel& r, const Rel& s, CkpReport& report) {
  if (!is_reflexive(r) || !is_reflexive(s)) return;
  report.reflexive_closure_cases += 1;
  if (!is_reflexive(compose(r, s)))
    report.violations.push_back({"composite of reflexive ideals not reflexive", compose(r, s)});
}

inline void ckp_commuting_congruence_step(const Rel& r, const Rel& s, CkpReport& report) {
  if (!is_congruence(r) || !is_congruence(s)) return;
  Rel rs = compose(r, s);
  if (rs != compose(s, r)) return;
  report.commuting_congruence_cases += 1;
  if (!is_congruence(rs))
    report.violations.push_back({"commuting congruences with non-congruence composite", rs});
}

}  // namespace detail

/// Instance-level checks extracted from the proof of the regular
/// Ord-Mal'tsev characterisation theorem, run over sampled ideals and
/// congruences. Expected outcome: no violations, with every implication
/// firing at least once on non-vacuous instances.
inline CkpReport ckp_suite(int samples, int max_size, std::uint64_t seed) {
  CkpReport report;
  Gen gen(seed);
  // fixtures guaranteeing non-vacuous instances of each implication
  {
    FinPreorder a2 = discrete_preorder(2);
    FinPreorder c2 = chain_preorder(2);
    detail::ckp_effective_commute_step(diagonal_rel(a2), report);
    detail::ckp_reflexive_transitive_step(id_ideal(c2), report);
    detail::ckp_reflexive_compose_step(id_ideal(c2), total_rel(c2, c2), report);
    detail::ckp_commuting_congruence_step(total_rel(c2, c2), total_rel(c2, c2), report);
  }
  for (int i = 0; i < samples; ++i) {
    FinPreorder x = gen.preorder(max_size);
    FinPreorder y = gen.preorder(max_size);
    detail::ckp_effective_commute_step(gen.ideal(x, y), report);
    detail::ckp_reflexive_transitive_step(gen.reflexive_ideal(x), report);
    detail::ckp_reflexive_compose_step(gen.reflexive_ideal(x), gen.reflexive_ideal(x), report);
    detail::ckp_commuting_congruence_step(gen.congruence(x), gen.congruence(x), report);
  }
  return report;
}

}  // namespace ordcat

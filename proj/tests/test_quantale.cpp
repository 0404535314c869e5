#include <catch2/catch_amalgamated.hpp>

#include "ordcat/vcat_maltsev.hpp"

using namespace ordcat;

namespace {

FinVCat chain_as_vcat2() {
  // the 2-chain seen over bool2: hom(0,1) = top, hom(1,0) = bot
  return vcat_from_preorder(chain_preorder(2));
}

FinVCat indiscrete_vcat(const FinQuantale& v, int n) {
  FinVCat x{v, n, {}};
  x.hom.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), v.unit));
  return x;
}

FinVCat discrete_vcat(const FinQuantale& v, int n) {
  FinVCat x{v, n, {}};
  x.hom.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), v.bot()));
  for (int i = 0; i < n; ++i) x.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v.unit;
  return x;
}

}  // namespace

TEST_CASE("shipped quantale fixtures validate; broken ones report indices") {
  for (const FinQuantale& v : all_quantale_fixtures()) {
    std::string why;
    INFO(v.name << ": " << why);
    CHECK(quantale_check(v, &why));
  }

  FinQuantale bad = quantale_bool2();
  bad.unit = 0;
  std::string why;
  CHECK_FALSE(quantale_check(bad, &why));
  CHECK(why == "unit fails at 1");

  FinQuantale bad2 = quantale_chain3_meet();
  bad2.unit = 1;
  CHECK_FALSE(quantale_check(bad2, &why));
  CHECK(why == "unit fails at 2");

  // a non-integral (unit below top) candidate: three-chain with unit 1 and
  // tensor forced to keep 1 as the unit
  FinQuantale ni;
  ni.name = "non-integral";
  ni.size = 3;
  ni.leq = chain_preorder(3).leq;
  ni.tensor = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  ni.unit = 1;
  CHECK_FALSE(quantale_check(ni, &why));
  CHECK(why == "unit not top (quantale must be integral)");
}

TEST_CASE("Lukasiewicz tensor agrees with clamped fraction arithmetic") {
  FinQuantale luk = quantale_chain3_lukasiewicz();
  auto frac = [](int idx) { return idx / 2.0; };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double expect = std::max(0.0, frac(a) + frac(b) - 1.0);
      CHECK(frac(luk.times(a, b)) == expect);
    }
}

TEST_CASE("vcat_check and vfunctor_check accept valid data and name violations") {
  FinVCat chain = chain_as_vcat2();
  CHECK(vcat_check(chain));

  FinVCat broken = chain;
  broken.hom[0][0] = 0;
  std::string why;
  CHECK_FALSE(vcat_check(broken, &why));
  CHECK(why == "identity fails at 0");

  Gen gen(151);
  for (const FinQuantale& v : all_quantale_fixtures())
    for (int i = 0; i < 60; ++i) {
      FinVCat y = random_vcat(gen, v, gen.range(0, 4));
      INFO(v.name);
      CHECK(vcat_check(y));
      VFunctor id = identity_vfunctor(y);
      CHECK(vfunctor_check(id));
      if (y.size > 0) {
        std::vector<int> t(static_cast<std::size_t>(gen.range(1, 4)));
        for (auto& e : t) e = gen.below(y.size);
        VFunctor f = random_vfunctor_onto(gen, y, t);
        CHECK(vcat_check(f.dom));
        CHECK(vfunctor_check(f));
      }
    }
}

TEST_CASE("vhom_leq: reflexive on identities, ordered constants over the 2-chain") {
  FinVCat chain = chain_as_vcat2();
  VFunctor c0{chain, chain, {0, 0}};
  VFunctor c1{chain, chain, {1, 1}};
  CHECK(vhom_leq(c0, c0));
  CHECK(vhom_leq(identity_vfunctor(chain), identity_vfunctor(chain)));
  CHECK(vhom_leq(c0, c1));
  CHECK_FALSE(vhom_leq(c1, c0));
}

TEST_CASE("vhom_leq is a preorder preserved by composition on both sides") {
  Gen gen(157);
  for (const FinQuantale& v : all_quantale_fixtures())
    for (int i = 0; i < 60; ++i) {
      FinVCat r = random_vcat(gen, v, gen.range(1, 3));
      auto endo_table = [&] {
        std::vector<int> t(static_cast<std::size_t>(r.size));
        for (auto& e : t) e = gen.below(r.size);
        return t;
      };
      VFunctor f{r, r, endo_table()};
      VFunctor g{r, r, endo_table()};
      VFunctor h{r, r, endo_table()};
      if (!vfunctor_check(f) || !vfunctor_check(g) || !vfunctor_check(h)) continue;
      CHECK(vhom_leq(f, f));
      if (vhom_leq(f, g) && vhom_leq(g, h)) CHECK(vhom_leq(f, h));
      if (vhom_leq(f, g)) {
        CHECK(vhom_leq(compose_vfunctor(h, f), compose_vfunctor(h, g)));
        CHECK(vhom_leq(compose_vfunctor(f, h), compose_vfunctor(g, h)));
      }
    }
  // and concretely over the 2-chain
  FinVCat chain = chain_as_vcat2();
  VFunctor c0{chain, chain, {0, 0}};
  VFunctor c1{chain, chain, {1, 1}};
  VFunctor id = identity_vfunctor(chain);
  REQUIRE(vhom_leq(c0, c1));
  CHECK(vhom_leq(compose_vfunctor(id, c0), compose_vfunctor(id, c1)));
  CHECK(vhom_leq(compose_vfunctor(c0, c0), compose_vfunctor(c0, c1)));
}

TEST_CASE("cocomma of the identity pair") {
  Gen gen(163);
  for (const FinQuantale& v : all_quantale_fixtures())
    for (int i = 0; i < 40; ++i) {
      FinVCat x = random_vcat(gen, v, gen.range(0, 3));
      FinVCat c = cocomma_self(x);
      CHECK(vcat_check(c));
      int bottom = v.bot();
      for (int a = 0; a < x.size; ++a)
        for (int b = 0; b < x.size; ++b) {
          CHECK(c.at(a, b) == x.at(a, b));                      // copy 1 to copy 1
          CHECK(c.at(x.size + a, x.size + b) == x.at(a, b));    // copy 2 to copy 2
          CHECK(c.at(a, x.size + b) == x.at(a, b));             // forward across
          CHECK(c.at(x.size + a, b) == bottom);                 // backward across
        }
    }

  FinVCat single = indiscrete_vcat(quantale_bool2(), 1);
  FinVCat c = cocomma_self(single);
  CHECK(c.size == 2);
  CHECK(c.at(0, 1) == 1);
  CHECK(c.at(1, 0) == 0);
}

TEST_CASE("r_star over a co-span: the four-branch table") {
  Gen gen(167);
  for (const FinQuantale& v : all_quantale_fixtures())
    for (int i = 0; i < 60; ++i) {
      FinVCat r = random_vcat(gen, v, gen.range(1, 3));
      // jointly surjective tables: r1 random, r2 covers everything
      std::vector<int> t1(static_cast<std::size_t>(gen.range(1, 3)));
      for (auto& e : t1) e = gen.below(r.size);
      std::vector<int> t2(static_cast<std::size_t>(r.size));
      std::iota(t2.begin(), t2.end(), 0);
      VFunctor r1 = random_vfunctor_onto(gen, r, t1);
      VFunctor r2 = random_vfunctor_onto(gen, r, t2);
      FinVCat star = r_star_vcat(r1, r2);
      CHECK(vcat_check(star));
      const FinVCat& x = r1.dom;
      const FinVCat& z = r2.dom;
      int bottom = v.bot();
      for (int a = 0; a < x.size; ++a)
        for (int b = 0; b < x.size; ++b) CHECK(star.at(a, b) == x.at(a, b));
      for (int a = 0; a < z.size; ++a)
        for (int b = 0; b < z.size; ++b) CHECK(star.at(x.size + a, x.size + b) == z.at(a, b));
      for (int a = 0; a < x.size; ++a)
        for (int b = 0; b < z.size; ++b) {
          CHECK(star.at(a, x.size + b) == r.at(r1(a), r2(b)));
          CHECK(star.at(x.size + b, a) == bottom);
        }
    }

  // identity legs reproduce the object on both branches
  FinVCat y = random_vcat(gen, quantale_chain3_meet(), 3);
  FinVCat star = r_star_vcat(identity_vfunctor(y), identity_vfunctor(y));
  for (int a = 0; a < y.size; ++a)
    for (int b = 0; b < y.size; ++b) {
      CHECK(star.at(a, b) == y.at(a, b));
      CHECK(star.at(a, y.size + b) == y.at(a, b));
    }

  // joint surjectivity is required
  FinVCat two = indiscrete_vcat(quantale_bool2(), 2);
  VFunctor miss1{two, two, {0, 0}};
  CHECK_THROWS_AS(r_star_vcat(miss1, miss1), std::invalid_argument);
}

TEST_CASE("the D_* table for the object-wise test") {
  Gen gen(173);
  for (const FinQuantale& v : all_quantale_fixtures())
    for (int i = 0; i < 40; ++i) {
      FinVCat y = random_vcat(gen, v, gen.range(0, 3));
      FinVCat dstar = d_star_table(y);
      CHECK(vcat_check(dstar));
      int block = y.size * y.size;
      int bottom = v.bot();
      for (int y1 = 0; y1 < y.size; ++y1)
        for (int y2 = 0; y2 < y.size; ++y2) {
          int w = y1 * y.size + y2;
          CHECK(dstar.at(w, w) == v.unit);
          for (int y1p = 0; y1p < y.size; ++y1p)
            for (int y2p = 0; y2p < y.size; ++y2p) {
              int w2 = y1p * y.size + y2p;
              int within = v.meet(y.at(y1, y1p), y.at(y2, y2p));
              CHECK(dstar.at(w, w2) == within);
              CHECK(dstar.at(block + w, block + w2) == within);
              int cross = v.meet(y.at(y1, y2p), v.meet(y.at(y2, y2p), y.at(y2, y1p)));
              CHECK(dstar.at(w, block + w2) == cross);
              CHECK(dstar.at(block + w, w2) == bottom);
            }
        }
    }

  FinVCat single = indiscrete_vcat(quantale_bool2(), 1);
  FinVCat dstar = d_star_table(single);
  REQUIRE(dstar.size == 2);
  CHECK(dstar.at(0, 0) == 1);
  CHECK(dstar.at(0, 1) == 1);
  CHECK(dstar.at(1, 1) == 1);
  CHECK(dstar.at(1, 0) == 0);
}

TEST_CASE("classifier: projection-functoriality equals symmetric meet-transitivity") {
  // frozen verdicts
  CHECK(h_is_vfunctor(indiscrete_vcat(quantale_bool2(), 3)));
  CHECK(is_symmetric_vwedge(indiscrete_vcat(quantale_bool2(), 3)));
  CHECK(h_is_vfunctor(discrete_vcat(quantale_chain3_meet(), 3)));
  CHECK(is_symmetric_vwedge(discrete_vcat(quantale_chain3_meet(), 3)));
  CHECK_FALSE(h_is_vfunctor(chain_as_vcat2()));
  CHECK_FALSE(is_symmetric_vwedge(chain_as_vcat2()));

  // exhaustive agreement for small carriers over the shipped fixtures
  std::vector<FinQuantale> vs{quantale_bool2(), quantale_chain3_meet(),
                              quantale_chain3_lukasiewicz()};
  for (const FinQuantale& v : vs)
    for (int n = 0; n <= (v.size == 2 ? 3 : 2); ++n)
      for (const FinVCat& y : enumerate_vcats(v, n)) {
        INFO(v.name << " size " << n);
        CHECK(h_is_vfunctor(y) == is_symmetric_vwedge(y));
      }

  // randomized agreement at larger sizes, diamond included
  Gen gen(179);
  for (const FinQuantale& v : all_quantale_fixtures())
    for (int i = 0; i < 60; ++i) {
      FinVCat y = random_vcat(gen, v, gen.range(4, 5));
      CHECK(h_is_vfunctor(y) == is_symmetric_vwedge(y));
    }
}

TEST_CASE("over bool2 the classifier picks out equivalence relations") {
  for (int n = 0; n <= 3; ++n)
    for (const FinVCat& y : enumerate_vcats(quantale_bool2(), n)) {
      FinPreorder p = preorder_from_vcat(y);
      require_preorder(p);  // V-cats over bool2 are exactly preorders
      CHECK(vcat_check(vcat_from_preorder(p)));
      bool equivalence = (p.leq == p.leq.transpose());
      CHECK(is_symmetric_vwedge(y) == equivalence);
      CHECK(h_is_vfunctor(y) == equivalence);
    }
}

#include <doctest.h>

#include "locgal/error.hpp"
#include "locgal/site.hpp"
#include "locgal/wraith.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace locgal;

namespace {
std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }
std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}
}  // namespace

TEST_CASE("wraith sites carry the prescribed covers") {
  WraithSite rel = wraith_site(WraithKind::Relations, 2, 2);
  CHECK(rel.site.base().size() == 4);
  CHECK(rel.site.covers().empty());
  CHECK(rel.site.lattice().size() == 16);

  WraithSite f12 = wraith_site(WraithKind::Functions, 1, 2);
  // one u-pair empty cover, one e-cover of top with two members
  REQUIRE(f12.site.covers().size() == 2);
  std::size_t empties = 0, tops = 0;
  for (const auto& c : f12.site.covers()) {
    if (c.family.empty()) ++empties;
    if (c.target.none()) {
      ++tops;
      CHECK(c.family.size() == 2);
    }
  }
  CHECK(empties == 1);
  CHECK(tops == 1);

  // bijections on 2x2: u and i schemas deduplicate to 2+2, plus 2 e and 2 s
  WraithSite b22 = wraith_site(WraithKind::Bijections, 2, 2);
  CHECK(b22.site.covers().size() == 8);
}

TEST_CASE("points of wraith locales count relations, functions, bijections") {
  for (std::size_t nx = 1; nx <= 2; ++nx)
    for (std::size_t ny = 1; ny <= 2; ++ny) {
      CHECK(enumerate_points(wraith_site(WraithKind::Relations, nx, ny).site).size() ==
            ipow(2, nx * ny));
      CHECK(enumerate_points(wraith_site(WraithKind::Functions, nx, ny).site).size() ==
            ipow(ny, nx));
    }
  CHECK(enumerate_points(wraith_site(WraithKind::Bijections, 2, 2).site).size() == 2);
  CHECK(enumerate_points(wraith_site(WraithKind::Bijections, 3, 3).site).size() == 6);
  CHECK(enumerate_points(wraith_site(WraithKind::Bijections, 2, 3).site).size() == 0);
}

TEST_CASE("structure maps validate and satisfy the displayed formulas") {
  // e* on lFunc(X,X): diagonal generators go to the top of the 2-frame
  WraithSite xx = wraith_site(WraithKind::Functions, 2, 2);
  Site pt = point_site();
  FrameMorphism e = wraith_e(xx, pt);
  CHECK(e.assignment(xx.gen(0, 0)) == frame_top(pt));
  CHECK(e.assignment(xx.gen(0, 1)) == frame_zero(pt));

  // iota on lBij is an involution on generators
  WraithSite bij = wraith_site(WraithKind::Bijections, 2, 2);
  FrameMorphism i1 = wraith_iota(bij, bij);
  FrameMorphism twice = FrameMorphism::compose(i1, i1);
  for (std::size_t g = 0; g < 4; ++g)
    CHECK(twice.assignment(g) ==
          frame_principal(bij.site, bij.site.lattice().generator(g)));

  // m* with |Z| = 1 is the single-term join
  WraithSite xy = wraith_site(WraithKind::Functions, 2, 2);
  WraithSite xz = wraith_site(WraithKind::Functions, 2, 1);
  WraithSite zy = wraith_site(WraithKind::Functions, 1, 2);
  Site t = tensor(xz.site, zy.site);
  FrameMorphism m = wraith_m(xy, xz, zy, t);
  uint32_t expected =
      t.lattice().element_of((uint32_t{1} << xz.gen(1, 0)) | (uint32_t{1} << (2 + zy.gen(0, 1))));
  CHECK(m.assignment(xy.gen(1, 1)) == frame_principal(t, expected));
}

TEST_CASE("groupoid laws hold on one-point sets") {
  Report r = verify_groupoid_laws(WraithKind::Functions, 1, 1, 1);
  CHECK(r.all_passed());
}

TEST_CASE("groupoid laws hold for bijections on 2-element sets") {
  Report r = verify_groupoid_laws(WraithKind::Bijections, 2, 2, 2);
  INFO(r.checks.size());
  CHECK(r.all_passed());
}

TEST_CASE("corrupted m* fails coassociativity and names a generator") {
  Report r = verify_groupoid_laws(WraithKind::Functions, 2, 2, 2, true);
  CHECK(!r.all_passed());
  bool coassoc_failed = false;
  for (const auto& c : r.checks)
    if (c.name == "coassociativity" && c.verdict == Verdict::Fail) {
      coassoc_failed = true;
      CHECK(!c.witness.empty());
    }
  CHECK(coassoc_failed);
}

TEST_CASE("action presentations from G-sets") {
  auto z2 = test::make_group("Z2");
  auto s3 = test::make_group("S3");

  // trivial action on a point: mu(*,*) = G
  auto trivial = action_from_gset(GSet::trivial(z2, 1));
  CHECK(trivial.equations.all_passed());
  CHECK(trivial.presentation.mu_star(0, 0) == 0b11);

  // regular action of Z2: mu(0,1) = {1}, mu(0,0) = {0}
  auto reg = action_from_gset(GSet::regular(z2));
  CHECK(reg.equations.all_passed());
  CHECK(reg.presentation.mu_star(0, 0) == uint64_t{1} << z2->identity());
  CHECK(reg.presentation.mu_star(0, 1) == (0b11ull & ~(uint64_t{1} << z2->identity())));

  // Z2 acting trivially on two points is not transitive
  auto triv2 = action_from_gset(GSet::trivial(z2, 2));
  CHECK(triv2.equations.all_passed());
  CHECK(triv2.presentation.mu_star(0, 1) == 0);
  CHECK(!is_transitive(triv2.presentation));

  // S3 coset action is transitive
  uint64_t h = 0;
  for (uint16_t g = 0; g < s3->order(); ++g)
    if (s3->element_name(g) == "e" || s3->element_name(g) == "(1 2)") h |= uint64_t{1} << g;
  auto cosets = action_from_gset(GSet::cosets(s3, h));
  CHECK(cosets.equations.all_passed());
  CHECK(is_transitive(cosets.presentation));
}

TEST_CASE("l_fix is the stabilizer and conjugation permutes stabilizers") {
  auto s3 = test::make_group("S3");
  GSet natural = [&] {
    // S3 on {1,2,3} through its permutation names: use cosets of <(1 2)>
    uint64_t h = 0;
    for (uint16_t g = 0; g < s3->order(); ++g)
      if (s3->element_name(g) == "e" || s3->element_name(g) == "(1 2)") h |= uint64_t{1} << g;
    return GSet::cosets(s3, h);
  }();
  auto act = action_from_gset(natural);

  // stabilizer of the base coset is <(1 2)> itself
  CHECK(l_fix(act.presentation, 0) == natural.stabilizer(0));
  CHECK(__builtin_popcountll(l_fix(act.presentation, 0)) == 2);

  // free action: trivial stabilizer
  auto reg = action_from_gset(GSet::regular(s3));
  CHECK(l_fix(reg.presentation, 2) == uint64_t{1} << s3->identity());

  // trivial action: whole group
  auto triv = action_from_gset(GSet::trivial(s3, 1));
  CHECK(__builtin_popcountll(l_fix(triv.presentation, 0)) == 6);

  // conjugation property: lFix(g.x) = g lFix(x) g^-1
  for (uint16_t g = 0; g < s3->order(); ++g)
    for (uint16_t x = 0; x < natural.size(); ++x) {
      uint64_t lhs = l_fix(act.presentation, natural.act(g, x));
      uint64_t rhs = s3->conjugate_subgroup(l_fix(act.presentation, x), g);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("transitivity agrees with the single-orbit count on the corpus") {
  for (const auto& name : test::small_group_corpus()) {
    auto g = test::make_group(name);
    if (g->order() > 8) continue;
    for (const auto& cls : g->subgroup_classes()) {
      GSet x = GSet::cosets(g, cls.front());
      auto a = action_from_gset(x);
      CHECK(is_transitive(a.presentation) == (x.orbits().size() == 1));
    }
    // a disjoint union is never transitive for |G| >= 1
    GSet two = GSet::trivial(g, 2);
    CHECK(!is_transitive(action_from_gset(two).presentation));
  }
}

TEST_CASE("wraith frame equations u e i s hold on constructed sites") {
  WraithSite b = wraith_site(WraithKind::Bijections, 2, 2);
  const auto& lat = b.site.lattice();
  // u: [<z|x>,<z|y>] = 0
  CHECK(is_zero(frame_principal(
      b.site, lat.element_of((uint32_t{1} << b.gen(0, 0)) | (uint32_t{1} << b.gen(0, 1))))));
  // i: [<x|z>,<y|z>] = 0
  CHECK(is_zero(frame_principal(
      b.site, lat.element_of((uint32_t{1} << b.gen(0, 0)) | (uint32_t{1} << b.gen(1, 0))))));
  // e and s: joins over rows and columns are the top
  FrameElement e_join = frame_join(frame_principal(b.site, lat.generator(b.gen(0, 0))),
                                   frame_principal(b.site, lat.generator(b.gen(0, 1))));
  CHECK(e_join == frame_top(b.site));
  FrameElement s_join = frame_join(frame_principal(b.site, lat.generator(b.gen(0, 0))),
                                   frame_principal(b.site, lat.generator(b.gen(1, 0))));
  CHECK(s_join == frame_top(b.site));
}

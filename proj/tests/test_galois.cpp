#include <doctest.h>

#include "locgal/error.hpp"
#include "locgal/galois.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace locgal;

namespace {

uint64_t subgroup_by_names(const FiniteGroup& g, std::initializer_list<const char*> names) {
  uint64_t h = 0;
  for (uint16_t i = 0; i < g.order(); ++i)
    for (const char* n : names)
      if (g.element_name(i) == n) h |= uint64_t{1} << i;
  return h;
}

}  // namespace

TEST_CASE("is_galois on the S3 examples") {
  auto s3 = test::make_group("S3");
  uint64_t a3 = subgroup_by_names(*s3, {"e", "(1 2 3)", "(1 3 2)"});
  uint64_t h12 = subgroup_by_names(*s3, {"e", "(1 2)"});

  auto galois_a3 = is_galois(GSet::cosets(s3, a3));
  CHECK(galois_a3.galois);
  CHECK(galois_a3.aut_order == 2);

  auto not_galois = is_galois(GSet::cosets(s3, h12));
  CHECK(!not_galois.galois);
  CHECK(not_galois.aut_order == 1);
  CHECK(not_galois.refutation.find("torsor") != std::string::npos);

  CHECK(is_galois(GSet::regular(s3)).galois);
  CHECK(!is_galois(GSet::trivial(s3, 2)).galois);  // not connected
}

TEST_CASE("is_galois agrees with the normal-subgroup oracle on the corpus") {
  for (const auto& name : test::small_group_corpus()) {
    auto g = test::make_group(name);
    for (const auto& cls : g->subgroup_classes()) {
      GSet x = GSet::cosets(g, cls.front());
      INFO(name, " subgroup ", g->subgroup_name(cls.front()));
      CHECK(is_galois(x).galois == g->is_normal(cls.front()));
    }
  }
}

TEST_CASE("galois closure of S3/<(1 2)> is the regular representation") {
  auto s3 = test::make_group("S3");
  uint64_t h12 = subgroup_by_names(*s3, {"e", "(1 2)"});
  GSet x = GSet::cosets(s3, h12);
  auto r = galois_closure(x);
  CHECK(r.closure.size() == 6);
  CHECK(r.certificate.galois);
  // projections hit their component at the base point
  for (uint16_t comp = 0; comp < x.size(); ++comp)
    CHECK(r.projections[comp][r.base_point] == comp);
}

TEST_CASE("galois closure matches the normal-core oracle on the corpus") {
  for (const auto& name : test::small_group_corpus()) {
    auto g = test::make_group(name);
    for (const auto& cls : g->subgroup_classes()) {
      GSet x = GSet::cosets(g, cls.front());
      auto r = galois_closure(x);
      uint64_t core = oracle::normal_core(*g, cls.front());
      GSet expected = GSet::cosets(g, core);
      INFO(name, " subgroup ", g->subgroup_name(cls.front()));
      CHECK(r.closure.size() == expected.size());
      CHECK(isomorphic(r.closure, expected));
      // an already-Galois object is its own closure
      if (g->is_normal(cls.front())) CHECK(r.closure.size() == x.size());
    }
  }
}

TEST_CASE("abelian groups: every connected object is its own closure") {
  auto z6 = test::make_group("Z6");
  for (const auto& cls : z6->subgroup_classes()) {
    GSet x = GSet::cosets(z6, cls.front());
    CHECK(galois_closure(x).closure.size() == x.size());
  }
}

TEST_CASE("torsor property: Aut acts freely and transitively on a Galois object") {
  auto q8 = test::make_group("Q8");
  for (const auto& cls : q8->subgroup_classes()) {
    GSet x = GSet::cosets(q8, cls.front());
    auto cert = is_galois(x);
    if (!cert.galois) continue;
    CHECK(cert.aut_order == x.size());
    CHECK(cert.astar_bijective);
    CHECK(cert.torsor_bijective);
  }
}

TEST_CASE("split_by: stabilizer semantics on the S3 examples") {
  auto s3 = test::make_group("S3");
  uint64_t a3 = subgroup_by_names(*s3, {"e", "(1 2 3)", "(1 3 2)"});
  uint64_t h12 = subgroup_by_names(*s3, {"e", "(1 2)"});

  GSet u_a3 = GSet::cosets(s3, a3);
  GSet x_a3 = GSet::cosets(s3, a3);
  GSet x_12 = GSet::cosets(s3, h12);

  // constants are split by every cover
  CHECK(split_by(u_a3, GSet::trivial(s3, 3)));
  // G/A3 is split by G/A3
  CHECK(split_by(u_a3, x_a3));
  // G/<(1 2)> is not split by G/A3
  CHECK(!split_by(u_a3, x_12));
  // the regular cover splits everything
  GSet reg = GSet::regular(s3);
  CHECK(split_by(reg, x_12));
  CHECK(split_by(reg, x_a3));
  // empty covers are rejected
  CHECK_THROWS_AS(split_by(GSet::trivial(s3, 0), x_a3), ValidationError);
}

TEST_CASE("split_by agrees with the definitional trivialization search") {
  auto s3 = test::make_group("S3");
  auto z4 = test::make_group("Z4");
  std::vector<GSet> s3_objects, z4_objects;
  for (const auto& cls : s3->subgroup_classes()) s3_objects.push_back(GSet::cosets(s3, cls.front()));
  for (const auto& cls : z4->subgroup_classes()) z4_objects.push_back(GSet::cosets(z4, cls.front()));

  for (const auto& u : s3_objects)
    for (const auto& x : s3_objects) {
      if (x.size() > 4) continue;  // permutation search cost
      bool expected = true;
      for (const auto& orbit : u.orbits())
        if (!oracle::naive_split_on_orbit(u, orbit.front(), x)) expected = false;
      CHECK(split_by(u, x) == expected);
    }
  for (const auto& u : z4_objects)
    for (const auto& x : z4_objects) {
      bool expected = true;
      for (const auto& orbit : u.orbits())
        if (!oracle::naive_split_on_orbit(u, orbit.front(), x)) expected = false;
      CHECK(split_by(u, x) == expected);
    }
}

TEST_CASE("split monotonicity and closure stability") {
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);
  for (const auto& u : tbg.objects)
    for (const auto& v : tbg.objects) {
      // u <= v when there is an arrow u -> v; then v-split implies u-split
      if (hom_gsets(u, v).empty()) continue;
      for (const auto& x : tbg.objects)
        if (split_by(v, x)) CHECK(split_by(u, x));
    }
  for (const auto& u : tbg.objects) {
    GSet a = split_closure(tbg, u);
    CHECK(split_object_ids(tbg, u) == split_object_ids(tbg, a));
  }
}

TEST_CASE("verify_split_eq passes for all covers of tB(S3)") {
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);
  for (const auto& u : tbg.objects) {
    Report r = verify_split_eq(tbg, u);
    INFO("cover of size ", u.size());
    CHECK(r.all_passed());
  }
}

TEST_CASE("split closure of the non-normal S3 cover is the point, not the regular object") {
  // Split(G/<(1 2)>) contains only the terminal object, and its representing
  // object is 1; the Galois closure G/e of the same cover is much finer.
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);
  uint64_t h12 = subgroup_by_names(*s3, {"e", "(1 2)"});
  GSet u = GSet::cosets(s3, h12);
  auto ids = split_object_ids(tbg, u);
  CHECK(ids == std::vector<std::size_t>{0});
  CHECK(split_closure(tbg, u).size() == 1);
  CHECK(galois_closure(u).closure.size() == 6);
}

TEST_CASE("split categories: regular cover gives all of tBG, the point gives constants") {
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);
  CHECK(split_object_ids(tbg, GSet::regular(s3)).size() == tbg.objects.size());
  auto point_ids = split_object_ids(tbg, GSet::trivial(s3, 1));
  CHECK(point_ids == std::vector<std::size_t>{0});
}

TEST_CASE("C_A subcategories on tB(S3)") {
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);

  // A = regular (index 3): C_A is everything
  auto ca_reg = c_a_subcategory(tbg, 3);
  CHECK(ca_reg.checks.all_passed());
  CHECK(ca_reg.object_ids.size() == 4);

  // A = G/A3 (the 2-element object, index 1): C_A = {1, G/A3}
  auto ca_a3 = c_a_subcategory(tbg, 1);
  CHECK(ca_a3.checks.all_passed());
  CHECK(ca_a3.object_ids == std::vector<std::size_t>{0, 1});

  // A = 1: C_A = {1}
  auto ca_1 = c_a_subcategory(tbg, 0);
  CHECK(ca_1.object_ids == std::vector<std::size_t>{0});

  // C_A inclusion into C_B for B -> A: here B = regular covers A = G/A3
  for (std::size_t id : ca_a3.object_ids)
    CHECK(std::find(ca_reg.object_ids.begin(), ca_reg.object_ids.end(), id) !=
          ca_reg.object_ids.end());

  // non-Galois A rejected
  CHECK_THROWS_AS(c_a_subcategory(tbg, 2), ValidationError);
}

TEST_CASE("fundamental theorem verifies on C_A sites of tB(S3) and tB(Z4)") {
  for (const auto& name : {"S3", "Z4"}) {
    auto g = test::make_group(name);
    SiteCategory tbg = build_tbg_site(g);
    for (std::size_t a = 0; a < tbg.objects.size(); ++a) {
      if (!is_galois(tbg.objects[a]).galois) continue;
      auto ca = c_a_subcategory(tbg, a);
      Report r = verify_fundamental_discrete(ca.category);
      INFO(name, " A of size ", tbg.objects[a].size());
      CHECK(r.all_passed());
    }
  }
}

TEST_CASE("fundamental theorem on a trivial site") {
  SiteCategory c = build_tbg_site(test::make_group("Z1"));
  Report r = verify_fundamental_discrete(c);
  CHECK(r.all_passed());
}

TEST_CASE("fundamental theorem reports non-representable sites") {
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);
  Report r = verify_fundamental_discrete(tbg.full_subcategory({0, 1, 2}));
  CHECK(!r.all_passed());
  CHECK(r.checks.front().name == "representable");
  CHECK(r.checks.front().verdict == Verdict::Fail);
}

TEST_CASE("galois cofinality report on small groups") {
  for (const auto& name : {"Z2", "Z6", "S3", "D4"}) {
    SiteCategory tbg = build_tbg_site(test::make_group(name));
    Report r = galois_cofinality(tbg);
    INFO(name);
    CHECK(r.all_passed());
  }
}

TEST_CASE("minimal Galois cover of S3/<(1 2)> is the regular object") {
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);
  Report r = galois_cofinality(tbg);
  bool found = false;
  for (const auto& n : r.notes)
    if (n.find("X2") != std::string::npos && n.find("|6|") != std::string::npos) found = true;
  CHECK(found);
}

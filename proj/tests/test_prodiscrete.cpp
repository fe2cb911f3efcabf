#include <doctest.h>

#include "locgal/chain.hpp"
#include "locgal/error.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace locgal;

namespace {

// Z2 <- Z4 <- Z8 with reduction maps.
GroupChain z248() {
  auto z2 = test::make_group("Z2");
  auto z4 = test::make_group("Z4");
  auto z8 = test::make_group("Z8");
  std::vector<uint16_t> t42{0, 1, 0, 1};
  std::vector<uint16_t> t84{0, 1, 2, 3, 0, 1, 2, 3};
  return GroupChain({z2, z4, z8}, {t42, t84});
}

// Brute-force factoring oracle: smallest stage whose factored table is
// well-defined (same image for all preimages of each stage element).
std::size_t naive_factor_stage(const GroupChain& chain, const GSet& x) {
  const std::size_t top = chain.length() - 1;
  for (std::size_t s = 0; s <= top; ++s) {
    auto t = chain.composite(top, s);
    bool ok = true;
    for (uint16_t g = 0; g < x.group()->order() && ok; ++g)
      for (uint16_t h = 0; h < x.group()->order() && ok; ++h) {
        if (t[g] != t[h]) continue;
        for (uint16_t p = 0; p < x.size() && ok; ++p)
          if (x.act(g, p) != x.act(h, p)) ok = false;
      }
    if (ok) return s;
  }
  return top;
}

}  // namespace

TEST_CASE("chain construction validates surjective homomorphisms") {
  auto z2 = test::make_group("Z2");
  auto z4 = test::make_group("Z4");
  CHECK_NOTHROW(z248());
  // non-surjective transition rejected with the missing element named
  std::vector<uint16_t> constant{0, 0, 0, 0};
  try {
    GroupChain c({z2, z4}, {constant});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("misses") != std::string::npos);
  }
  // non-homomorphism rejected
  std::vector<uint16_t> garbage{0, 1, 1, 1};
  CHECK_THROWS_AS(GroupChain({z2, z4}, {garbage}), ValidationError);
}

TEST_CASE("restriction along surjections preserves transitivity and homs") {
  auto z4 = test::make_group("Z4");
  auto z2 = test::make_group("Z2");
  std::vector<uint16_t> t{0, 1, 0, 1};

  GSet reg2 = GSet::regular(z2);
  GSet pulled = restrict_along(z4, t, reg2);
  CHECK(pulled.is_transitive());
  CHECK(pulled.size() == 2);

  Report r = verify_bt_star(z4, t, z2);
  CHECK(r.all_passed());

  // identity transition: restriction is the identity functor
  std::vector<uint16_t> id{0, 1, 2, 3};
  GSet same = restrict_along(z4, id, GSet::regular(z4));
  CHECK(same == GSet::regular(z4));

  // S3 ->> Z2 along the sign character
  auto s3 = test::make_group("S3");
  std::vector<uint16_t> sign;
  for (const auto& h : all_homomorphisms(*s3, *z2))
    if (h.surjective) sign = h.map;
  REQUIRE(!sign.empty());
  GSet s3_2 = restrict_along(s3, sign, reg2);
  CHECK(s3_2.is_transitive());
  CHECK(s3_2.size() == 2);
  CHECK(verify_bt_star(s3, sign, z2).all_passed());
}

TEST_CASE("restriction rejects non-surjective maps naming a missed element") {
  auto z4 = test::make_group("Z4");
  auto z2 = test::make_group("Z2");
  std::vector<uint16_t> constant{0, 0, 0, 0};
  try {
    restrict_along(z4, constant, GSet::regular(z2));
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("misses") != std::string::npos);
  }
}

TEST_CASE("B(t)* is full and faithful for all surjections among small groups") {
  std::vector<std::string> names{"Z2", "Z3", "Z4", "Z6", "Z8", "V4", "S3", "D4", "Q8"};
  for (const auto& src_name : names) {
    auto src = test::make_group(src_name);
    if (src->order() > 8) continue;
    for (const auto& dst_name : names) {
      auto dst = test::make_group(dst_name);
      if (dst->order() > src->order()) continue;
      for (const auto& h : all_homomorphisms(*src, *dst)) {
        if (!h.surjective) continue;
        Report r = verify_bt_star(src, h.map, dst);
        INFO(src_name, " ->> ", dst_name);
        CHECK(r.all_passed());
      }
    }
  }
}

TEST_CASE("colimit site of the constant chain is tBG on the nose") {
  auto s3 = test::make_group("S3");
  std::vector<uint16_t> id{0, 1, 2, 3, 4, 5};
  GroupChain constant({s3, s3, s3}, {id, id});
  ColimitSite c = colimit_site(constant);
  CHECK(c.checks.all_passed());
  SiteCategory tbg = build_tbg_site(s3);
  REQUIRE(c.germs.size() == tbg.objects.size());
  for (std::size_t i = 0; i < c.germs.size(); ++i) {
    CHECK(c.germs[i].first_stage == 0);
    CHECK(c.germs[i].at_top == tbg.objects[c.germs[i].object_index]);
  }
  // stage-to-germ maps are the identity up to ordering
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t i = 0; i < c.germ_of[s].size(); ++i) CHECK(c.germ_of[s][i] == i);
}

TEST_CASE("germ identification in Z2 <- Z4 and Z2 <- Z4 <- Z8") {
  auto z2 = test::make_group("Z2");
  auto z4 = test::make_group("Z4");
  std::vector<uint16_t> t42{0, 1, 0, 1};
  GroupChain two({z2, z4}, {t42});
  ColimitSite c2 = colimit_site(two);
  CHECK(c2.checks.all_passed());
  // the Z2-regular object and its Z4-restriction are identified
  CHECK(c2.germ_of[0][1] == c2.germ_of[1][1]);
  // germs: sizes 1, 2, 4
  CHECK(c2.germs.size() == 3);

  ColimitSite c3 = colimit_site(z248());
  CHECK(c3.checks.all_passed());
  // transitive Z8-sets have sizes 1, 2, 4, 8; every smaller-stage object is
  // identified with one of them, leaving one germ class per size
  CHECK(c3.germs.size() == 4);
  std::vector<std::size_t> sizes;
  for (const auto& g : c3.germs) sizes.push_back(g.at_top.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 1 << 2, 8});
}

TEST_CASE("factor_transitive matches the kernel oracle on all transitive Z8-sets") {
  GroupChain chain = z248();
  auto z8 = chain.stage(2);
  for (const auto& cls : z8->subgroup_classes()) {
    GSet x = GSet::cosets(z8, cls.front());
    FactorResult r = factor_transitive(chain, x);
    CHECK(r.checks.all_passed());
    CHECK(r.stage == naive_factor_stage(chain, x));
    // pushing the factored action back recovers x on the nose
    GSet back = restrict_along(z8, chain.composite(2, r.stage), r.factored);
    CHECK(back == x);
  }
}

TEST_CASE("factoring examples: through-Z2 action, regular action, point") {
  GroupChain chain = z248();
  auto z8 = chain.stage(2);

  // Z8 acting through Z2 on 2 points: factors at the first stage
  uint64_t h4 = 0;  // subgroup {0,2,4,6} = kernel of Z8 -> Z2
  for (uint16_t g = 0; g < 8; g += 2) h4 |= uint64_t{1} << g;
  FactorResult through_z2 = factor_transitive(chain, GSet::cosets(z8, h4));
  CHECK(through_z2.stage == 0);
  CHECK(!through_z2.only_top);

  FactorResult reg = factor_transitive(chain, GSet::regular(z8));
  CHECK(reg.stage == 2);
  CHECK(reg.only_top);

  FactorResult point = factor_transitive(chain, GSet::trivial(z8, 1));
  CHECK(point.stage == 0);
}

TEST_CASE("cofinal subgroups of the chain") {
  GroupChain chain = z248();
  Report r = cofinal_subgroups(chain);
  // every subgroup of Z8 contains some transition kernel, so all reachable
  CHECK(r.all_passed());

  // <2> <= Z4 is the preimage of {0} <= Z2; the trivial subgroup of Z4 is
  // reachable only at the top stage
  auto z2 = test::make_group("Z2");
  auto z4 = test::make_group("Z4");
  GroupChain two({z2, z4}, {std::vector<uint16_t>{0, 1, 0, 1}});
  Report r2 = cofinal_subgroups(two);
  CHECK(r2.all_passed());
  bool sub2_at_1 = false, trivial_at_top = false;
  for (const auto& c : r2.checks) {
    if (c.name == "subgroup-{0,2}" && c.witness.find("stage 1") != std::string::npos)
      sub2_at_1 = true;
    if (c.name == "subgroup-{0}" && c.witness.find("stage 2") != std::string::npos)
      trivial_at_top = true;
  }
  CHECK(sub2_at_1);
  CHECK(trivial_at_top);

  // constant chain: everything reachable at the first stage
  auto s3 = test::make_group("S3");
  GroupChain constant({s3, s3}, {std::vector<uint16_t>{0, 1, 2, 3, 4, 5}});
  Report rc = cofinal_subgroups(constant);
  for (const auto& c : rc.checks) CHECK(c.witness.find("stage 1") != std::string::npos);
}

TEST_CASE("every prodiscrete report carries the truncation note") {
  GroupChain chain = z248();
  auto has_note = [](const Report& r) {
    for (const auto& n : r.notes)
      if (n.find("truncation") != std::string::npos) return true;
    return false;
  };
  CHECK(has_note(cofinal_subgroups(chain)));
  CHECK(has_note(colimit_site(chain).checks));
  CHECK(has_note(factor_transitive(chain, GSet::regular(chain.stage(2))).checks));
  CHECK(has_note(verify_bt_star(chain.stage(1), chain.transition(0), chain.stage(0))));
}

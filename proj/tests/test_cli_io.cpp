#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "locgal/error.hpp"
#include "locgal/json_io.hpp"
#include "locgal/wraith.hpp"
#include "test_support.hpp"

using namespace locgal;

namespace {

// Runs the CLI binary (tests execute from build/tests) and captures stdout.
struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = "../tools/locgal " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("preorder JSON round-trips and reports closure application") {
  std::size_t added = 0;
  Preorder p = preorder_from_json(
      json{{"elements", {"a", "b", "c"}}, {"leq", {{0, 1}, {1, 2}}}}, &added);
  CHECK(added == 1);
  Preorder again = preorder_from_json(preorder_to_json(p));
  CHECK(p == again);
}

TEST_CASE("site JSON round-trips") {
  WraithSite w = wraith_site(WraithKind::Bijections, 2, 2);
  json j = site_to_json(w.site);
  Site back = site_from_json(j);
  CHECK(back.base() == w.site.base());
  CHECK(site_to_json(back) == j);
  CHECK(enumerate_points(back).size() == 2);
}

TEST_CASE("group JSON round-trips in both forms") {
  FiniteGroup s3 = FiniteGroup::builtin("S3");
  FiniteGroup back = group_from_json(group_to_json(s3));
  CHECK(back.same_table(s3));

  // spec-style permutation form: [["(1 2)", "(1 2 3)"], degree]
  json j{{"name", "S3p"}, {"permutations", json::array({json::array({"(1 2)", "(1 2 3)"}), 3})}};
  FiniteGroup from_perms = group_from_json(j);
  CHECK(from_perms.order() == 6);
  CHECK(group_from_json("Z4").order() == 4);
}

TEST_CASE("gset and chain JSON round-trip") {
  auto z4 = test::make_group("Z4");
  GSet x = GSet::cosets(z4, z4->subgroup_closure(uint64_t{1} << 2));
  GSet back = gset_from_json(gset_to_json(x));
  CHECK(back == x);

  auto z2 = test::make_group("Z2");
  GroupChain chain({z2, z4}, {std::vector<uint16_t>{0, 1, 0, 1}});
  GroupChain cback = chain_from_json(chain_to_json(chain));
  CHECK(cback.length() == 2);
  CHECK(cback.transition(0) == chain.transition(0));
}

TEST_CASE("functor JSON round-trips") {
  std::mt19937 rng(2024);
  auto c = test::random_concrete_category(rng, 3, 3, 10);
  json j = functor_to_json(c.tautological);
  FunctorData back = functor_from_json(j);
  CHECK(functor_to_json(back) == j);
  CHECK(back.sizes == c.tautological.sizes);
  CHECK(back.maps == c.tautological.maps);
}

TEST_CASE("malformed documents are rejected with locations") {
  CHECK_THROWS_WITH_AS(preorder_from_json(json{{"leq", json::array()}}),
                       doctest::Contains("elements"), ValidationError);
  CHECK_THROWS_AS(gset_from_json(json{{"group", "Z2"}, {"carrier", 2}, {"act", {{0, 1}}}}),
                  ValidationError);
  CHECK_THROWS_AS(group_from_json(json{{"name", "X"}}), ValidationError);
}

TEST_CASE("report serialization is stable and counts verdicts") {
  Report r;
  r.title = "sample";
  r.engine = "full";
  r.add("alpha", true);
  r.add("beta", Verdict::Undecided, "budget");
  json j = report_to_json(r);
  CHECK(j["overall"] == "undecided");
  CHECK(j["counts"]["pass"] == 1);
  CHECK(report_to_json(r) == j);
  CHECK(!r.all_passed());
}

TEST_CASE("cli: exit codes distinguish pass, fail and input errors") {
  CHECK(run_cli("site verify-atomic --group Z4").code == 0);
  CHECK(run_cli("locale verify-laws --kind func --x 2 --y 2 --z 2 --corrupt-m").code == 2);
  CHECK(run_cli("group define --group NOSUCH").code == 1);
  CHECK(run_cli("gset orbits --group S3 --subgroup \"(1 2 3)\"").code == 0);
}

TEST_CASE("cli: spec examples") {
  auto galois = run_cli("galois check --group S3 --subgroup \"(1 2)\"");
  CHECK(galois.code == 0);
  CHECK(galois.out.find("not Galois, |Aut| = 1") != std::string::npos);

  auto points = run_cli("locale points --kind bij --x 3 --y 3");
  CHECK(points.code == 0);
  CHECK(points.out.find("6 points") != std::string::npos);
}

TEST_CASE("cli: reports are byte-stable across runs") {
  for (const char* cmd :
       {"site verify-atomic --group S3 --json", "yoneda verify --group Z3 --json",
        "locale nucleus-check --rounds 10 --seed 7 --json"}) {
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    CHECK(!first.out.empty());
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}

TEST_CASE("cli: json outputs parse and re-load") {
  auto res = run_cli("group define --group Q8 --json");
  CHECK(res.code == 0);
  json j = json::parse(res.out);
  FiniteGroup q8 = group_from_json(j["group"]);
  CHECK(q8.order() == 8);
}

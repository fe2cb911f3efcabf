// Acceptance suite: every gate below prints one PASS/FAIL line; the binary
// exits nonzero if any gate fails. Tolerances are exact throughout (the
// verified statements are theorems, not measurements).

#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "locgal/enrichment.hpp"
#include "locgal/entails.hpp"
#include "locgal/error.hpp"
#include "locgal/galois.hpp"
#include "locgal/json_io.hpp"
#include "locgal/wraith.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace locgal;

namespace {

int g_failures = 0;

void gate(int index, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s criterion-%d %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}
std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// ---------------------------------------------------------------- 1
void criterion_point_counts() {
  bool ok = true;
  std::string detail;
  for (std::size_t nx = 1; nx <= 3 && ok; ++nx)
    for (std::size_t ny = 1; ny <= 3 && ok; ++ny) {
      std::size_t rel = enumerate_points(wraith_site(WraithKind::Relations, nx, ny).site).size();
      std::size_t fun = enumerate_points(wraith_site(WraithKind::Functions, nx, ny).site).size();
      if (rel != ipow(2, nx * ny) || fun != ipow(ny, nx)) {
        ok = false;
        detail = "sizes (" + std::to_string(nx) + "," + std::to_string(ny) + ")";
      }
    }
  for (std::size_t n = 1; n <= 3 && ok; ++n) {
    std::size_t bij = enumerate_points(wraith_site(WraithKind::Bijections, n, n).site).size();
    if (bij != factorial(n)) {
      ok = false;
      detail = "lBij(" + std::to_string(n) + ")";
    }
  }
  gate(1, "point-count-law", ok, detail);
}

// ---------------------------------------------------------------- 2
void criterion_groupoid_laws() {
  bool ok = true;
  std::string detail;
  for (std::size_t x = 1; x <= 2 && ok; ++x)
    for (std::size_t y = 1; y <= 2 && ok; ++y)
      for (std::size_t z = 1; z <= 2 && ok; ++z)
        for (WraithKind kind : {WraithKind::Functions, WraithKind::Bijections}) {
          Report r = verify_groupoid_laws(kind, x, y, z);
          if (!r.all_passed()) {
            ok = false;
            detail = std::string(to_string(kind)) + " |X|=" + std::to_string(x) +
                     " |Y|=" + std::to_string(y) + " |Z|=" + std::to_string(z);
            break;
          }
        }
  bool negative = !verify_groupoid_laws(WraithKind::Functions, 2, 2, 2, true).all_passed();
  if (!negative) {
    ok = false;
    detail = "corrupted m* was not caught";
  }
  gate(2, "groupoid-law-suite", ok, detail);
}

// ---------------------------------------------------------------- 3
void criterion_yoneda() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(20240815);
  int categories_verified = 0;
  int attempts = 0;
  while (categories_verified < 20 && attempts < 4000 && ok) {
    ++attempts;
    auto c = test::random_concrete_category(rng, 4, 3, 12);
    bool any = false;
    for (uint32_t a = 0; a < c.cat->n_objects(); ++a) {
      std::size_t gens = 0;
      for (uint32_t x = 0; x < c.cat->n_objects(); ++x)
        gens += c.cat->hom(a, x).size() * c.tautological.sizes[x];
      if (gens > 14) continue;
      Report r = yoneda_verify(c.cat, a, c.tautological);
      if (!r.all_passed()) {
        ok = false;
        detail = "randomized category, object " + std::to_string(a);
        break;
      }
      any = true;
    }
    if (any) ++categories_verified;
  }
  if (categories_verified < 20) {
    ok = false;
    detail = "only " + std::to_string(categories_verified) + " randomized categories verified";
  }
  for (const auto& name : {"Z2", "Z3"}) {
    SiteCategory tbg = build_tbg_site(test::make_group(name));
    SiteFunctor sf = functor_of_site(tbg);
    uint32_t a = static_cast<uint32_t>(tbg.objects.size() - 1);
    if (!yoneda_verify(sf.cat, a, sf.underlying).all_passed()) {
      ok = false;
      detail = std::string("tB(") + name + ") yoneda";
    }
    Report rauto = yoneda_auto_verify(sf.cat, a, a);
    if (!rauto.all_passed()) {
      ok = false;
      detail = std::string("tB(") + name + ") lAut([A,-]) vs Aut(A)^op";
    }
    bool has_zero_forcing = false, has_op = false;
    for (const auto& ch : rauto.checks) {
      if (ch.name == "non-isos-forced-to-zero" && ch.verdict == Verdict::Pass)
        has_zero_forcing = true;
      if (ch.name == "point-composition-is-opposite-aut" && ch.verdict == Verdict::Pass)
        has_op = true;
    }
    if (!has_zero_forcing || !has_op) {
      ok = false;
      detail = std::string("tB(") + name + ") missing auto-variant checks";
    }
  }
  gate(3, "localic-yoneda", ok, detail);
}

// ---------------------------------------------------------------- 4
void criterion_atomic_sites() {
  bool ok = true;
  std::string detail;
  for (const auto& name : {"Z2", "Z3", "Z4", "Z6", "S3", "D4"}) {
    SiteCategory c = build_tbg_site(test::make_group(name));
    if (!verify_atomic_site(c).all_passed()) {
      ok = false;
      detail = std::string("tB(") + name + ")";
    }
  }
  SiteCategory bad = build_tbg_site(test::make_group("Z2"));
  bad.homs[1][1].push_back({0, 0});
  Report r = verify_atomic_site(bad);
  bool witnessed = false;
  for (const auto& ch : r.checks)
    if (ch.verdict == Verdict::Fail && ch.witness.find("not surjective") != std::string::npos)
      witnessed = true;
  if (r.all_passed() || !witnessed) {
    ok = false;
    detail = "injected non-surjective arrow not named";
  }
  gate(4, "atomic-site-checker", ok, detail);
}

// ---------------------------------------------------------------- 5
void criterion_galois_oracles() {
  bool ok = true;
  std::string detail;
  for (const auto& name : test::small_group_corpus()) {
    auto g = test::make_group(name);
    for (const auto& cls : g->subgroup_classes()) {
      GSet x = GSet::cosets(g, cls.front());
      bool detected = is_galois(x).galois;
      bool normal = g->is_normal(cls.front());
      if (detected != normal) {
        ok = false;
        detail = name + " detection vs normal oracle at " + g->subgroup_name(cls.front());
      }
      auto closure = galois_closure(x);
      GSet expected = GSet::cosets(g, oracle::normal_core(*g, cls.front()));
      if (closure.closure.size() != expected.size() ||
          !isomorphic(closure.closure, expected)) {
        ok = false;
        detail = name + " closure vs core oracle at " + g->subgroup_name(cls.front());
      }
    }
  }
  gate(5, "galois-detection-and-closure-oracles", ok, detail);
}

// ---------------------------------------------------------------- 6
void criterion_fundamental() {
  bool ok = true;
  std::string detail;
  for (const auto& name : {"S3", "Z4"}) {
    auto g = test::make_group(name);
    SiteCategory tbg = build_tbg_site(g);
    std::size_t galois_count = 0;
    for (std::size_t a = 0; a < tbg.objects.size(); ++a) {
      if (!is_galois(tbg.objects[a]).galois) continue;
      ++galois_count;
      auto ca = c_a_subcategory(tbg, a);
      Report r = verify_fundamental_discrete(ca.category);
      if (!ca.checks.all_passed() || !r.all_passed()) {
        ok = false;
        detail = std::string(name) + ", A = " + tbg.object_name(a);
      }
    }
    if (galois_count == 0) {
      ok = false;
      detail = std::string(name) + ": no Galois objects found";
    }
  }
  gate(6, "fundamental-theorem-discrete", ok, detail);
}

// ---------------------------------------------------------------- 7
void criterion_split() {
  bool ok = true;
  std::string detail;
  auto s3 = test::make_group("S3");
  SiteCategory tbg = build_tbg_site(s3);
  for (const auto& u : tbg.objects) {
    Report r = verify_split_eq(tbg, u);
    if (!r.all_passed()) {
      ok = false;
      detail = "cover of size " + std::to_string(u.size());
    }
  }
  gate(7, "split-suite", ok, detail);
}

// ---------------------------------------------------------------- 8
void criterion_transitivity_lifting() {
  bool ok = true;
  std::string detail;
  struct Case {
    const char* group;
    std::size_t max_size;
  };
  for (const Case c : {Case{"Z2", SIZE_MAX}, Case{"Z3", SIZE_MAX}, Case{"S3", 3}}) {
    SiteCategory tbg = build_tbg_site(test::make_group(c.group));
    EnrichOptions full{Engine::Full, 1'000'000};
    full.max_object_size = c.max_size;
    EnrichOptions lazy{Engine::Lazy, 1'000'000};
    lazy.max_object_size = c.max_size;

    for (auto verify : {&verify_transitivity, &verify_lifting}) {
      Report rf = verify(tbg, full);
      Report rl = verify(tbg, lazy);
      if (!rf.all_passed()) {
        ok = false;
        detail = std::string(c.group) + " full engine";
      }
      if (rf.count(Verdict::Undecided) || rl.count(Verdict::Undecided)) {
        ok = false;
        detail = std::string(c.group) + " undecided entries";
      }
      if (rf.checks.size() != rl.checks.size()) {
        ok = false;
        detail = std::string(c.group) + " differential shape mismatch";
        continue;
      }
      for (std::size_t i = 0; i < rf.checks.size(); ++i)
        if (rf.checks[i].verdict != rl.checks[i].verdict ||
            rf.checks[i].name != rl.checks[i].name) {
          ok = false;
          detail = std::string(c.group) + " engines disagree at " + rf.checks[i].name;
        }
    }
  }
  gate(8, "transitivity-and-lifting", ok, detail);
}

// ---------------------------------------------------------------- 9
void criterion_prodiscrete() {
  bool ok = true;
  std::string detail;

  auto z2 = test::make_group("Z2");
  auto z4 = test::make_group("Z4");
  auto z8 = test::make_group("Z8");
  GroupChain chain({z2, z4, z8},
                   {std::vector<uint16_t>{0, 1, 0, 1},
                    std::vector<uint16_t>{0, 1, 2, 3, 0, 1, 2, 3}});

  // factoring vs the kernel oracle on all transitive Z8-sets
  for (const auto& cls : z8->subgroup_classes()) {
    GSet x = GSet::cosets(z8, cls.front());
    FactorResult r = factor_transitive(chain, x);
    uint64_t action_ker = x.action_kernel();
    std::size_t expected = 2;
    for (std::size_t s = 0; s < 2; ++s) {
      uint64_t ker = kernel_of(*z8, chain.composite(2, s), chain.stage(s)->identity());
      if ((ker & ~action_ker) == 0) {
        expected = s;
        break;
      }
    }
    if (r.stage != expected || !r.checks.all_passed()) {
      ok = false;
      detail = "factoring at subgroup " + z8->subgroup_name(cls.front());
    }
  }

  // B(t)* full and faithful for every surjection among groups of order <= 8
  std::vector<std::string> names{"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8",
                                 "V4", "S3", "D4", "Q8"};
  for (const auto& sn : names) {
    auto src = test::make_group(sn);
    if (src->order() > 8) continue;
    for (const auto& dn : names) {
      auto dst = test::make_group(dn);
      if (dst->order() > src->order()) continue;
      for (const auto& h : all_homomorphisms(*src, *dst)) {
        if (!h.surjective) continue;
        if (!verify_bt_star(src, h.map, dst).all_passed()) {
          ok = false;
          detail = sn + " ->> " + dn;
        }
      }
    }
  }

  // colimit site of the constant chain is tBG on the nose
  auto s3 = test::make_group("S3");
  std::vector<uint16_t> id{0, 1, 2, 3, 4, 5};
  ColimitSite constant = colimit_site(GroupChain({s3, s3, s3}, {id, id}));
  SiteCategory tbg = build_tbg_site(s3);
  if (!constant.checks.all_passed() || constant.germs.size() != tbg.objects.size()) {
    ok = false;
    detail = "constant chain germ count";
  } else {
    for (std::size_t i = 0; i < constant.germs.size(); ++i)
      if (!(constant.germs[i].at_top == tbg.objects[constant.germs[i].object_index])) {
        ok = false;
        detail = "constant chain germ " + std::to_string(i) + " not identical to tBG object";
      }
  }
  gate(9, "prodiscrete-suite", ok, detail);
}

// ---------------------------------------------------------------- 10
void criterion_engine_soundness() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(424242);
  for (int round = 0; round < 200 && ok; ++round) {
    Site site = test::random_site(rng, 10, 6);
    const std::size_t n = site.base().size();
    const std::size_t L = site.lattice().size();
    std::uniform_int_distribution<uint32_t> el(0, static_cast<uint32_t>(L - 1));

    // nucleus laws
    Bitset seed(L);
    seed.set(el(rng));
    seed.set(el(rng));
    FrameElement sat = saturate(site, seed);
    Bitset bigger = seed;
    bigger.set(el(rng));
    if (!seed.is_subset_of(sat.members) || saturate(site, sat.members) != sat ||
        !sat.members.is_subset_of(saturate(site, bigger).members)) {
      ok = false;
      detail = "nucleus laws at round " + std::to_string(round);
    }

    // distributivity
    FrameElement a = frame_principal(site, el(rng));
    FrameElement b = frame_principal(site, el(rng));
    FrameElement c = frame_principal(site, el(rng));
    if (frame_meet(a, frame_join(b, c)) != frame_join(frame_meet(a, b), frame_meet(a, c))) {
      ok = false;
      detail = "distributivity at round " + std::to_string(round);
    }

    // lazy engine agreement
    std::uniform_int_distribution<uint32_t> md(0, (uint32_t{1} << n) - 1);
    auto bits = [&](uint32_t m) {
      Bitset bs(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((m >> i) & 1) bs.set(i);
      return bs;
    };
    std::uniform_int_distribution<int> fam(0, 3);
    for (int q = 0; q < 3; ++q) {
      Bitset elem = bits(md(rng));
      std::vector<Bitset> family;
      for (int f = fam(rng); f > 0; --f) family.push_back(bits(md(rng)));
      Bitset seeds(L);
      for (const auto& fm : family) {
        uint32_t m32 = 0;
        fm.for_each([&](std::size_t i) { m32 |= uint32_t{1} << i; });
        seeds.set(site.lattice().element_of(m32));
      }
      uint32_t e32 = 0;
      elem.for_each([&](std::size_t i) { e32 |= uint32_t{1} << i; });
      bool full = saturate(site, seeds).members.test(site.lattice().element_of(e32));
      auto lazy = entails(site, elem, family);
      if (lazy.verdict == Verdict::Undecided || lazy.holds() != full) {
        ok = false;
        detail = "entails disagreement at round " + std::to_string(round);
      }
    }
  }
  gate(10, "engine-soundness", ok, detail);
}

}  // namespace

int main() {
  try {
    criterion_point_counts();
    criterion_groupoid_laws();
    criterion_yoneda();
    criterion_atomic_sites();
    criterion_galois_oracles();
    criterion_fundamental();
    criterion_split();
    criterion_transitivity_lifting();
    criterion_prodiscrete();
    criterion_engine_soundness();
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance-suite-exception: %s\n", e.what());
    return 1;
  }
  if (g_failures) {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}

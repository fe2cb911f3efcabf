// Command-line workbench: load groups, sites, functors and chains, dispatch
// the verifiers, and emit deterministic reports.
//
// Exit codes: 0 all checks pass, 1 malformed input, 2 some check failed,
// 3 undecided checks (and no failures). Reports go to stdout and are
// byte-stable for identical inputs; timing goes to stderr.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "locgal/enrichment.hpp"
#include "locgal/entails.hpp"
#include "locgal/error.hpp"
#include "locgal/galois.hpp"
#include "locgal/json_io.hpp"
#include "locgal/wraith.hpp"

using namespace locgal;

namespace {

struct Options {
  bool json = false;
  std::string engine = "auto";
  std::size_t budget = 1'000'000;
  std::size_t max_group_order = 24;
  uint64_t seed = 1;
};

Engine engine_choice(const std::string& s) {
  if (s == "full") return Engine::Full;
  if (s == "lazy") return Engine::Lazy;
  return Engine::Auto;
}

// Everything that determines the run: the argument vector plus the
// normalized contents of every loaded document.
std::string g_digest_source;
std::string g_digest_hex;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  g_digest_source += j.dump();
  return j;
}

std::string to_hex(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

GroupPtr resolve_group(const std::string& name_or_file) {
  if (name_or_file.size() > 5 && name_or_file.substr(name_or_file.size() - 5) == ".json")
    return group_ref_from_json(load_json_file(name_or_file));
  return std::make_shared<const FiniteGroup>(FiniteGroup::builtin(name_or_file));
}

// A subgroup given either by permutation generators "(1 2)(3 4), (1 3)" or
// by comma-separated element names.
uint64_t resolve_subgroup(const FiniteGroup& g, const std::string& spec) {
  uint64_t seed = 0;
  if (spec.empty()) return g.subgroup_closure(0);
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);

  for (auto& t : tokens) {
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    if (t.empty() || t == "e") continue;
    bool found = false;
    for (uint16_t a = 0; a < g.order() && !found; ++a)
      if (g.element_name(a) == t) {
        seed |= uint64_t{1} << a;
        found = true;
      }
    // permutation spec: normalize through the cycle parser and retry
    if (!found && t.front() == '(') {
      std::size_t degree = 1;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (isdigit(static_cast<unsigned char>(t[i])))
          degree = std::max(degree, static_cast<std::size_t>(std::stoul(t.substr(i))));
      std::string normalized = cycle_string(parse_cycles(t, degree));
      for (uint16_t a = 0; a < g.order() && !found; ++a)
        if (g.element_name(a) == normalized) {
          seed |= uint64_t{1} << a;
          found = true;
        }
    }
    if (!found)
      throw ValidationError("subgroup: element \"" + t + "\" not found in " + g.name());
  }
  return g.subgroup_closure(seed);
}

int exit_code(const Report& r) {
  switch (r.overall()) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 2;
    default: return 3;
  }
}

int emit(Report r, const Options& opt) {
  r.inputs_digest = g_digest_hex = to_hex(digest(g_digest_source));
  if (opt.json)
    std::cout << report_to_json(r).dump(2) << "\n";
  else
    std::cout << report_to_text(r);
  return exit_code(r);
}

int emit_many(std::vector<Report> reports, const Options& opt) {
  g_digest_hex = to_hex(digest(g_digest_source));
  for (auto& r : reports) r.inputs_digest = g_digest_hex;
  if (opt.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    std::cout << arr.dump(2) << "\n";
  }
  int worst = 0;
  for (const auto& r : reports) {
    if (!opt.json) std::cout << report_to_text(r) << "\n";
    int code = exit_code(r);
    if (code == 2 || (code == 3 && worst == 0)) worst = code;
  }
  return worst;
}

WraithKind kind_of(const std::string& s) {
  if (s == "rel" || s == "relations") return WraithKind::Relations;
  if (s == "func" || s == "functions") return WraithKind::Functions;
  if (s == "bij" || s == "bijections") return WraithKind::Bijections;
  throw ValidationError("unknown kind \"" + s + "\" (use rel|func|bij)");
}

// Mirrors the acceptance suite's engine-soundness sampling.
Report nucleus_check(std::mt19937& rng, std::size_t rounds, std::size_t max_gens,
                     std::size_t max_covers, std::size_t budget) {
  Report r;
  r.title = "randomized nucleus/distributivity/entailment soundness";
  r.engine = "full+lazy";
  std::size_t bad_nucleus = 0, bad_dist = 0, bad_agree = 0;
  for (std::size_t round = 0; round < rounds; ++round) {
    std::uniform_int_distribution<std::size_t> gd(1, max_gens);
    std::size_t n = gd(rng);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    std::uniform_int_distribution<int> coin(0, 4);
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b)
        if (a != b && coin(rng) == 0) pairs.emplace_back(a, b);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    Preorder base = Preorder::closure_of(names, pairs);
    std::uniform_int_distribution<std::size_t> cd(0, max_covers);
    std::uniform_int_distribution<std::size_t> bit(0, n - 1);
    std::uniform_int_distribution<int> fs(0, 3);
    std::vector<CoverSpec> cs;
    for (std::size_t k = cd(rng); k > 0; --k) {
      Bitset target(n);
      for (int i = fs(rng); i > 0; --i) target.set(bit(rng));
      CoverSpec spec{target, {}};
      for (int f = fs(rng); f > 0; --f) {
        Bitset m = target;
        for (int i = 1 + fs(rng); i > 0; --i) m.set(bit(rng));
        spec.family.push_back(std::move(m));
      }
      cs.push_back(std::move(spec));
    }
    Site site(std::move(base), std::move(cs));
    const std::size_t L = site.lattice().size();
    std::uniform_int_distribution<uint32_t> el(0, static_cast<uint32_t>(L - 1));
    Bitset seed_set(L);
    seed_set.set(el(rng));
    seed_set.set(el(rng));
    FrameElement sat = saturate(site, seed_set);
    if (!seed_set.is_subset_of(sat.members) || saturate(site, sat.members) != sat) ++bad_nucleus;
    FrameElement a = frame_principal(site, el(rng));
    FrameElement b = frame_principal(site, el(rng));
    FrameElement c = frame_principal(site, el(rng));
    if (frame_meet(a, frame_join(b, c)) != frame_join(frame_meet(a, b), frame_meet(a, c)))
      ++bad_dist;
    std::uniform_int_distribution<uint32_t> md(0, (uint32_t{1} << n) - 1);
    auto bits = [&](uint32_t m) {
      Bitset bs(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((m >> i) & 1) bs.set(i);
      return bs;
    };
    Bitset elem = bits(md(rng));
    std::vector<Bitset> family;
    for (int f = fs(rng); f > 0; --f) family.push_back(bits(md(rng)));
    Bitset seeds(L);
    for (const auto& fm : family) {
      uint32_t m32 = 0;
      fm.for_each([&](std::size_t i) { m32 |= uint32_t{1} << i; });
      seeds.set(site.lattice().element_of(m32));
    }
    uint32_t e32 = 0;
    elem.for_each([&](std::size_t i) { e32 |= uint32_t{1} << i; });
    bool full = saturate(site, seeds).members.test(site.lattice().element_of(e32));
    if (entails(site, elem, family, {budget}).holds() != full) ++bad_agree;
  }
  r.add("nucleus-laws", bad_nucleus == 0, std::to_string(rounds) + " rounds");
  r.add("distributivity", bad_dist == 0);
  r.add("entails-agrees-with-full-engine", bad_agree == 0);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale workbench for locale presentations, group actions and Galois objects"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON reports");
  app.add_option("--engine", opt.engine, "full|lazy|auto")->default_val("auto");
  app.add_option("--budget", opt.budget, "lazy-engine node budget")->default_val(1'000'000);
  app.add_option("--max-group-order", opt.max_group_order, "subgroup enumeration bound")
      ->default_val(24);
  app.add_option("--seed", opt.seed, "seed for sampled property checks")->default_val(1);

  std::string group_name, subgroup_spec, cover_spec, file, kind = "func";
  std::size_t nx = 1, ny = 1, nz = 1, max_size = SIZE_MAX, rounds = 50, gens = 6, covers = 4;
  std::size_t object_index = 0;
  bool corrupt = false;

  auto* c_group = app.add_subcommand("group", "group utilities");
  auto* g_define = c_group->add_subcommand("define", "validate and print a group");
  g_define->add_option("--group", group_name)->required();

  auto* c_gset = app.add_subcommand("gset", "finite group actions");
  auto* gs_orbits = c_gset->add_subcommand("orbits", "orbit partition of an action");
  gs_orbits->add_option("--file", file, "gset JSON document");
  gs_orbits->add_option("--group", group_name, "builtin group (with --subgroup: coset action)");
  gs_orbits->add_option("--subgroup", subgroup_spec);

  auto* c_site = app.add_subcommand("site", "site categories");
  auto* s_atomic = c_site->add_subcommand("verify-atomic", "atomic-site axioms on tBG");
  s_atomic->add_option("--group", group_name)->required();

  auto* c_locale = app.add_subcommand("locale", "presented locales");
  auto* l_points = c_locale->add_subcommand("points", "enumerate points");
  l_points->add_option("--kind", kind, "rel|func|bij");
  l_points->add_option("--x", nx);
  l_points->add_option("--y", ny);
  l_points->add_option("--site", file, "site JSON document");
  auto* l_laws = c_locale->add_subcommand("verify-laws", "localic groupoid laws");
  l_laws->add_option("--kind", kind, "func|bij");
  l_laws->add_option("--x", nx);
  l_laws->add_option("--y", ny);
  l_laws->add_option("--z", nz);
  l_laws->add_flag("--corrupt-m", corrupt, "drop a composition term (negative control)");
  auto* l_nucleus = c_locale->add_subcommand("nucleus-check", "randomized engine soundness");
  l_nucleus->add_option("--rounds", rounds);
  l_nucleus->add_option("--gens", gens);
  l_nucleus->add_option("--covers", covers);

  auto* c_galois = app.add_subcommand("galois", "Galois objects and the fundamental theorem");
  auto* ga_check = c_galois->add_subcommand("check", "torsor certificate for G/H");
  ga_check->add_option("--group", group_name)->required();
  ga_check->add_option("--subgroup", subgroup_spec);
  auto* ga_closure = c_galois->add_subcommand("closure", "Galois closure of G/H");
  ga_closure->add_option("--group", group_name)->required();
  ga_closure->add_option("--subgroup", subgroup_spec);
  auto* ga_split = c_galois->add_subcommand("split", "Split(U) and its closure");
  ga_split->add_option("--group", group_name)->required();
  ga_split->add_option("--cover", cover_spec, "subgroup spec for U = G/H");
  auto* ga_fund = c_galois->add_subcommand("fundamental", "fundamental theorem on C_A sites");
  ga_fund->add_option("--group", group_name)->required();
  auto* ga_cofinal = c_galois->add_subcommand("cofinality", "Galois objects are cofinal");
  ga_cofinal->add_option("--group", group_name)->required();

  auto* c_chain = app.add_subcommand("chain", "towers of finite groups");
  auto* ch_factor = c_chain->add_subcommand("factor", "factor a top-stage action");
  ch_factor->add_option("--file", file)->required();
  ch_factor->add_option("--subgroup", subgroup_spec, "top-stage subgroup for G/H");
  auto* ch_colimit = c_chain->add_subcommand("colimit-site", "germ colimit of the tower");
  ch_colimit->add_option("--file", file)->required();
  auto* ch_verify = c_chain->add_subcommand("verify", "transitions and cofinal subgroups");
  ch_verify->add_option("--file", file)->required();

  auto* c_yoneda = app.add_subcommand("yoneda", "localic Yoneda lemma");
  auto* y_verify = c_yoneda->add_subcommand("verify", "phi/lambda round trips");
  y_verify->add_option("--group", group_name, "use tBG with its underlying functor");
  y_verify->add_option("--functor", file, "functor JSON document");
  y_verify->add_option("--object", object_index, "representing object index");

  auto* c_enrich = app.add_subcommand("enrich", "natural transformation locales");
  auto* e_points = c_enrich->add_subcommand("points", "points of nat locales");
  e_points->add_option("--kind", kind, "rel|func|bij");
  e_points->add_option("--functor", file)->required();
  auto* e_trans = c_enrich->add_subcommand("transitivity", "transitivity theorem");
  e_trans->add_option("--group", group_name)->required();
  e_trans->add_option("--max-size", max_size, "truncate to objects of at most this size");
  auto* e_lift = c_enrich->add_subcommand("lifting", "lifting lemma");
  e_lift->add_option("--group", group_name)->required();
  e_lift->add_option("--max-size", max_size, "truncate to objects of at most this size");

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 1; i < argc; ++i) {
    g_digest_source += argv[i];
    g_digest_source += '\0';
  }

  int code = 0;
  try {
    if (g_define->parsed()) {
      GroupPtr g = resolve_group(group_name);
      Report r;
      r.title = "group " + g->name();
      r.engine = "none";
      r.add("group-laws", true, "order " + std::to_string(g->order()));
      auto classes = g->subgroup_classes(opt.max_group_order);
      r.add("subgroup-classes", true, std::to_string(classes.size()) + " classes");
      if (opt.json) {
        r.inputs_digest = to_hex(digest(g_digest_source));
        json j = report_to_json(r);
        j["group"] = group_to_json(*g);
        std::cout << j.dump(2) << "\n";
      } else {
        code = emit(r, opt);
      }
    } else if (gs_orbits->parsed()) {
      GSet x = file.empty()
                   ? GSet::cosets(resolve_group(group_name),
                                  resolve_subgroup(*resolve_group(group_name), subgroup_spec))
                   : gset_from_json(load_json_file(file));
      Report r;
      r.title = "orbits of a " + x.group()->name() + "-set on " + std::to_string(x.size()) +
                " points";
      r.engine = "none";
      auto orbits = x.orbits();
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        std::string members;
        for (auto p : orbits[i]) members += (members.empty() ? "" : ",") + x.point_name(p);
        r.add("orbit-" + std::to_string(i), true, members);
      }
      r.notes.push_back(x.is_transitive() ? "transitive" : "not transitive");
      code = emit(r, opt);
    } else if (s_atomic->parsed()) {
      SiteCategory c = build_tbg_site(resolve_group(group_name), opt.max_group_order);
      code = emit(verify_atomic_site(c), opt);
    } else if (l_points->parsed()) {
      std::size_t closure_added = 0;
      Site site = file.empty() ? wraith_site(kind_of(kind), nx, ny).site
                               : site_from_json(load_json_file(file), &closure_added);
      auto points = enumerate_points(site);
      Report r;
      r.title = file.empty() ? ("points of l" + std::string(to_string(kind_of(kind))) + "(" +
                                std::to_string(nx) + "," + std::to_string(ny) + ")")
                             : ("points of the site in " + file);
      r.engine = "full";
      if (closure_added)
        r.notes.push_back("base preorder closed on load (" + std::to_string(closure_added) +
                          " pairs added)");
      r.add("point-count", true, std::to_string(points.size()) + " points");
      if (opt.json) {
        r.inputs_digest = to_hex(digest(g_digest_source));
        json j = report_to_json(r);
        json pts = json::array();
        for (const auto& p : points) pts.push_back(point_to_json(site, p));
        j["points"] = std::move(pts);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << report_to_text(r);
        for (const auto& p : points) {
          std::string line = "point:";
          p.accepted.for_each([&](std::size_t i) { line += " " + site.base().name(i); });
          std::cout << line << "\n";
        }
      }
    } else if (l_laws->parsed()) {
      code = emit(verify_groupoid_laws(kind_of(kind), nx, ny, nz, corrupt), opt);
    } else if (l_nucleus->parsed()) {
      std::mt19937 rng(static_cast<uint32_t>(opt.seed));
      code = emit(nucleus_check(rng, rounds, gens, covers, opt.budget), opt);
    } else if (ga_check->parsed()) {
      GroupPtr g = resolve_group(group_name);
      GSet x = GSet::cosets(g, resolve_subgroup(*g, subgroup_spec));
      auto cert = is_galois(x);
      Report r;
      r.title = "Galois certificate for a " + g->name() + "-set of size " +
                std::to_string(x.size());
      r.engine = "none";
      r.add("connected", cert.connected);
      // "not Galois" is a finding, not a failure of the tool
      r.add("certificate", true,
            cert.galois ? "Galois, |Aut| = " + std::to_string(cert.aut_order)
                        : "not Galois, |Aut| = " + std::to_string(cert.aut_order) + " (" +
                              cert.refutation + ")");
      r.notes.push_back("a* recorded at base point " + x.point_name(cert.base_point));
      if (opt.json) {
        r.inputs_digest = to_hex(digest(g_digest_source));
        json j = report_to_json(r);
        j["certificate"] = {{"galois", cert.galois},
                            {"aut_order", cert.aut_order},
                            {"astar", cert.astar},
                            {"astar_bijective", cert.astar_bijective},
                            {"torsor_bijective", cert.torsor_bijective},
                            {"aut_maps", cert.aut_maps}};
        std::cout << j.dump(2) << "\n";
      } else {
        code = emit(r, opt);
      }
    } else if (ga_closure->parsed()) {
      GroupPtr g = resolve_group(group_name);
      GSet x = GSet::cosets(g, resolve_subgroup(*g, subgroup_spec));
      auto res = galois_closure(x);
      Report r;
      r.title = "Galois closure of a " + g->name() + "-set of size " + std::to_string(x.size());
      r.engine = "none";
      r.add("closure-is-galois", res.certificate.galois,
            "|A| = " + std::to_string(res.closure.size()));
      bool proj_ok = true;
      for (uint16_t comp = 0; comp < x.size(); ++comp)
        if (res.projections[comp][res.base_point] != comp) proj_ok = false;
      r.add("projections-hit-components", proj_ok);
      code = emit(r, opt);
    } else if (ga_split->parsed()) {
      GroupPtr g = resolve_group(group_name);
      SiteCategory tbg = build_tbg_site(g, opt.max_group_order);
      GSet u = GSet::cosets(g, resolve_subgroup(*g, cover_spec));
      code = emit(verify_split_eq(tbg, u), opt);
    } else if (ga_fund->parsed()) {
      GroupPtr g = resolve_group(group_name);
      SiteCategory tbg = build_tbg_site(g, opt.max_group_order);
      std::vector<Report> reports;
      for (std::size_t a = 0; a < tbg.objects.size(); ++a) {
        if (!is_galois(tbg.objects[a]).galois) continue;
        auto ca = c_a_subcategory(tbg, a);
        Report r = verify_fundamental_discrete(ca.category);
        r.title += " on C_A, A = " + tbg.object_name(a);
        reports.push_back(std::move(r));
      }
      code = emit_many(reports, opt);
    } else if (ga_cofinal->parsed()) {
      SiteCategory tbg = build_tbg_site(resolve_group(group_name), opt.max_group_order);
      code = emit(galois_cofinality(tbg), opt);
    } else if (ch_factor->parsed()) {
      GroupChain chain = chain_from_json(load_json_file(file));
      GroupPtr top = chain.stage(chain.length() - 1);
      GSet x = GSet::cosets(top, resolve_subgroup(*top, subgroup_spec));
      auto res = factor_transitive(chain, x);
      Report r = res.checks;
      r.title = "factoring a transitive " + top->name() + "-set of size " +
                std::to_string(x.size());
      r.add("least-stage", true, "stage " + std::to_string(res.stage + 1));
      code = emit(r, opt);
    } else if (ch_colimit->parsed()) {
      GroupChain chain = chain_from_json(load_json_file(file));
      ColimitSite c = colimit_site(chain);
      Report r = c.checks;
      r.add("germ-classes", true, std::to_string(c.germs.size()) + " classes");
      for (const auto& germ : c.germs)
        r.notes.push_back("germ: first stage " + std::to_string(germ.first_stage + 1) +
                          ", size " + std::to_string(germ.at_top.size()));
      code = emit(r, opt);
    } else if (ch_verify->parsed()) {
      GroupChain chain = chain_from_json(load_json_file(file));
      std::vector<Report> reports;
      for (std::size_t i = 0; i + 1 < chain.length(); ++i)
        reports.push_back(verify_bt_star(chain.stage(i + 1), chain.transition(i), chain.stage(i)));
      reports.push_back(cofinal_subgroups(chain, opt.max_group_order));
      code = emit_many(reports, opt);
    } else if (y_verify->parsed()) {
      if (!group_name.empty()) {
        SiteCategory tbg = build_tbg_site(resolve_group(group_name), opt.max_group_order);
        SiteFunctor sf = functor_of_site(tbg);
        uint32_t a = static_cast<uint32_t>(tbg.objects.size() - 1);
        std::vector<Report> reports{yoneda_verify(sf.cat, a, sf.underlying),
                                    yoneda_auto_verify(sf.cat, a, a)};
        code = emit_many(reports, opt);
      } else {
        FunctorData f = functor_from_json(load_json_file(file));
        code = emit(yoneda_verify(f.cat, static_cast<uint32_t>(object_index), f), opt);
      }
    } else if (e_points->parsed()) {
      FunctorData f = functor_from_json(load_json_file(file));
      NatLocale l = nat_locale(kind_of(kind), f, f);
      auto points = enumerate_points(l.site);
      Report r;
      r.title = "points of the natural-" + std::string(to_string(kind_of(kind))) + " locale";
      r.engine = "full";
      r.add("point-count", true, std::to_string(points.size()) + " points");
      code = emit(r, opt);
    } else if (e_trans->parsed() || e_lift->parsed()) {
      SiteCategory tbg = build_tbg_site(resolve_group(group_name), opt.max_group_order);
      EnrichOptions eopt{engine_choice(opt.engine), opt.budget};
      eopt.max_object_size = max_size;
      Report r = e_trans->parsed() ? verify_transitivity(tbg, eopt) : verify_lifting(tbg, eopt);
      code = emit(r, opt);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return 2;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "wall-time: " << ms << " ms\n";
  return code;
}

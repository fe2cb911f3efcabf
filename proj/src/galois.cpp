#include "locgal/galois.hpp"

#include <algorithm>
#include <map>

#include "locgal/error.hpp"

namespace locgal {

GaloisCertificate is_galois(const GSet& x) {
  GaloisCertificate c;
  c.object_size = x.size();
  if (x.size() == 0) {
    c.refutation = "object is empty";
    return c;
  }
  c.connected = x.is_transitive();
  if (!c.connected) {
    c.refutation = "object is not connected (" + std::to_string(x.orbits().size()) + " orbits)";
    return c;
  }
  auto aut = automorphism_group(x);
  c.aut_maps = aut.maps;
  c.aut_order = aut.maps.size();

  c.torsor_bijective = true;
  for (uint16_t p = 0; p < x.size() && c.torsor_bijective; ++p) {
    std::vector<bool> hit(x.size(), false);
    for (const auto& m : aut.maps) {
      if (hit[m[p]]) {
        c.torsor_bijective = false;
        break;
      }
      hit[m[p]] = true;
    }
    if (c.torsor_bijective && c.aut_order != x.size()) c.torsor_bijective = false;
  }

  c.base_point = 0;
  for (const auto& m : aut.maps) c.astar.push_back(m[0]);
  c.astar_bijective = is_bijective(c.astar, x.size());

  if (c.torsor_bijective != c.astar_bijective)
    throw Error("is_galois: torsor and a* witnesses disagree on a connected object");

  c.galois = c.torsor_bijective;
  if (!c.galois)
    c.refutation = "not an Aut(A)-torsor: |Aut| = " + std::to_string(c.aut_order) +
                   ", |A| = " + std::to_string(x.size());
  return c;
}

namespace {

// Orbit of a tuple under the componentwise action of factor G-sets.
// factors[i] supplies the action for component i.
GSet tuple_orbit(const GroupPtr& group, const std::vector<const GSet*>& factors,
                 const std::vector<uint16_t>& start, uint16_t* base_index) {
  std::map<std::vector<uint16_t>, uint16_t> index;
  std::vector<std::vector<uint16_t>> tuples{start};
  index[start] = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    auto t = tuples[i];
    for (uint16_t g = 0; g < group->order(); ++g) {
      std::vector<uint16_t> s(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) s[k] = factors[k]->act(g, t[k]);
      if (index.emplace(s, static_cast<uint16_t>(tuples.size())).second) tuples.push_back(s);
    }
  }
  // Sort tuples for a canonical carrier ordering.
  std::vector<std::vector<uint16_t>> sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::vector<uint16_t>, uint16_t> pos;
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<uint16_t>(i);

  std::vector<uint16_t> act(group->order() * sorted.size());
  for (uint16_t g = 0; g < group->order(); ++g)
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      std::vector<uint16_t> s(sorted[i].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = factors[k]->act(g, sorted[i][k]);
      act[g * sorted.size() + i] = pos.at(s);
    }
  std::vector<std::string> names;
  for (const auto& t : sorted) {
    std::string n = "(";
    for (std::size_t k = 0; k < t.size(); ++k) n += (k ? "," : "") + std::to_string(t[k]);
    names.push_back(n + ")");
  }
  *base_index = pos.at(start);
  return GSet(group, sorted.size(), std::move(act), std::move(names));
}

}  // namespace

ClosureResult galois_closure(const GSet& x) {
  if (x.size() == 0) throw ValidationError("galois_closure: empty object");
  if (!x.is_transitive()) throw ValidationError("galois_closure: object is not connected");

  std::vector<uint16_t> start(x.size());
  for (uint16_t i = 0; i < x.size(); ++i) start[i] = i;
  std::vector<const GSet*> factors(x.size(), &x);

  ClosureResult r{GSet::trivial(x.group(), 1), 0, {}, {}};
  uint16_t base = 0;
  r.closure = tuple_orbit(x.group(), factors, start, &base);
  r.base_point = base;

  // pi_x reads off component x; recover components from the tuple names is
  // fragile, so recompute the sorted tuple list the same way.
  // The closure's point p corresponds to the tuple g.start for any g with
  // act(g, base) = p; components are then act(g, x).
  std::vector<uint16_t> witness_g(r.closure.size(), 0);
  for (uint16_t g = 0; g < x.group()->order(); ++g)
    witness_g[r.closure.act(g, r.base_point)] = g;
  r.projections.assign(x.size(), std::vector<uint16_t>(r.closure.size()));
  for (uint16_t p = 0; p < r.closure.size(); ++p)
    for (uint16_t comp = 0; comp < x.size(); ++comp)
      r.projections[comp][p] = x.act(witness_g[p], comp);

  for (uint16_t comp = 0; comp < x.size(); ++comp) {
    if (!is_equivariant(r.closure, x, r.projections[comp]))
      throw Error("galois_closure: projection is not equivariant");
    if (r.projections[comp][r.base_point] != comp)
      throw Error("galois_closure: projection does not hit its component at the base point");
  }

  r.certificate = is_galois(r.closure);
  if (!r.certificate.galois)
    throw Error("galois_closure: closure failed the torsor check: " + r.certificate.refutation);
  return r;
}

bool split_by(const GSet& u, const GSet& x) {
  if (u.size() == 0) throw ValidationError("split_by: empty U is not a cover");
  if (!u.group()->same_table(*x.group())) throw ValidationError("split_by: group mismatch");
  uint64_t ker = x.action_kernel();
  for (const auto& orbit : u.orbits()) {
    uint64_t stab = u.stabilizer(orbit.front());
    if (stab & ~ker) return false;
  }
  return true;
}

std::vector<std::size_t> split_object_ids(const SiteCategory& tbg, const GSet& u) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < tbg.objects.size(); ++i)
    if (split_by(u, tbg.objects[i])) ids.push_back(i);
  return ids;
}

SiteCategory split_category(const SiteCategory& tbg, const GSet& u) {
  return tbg.full_subcategory(split_object_ids(tbg, u));
}

GSet split_closure(const SiteCategory& tbg, const GSet& u) {
  auto ids = split_object_ids(tbg, u);
  if (ids.empty()) throw Error("split_closure: no split objects (the terminal object is always split)");
  std::vector<const GSet*> factors;
  std::vector<uint16_t> start;
  for (std::size_t i : ids) {
    factors.push_back(&tbg.objects[i]);
    start.push_back(0);
  }
  uint16_t base = 0;
  return tuple_orbit(tbg.group, factors, start, &base);
}

namespace {

// A G-set reinterpreted over the quotient by a normal subgroup contained in
// its kernel.
GSet over_quotient(const GSet& x, const GroupPtr& q, const Quotient& quot) {
  // section: least preimage per coset
  std::vector<uint16_t> section(q->order(), 0xffff);
  for (uint16_t g = 0; g < x.group()->order(); ++g)
    if (section[quot.projection[g]] == 0xffff) section[quot.projection[g]] = g;
  std::vector<uint16_t> act(q->order() * x.size());
  for (uint16_t c = 0; c < q->order(); ++c)
    for (uint16_t p = 0; p < x.size(); ++p) act[c * x.size() + p] = x.act(section[c], p);
  return GSet(q, x.size(), std::move(act));
}

}  // namespace

Report verify_split_eq(const SiteCategory& tbg, const GSet& u) {
  Report r;
  r.title = "Split(U) closure and quotient equivalence over " + tbg.group->name();
  r.engine = "none";

  auto split_u = split_object_ids(tbg, u);
  GSet a = split_closure(tbg, u);
  auto cert = is_galois(a);
  r.add("closure-is-galois", cert.galois, cert.galois ? "" : cert.refutation);

  auto split_a = split_object_ids(tbg, a);
  r.add("split-sets-equal", split_u == split_a,
        "Split(U): " + std::to_string(split_u.size()) + " objects, Split(A): " +
            std::to_string(split_a.size()));

  // Split(A) should be tB(G/N) for N the kernel of A.
  uint64_t n_mask = a.action_kernel();
  auto quot = quotient_group(*tbg.group, n_mask);
  auto q = std::make_shared<const FiniteGroup>(quot.group);
  SiteCategory tbq = build_tbg_site(q, FiniteGroup::kMaxOrder);

  bool factor_ok = true;
  for (std::size_t i : split_a)
    if (n_mask & ~tbg.objects[i].action_kernel()) factor_ok = false;
  r.add("split-objects-factor-through-quotient", factor_ok);

  std::vector<GSet> images;
  for (std::size_t i : split_a) images.push_back(over_quotient(tbg.objects[i], q, quot));

  bool ff = true;
  std::string witness;
  for (std::size_t i = 0; i < split_a.size() && ff; ++i)
    for (std::size_t j = 0; j < split_a.size() && ff; ++j) {
      std::size_t have = tbg.hom_count(split_a[i], split_a[j]);
      std::size_t want = hom_gsets(images[i], images[j]).size();
      if (have != want) {
        ff = false;
        witness = "hom(" + tbg.object_name(split_a[i]) + ", " + tbg.object_name(split_a[j]) +
                  "): " + std::to_string(have) + " vs " + std::to_string(want);
      }
    }
  r.add("fully-faithful-hom-counts", ff, witness);

  bool es = true;
  witness.clear();
  for (std::size_t t = 0; t < tbq.objects.size() && es; ++t) {
    bool found = false;
    for (const auto& img : images)
      if (isomorphic(img, tbq.objects[t])) {
        found = true;
        break;
      }
    if (!found) {
      es = false;
      witness = "no split object maps to " + tbq.object_name(t);
    }
  }
  r.add("essentially-surjective", es, witness);
  return r;
}

CASubcategory c_a_subcategory(const SiteCategory& tbg, std::size_t a_index) {
  const GSet& a = tbg.objects[a_index];
  auto cert = is_galois(a);
  if (!cert.galois)
    throw ValidationError("c_a_subcategory: object is not Galois: " + cert.refutation);

  CASubcategory out;
  out.checks.title = "C_A for A = " + tbg.object_name(a_index);
  out.checks.engine = "none";

  // a* : [A,X] -> FX, h |-> F(h)(a) with a the base point 0 of A.
  bool agree = true;
  std::string witness;
  for (std::size_t x = 0; x < tbg.objects.size(); ++x) {
    const auto& hom = tbg.homs[a_index][x];
    std::vector<uint16_t> astar;
    for (const auto& f : hom) astar.push_back(f[0]);
    std::sort(astar.begin(), astar.end());
    bool bij = astar.size() == tbg.objects[x].size() &&
               std::adjacent_find(astar.begin(), astar.end()) == astar.end();
    bool nonempty = !hom.empty();
    if (bij != nonempty) {
      agree = false;
      witness = "object " + tbg.object_name(x);
    }
    if (bij) out.object_ids.push_back(x);
  }
  out.checks.add("astar-bijective-iff-arrow-exists", agree, witness);
  out.category = tbg.full_subcategory(out.object_ids);
  return out;
}

Report verify_fundamental_discrete(const SiteCategory& c) {
  Report r;
  r.title = "discrete fundamental theorem";
  r.engine = "none";
  r.notes.push_back("convention: G = Aut(A)^op acts on [A,X] by precomposition");

  auto g = diagram_of(c);
  if (!g.initial) {
    r.add("representable", false, "Gamma_F has no initial object");
    return r;
  }
  auto [a_obj, a_pt] = g.objects[*g.initial];
  r.add("representable", true,
        "initial object " + g.object_name(c, *g.initial));

  // Prop basica: every arrow into A is an isomorphism.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t s = 0; s < c.objects.size() && ok; ++s)
      for (const auto& f : c.homs[s][a_obj])
        if (!is_bijective(f, c.objects[a_obj].size())) {
          ok = false;
          witness = "non-iso arrow " + c.object_name(s) + " -> A";
          break;
        }
    r.add("arrows-into-A-are-isos", ok, witness);
  }

  // Aut(A) from the category's own hom-set.
  std::vector<std::vector<uint16_t>> aut = c.homs[a_obj][a_obj];
  std::sort(aut.begin(), aut.end());
  const std::size_t n_aut = aut.size();
  std::map<std::vector<uint16_t>, uint16_t> aut_index;
  for (std::size_t i = 0; i < n_aut; ++i) aut_index[aut[i]] = static_cast<uint16_t>(i);

  std::vector<std::vector<uint16_t>> op_table(n_aut, std::vector<uint16_t>(n_aut));
  bool comp_closed = true;
  for (std::size_t i = 0; i < n_aut && comp_closed; ++i)
    for (std::size_t j = 0; j < n_aut; ++j) {
      std::vector<uint16_t> comp(aut[i].size());
      for (std::size_t p = 0; p < comp.size(); ++p) comp[p] = aut[j][aut[i][p]];  // opposite
      auto it = aut_index.find(comp);
      if (it == aut_index.end()) {
        comp_closed = false;
        break;
      }
      op_table[i][j] = it->second;
    }
  r.add("aut-A-closed-under-composition", comp_closed);
  if (!comp_closed) return r;
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table("AutA_op", op_table));

  // G-sets [A,X] under precomposition.
  std::vector<GSet> lifted;
  std::vector<std::vector<std::vector<uint16_t>>> homAX;  // sorted arrow tables per X
  bool act_ok = true;
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    auto hom = c.homs[a_obj][x];
    std::sort(hom.begin(), hom.end());
    std::map<std::vector<uint16_t>, uint16_t> idx;
    for (std::size_t i = 0; i < hom.size(); ++i) idx[hom[i]] = static_cast<uint16_t>(i);
    std::vector<uint16_t> act(n_aut * hom.size());
    for (std::size_t h = 0; h < n_aut && act_ok; ++h)
      for (std::size_t i = 0; i < hom.size(); ++i) {
        std::vector<uint16_t> comp(c.objects[a_obj].size());
        for (std::size_t p = 0; p < comp.size(); ++p) comp[p] = hom[i][aut[h][p]];
        auto it = idx.find(comp);
        if (it == idx.end()) {
          act_ok = false;
          break;
        }
        act[h * hom.size() + i] = it->second;
      }
    if (!act_ok) break;
    lifted.emplace_back(group, hom.size(), std::move(act));
    homAX.push_back(std::move(hom));
  }
  r.add("hom-sets-carry-G-action", act_ok);
  if (!act_ok) return r;

  // Thm galois (a): transitivity of the action on every [A,X].
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < lifted.size(); ++x)
      if (!lifted[x].is_transitive()) {
        ok = false;
        witness = "[A, " + c.object_name(x) + "]";
        break;
      }
    r.add("hom-action-transitive", ok, witness);
  }

  // Thm galois (b): every arrow x: A -> X is the categorical quotient of A
  // by {h | xh = x}: the fibers of x must be exactly the orbits of that
  // subgroup on the carrier of A.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < c.objects.size() && ok; ++x)
      for (const auto& arrow : homAX[x]) {
        // {h | arrow . h = arrow}
        std::vector<std::size_t> stab;
        for (std::size_t h = 0; h < n_aut; ++h) {
          bool fixes = true;
          for (std::size_t t = 0; t < arrow.size() && fixes; ++t)
            if (arrow[aut[h][t]] != arrow[t]) fixes = false;
          if (fixes) stab.push_back(h);
        }
        // orbits of that subgroup on A's carrier
        std::vector<int> orb(c.objects[a_obj].size(), -1);
        int n_orb = 0;
        for (uint16_t p = 0; p < orb.size(); ++p) {
          if (orb[p] >= 0) continue;
          std::vector<uint16_t> stack{p};
          orb[p] = n_orb;
          while (!stack.empty()) {
            uint16_t q = stack.back();
            stack.pop_back();
            for (std::size_t h : stab) {
              uint16_t img = aut[h][q];
              if (orb[img] < 0) {
                orb[img] = n_orb;
                stack.push_back(img);
              }
            }
          }
          ++n_orb;
        }
        // fibers of the arrow must be exactly those orbits
        for (uint16_t p = 0; p < arrow.size() && ok; ++p)
          for (uint16_t q = 0; q < arrow.size() && ok; ++q)
            if ((arrow[p] == arrow[q]) != (orb[p] == orb[q])) ok = false;
        if (static_cast<std::size_t>(n_orb) != c.objects[x].size()) ok = false;
        if (!ok) {
          witness = "arrow A -> " + c.object_name(x);
          break;
        }
      }
    r.add("arrows-are-quotients-by-stabilizer", ok, witness);
  }

  // muF full + faithful: postcomposition [A,X] -> [A,Y] realizes hom(X,Y)
  // bijectively onto the equivariant maps.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < c.objects.size() && ok; ++x)
      for (std::size_t y = 0; y < c.objects.size() && ok; ++y) {
        std::vector<std::vector<uint16_t>> images;
        for (const auto& f : c.homs[x][y]) {
          std::vector<uint16_t> m(homAX[x].size());
          for (std::size_t i = 0; i < homAX[x].size(); ++i) {
            std::vector<uint16_t> comp(homAX[x][i].size());
            for (std::size_t p = 0; p < comp.size(); ++p) comp[p] = f[homAX[x][i][p]];
            auto it = std::lower_bound(homAX[y].begin(), homAX[y].end(), comp);
            if (it == homAX[y].end() || *it != comp) {
              ok = false;
              break;
            }
            m[i] = static_cast<uint16_t>(it - homAX[y].begin());
          }
          if (!ok) break;
          if (!is_equivariant(lifted[x], lifted[y], m)) ok = false;
          images.push_back(std::move(m));
        }
        if (!ok) {
          witness = "muF on hom(" + c.object_name(x) + ", " + c.object_name(y) + ")";
          break;
        }
        std::sort(images.begin(), images.end());
        bool faithful = std::adjacent_find(images.begin(), images.end()) == images.end();
        std::size_t want = hom_gsets(lifted[x], lifted[y]).size();
        if (!faithful || images.size() != want) {
          ok = false;
          witness = "hom(" + c.object_name(x) + ", " + c.object_name(y) + "): " +
                    std::to_string(c.homs[x][y].size()) + " arrows vs " + std::to_string(want) +
                    " equivariant maps";
        }
      }
    r.add("muF-full-and-faithful", ok, witness);
  }

  // muF essentially surjective onto tB(G).
  {
    SiteCategory tbg = build_tbg_site(group, FiniteGroup::kMaxOrder);
    bool ok = true;
    std::string witness;
    for (std::size_t t = 0; t < tbg.objects.size(); ++t) {
      bool found = false;
      for (const auto& lx : lifted)
        if (isomorphic(lx, tbg.objects[t])) {
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        witness = "no object lifts to " + tbg.object_name(t);
        break;
      }
    }
    r.add("muF-essentially-surjective", ok, witness);
  }
  return r;
}

Report galois_cofinality(const SiteCategory& tbg) {
  Report r;
  r.title = "Galois cofinality in tB(" + tbg.group->name() + ")";
  r.engine = "none";

  std::vector<std::size_t> galois_ids;
  for (std::size_t i = 0; i < tbg.objects.size(); ++i)
    if (is_galois(tbg.objects[i]).galois) galois_ids.push_back(i);

  // Every (X, x) receives an arrow from a Galois (A, a).
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < tbg.objects.size() && ok; ++i) {
      auto closure = galois_closure(tbg.objects[i]);
      for (uint16_t x = 0; x < tbg.objects[i].size(); ++x) {
        if (closure.projections[x][closure.base_point] != x ||
            !is_equivariant(closure.closure, tbg.objects[i], closure.projections[x])) {
          ok = false;
          witness = "(X,x) = (" + tbg.object_name(i) + ", " + std::to_string(x) + ")";
          break;
        }
      }
    }
    r.add("arrows-from-galois-objects", ok, witness);
  }

  // Union: X lies in cSplit(closure(X)).
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < tbg.objects.size() && ok; ++i) {
      auto closure = galois_closure(tbg.objects[i]);
      if (!split_by(closure.closure, tbg.objects[i])) {
        ok = false;
        witness = tbg.object_name(i);
      }
    }
    r.add("union-covers-tbg", ok, witness);
  }

  // Filtered: two Galois objects admit a common Galois refinement.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i : galois_ids)
      for (std::size_t j : galois_ids) {
        std::vector<const GSet*> factors{&tbg.objects[i], &tbg.objects[j]};
        std::vector<uint16_t> start{0, 0};
        uint16_t base = 0;
        GSet comp = tuple_orbit(tbg.group, factors, start, &base);
        auto refined = galois_closure(comp);
        if (hom_gsets(refined.closure, tbg.objects[i]).empty() ||
            hom_gsets(refined.closure, tbg.objects[j]).empty()) {
          ok = false;
          witness = tbg.object_name(i) + ", " + tbg.object_name(j);
        }
      }
    r.add("galois-system-filtered", ok, witness);
  }

  // Minimal Galois cover per object.
  for (std::size_t i = 0; i < tbg.objects.size(); ++i) {
    std::size_t best = SIZE_MAX;
    std::string best_name = "none";
    for (std::size_t a : galois_ids)
      if (!tbg.homs[a][i].empty() && tbg.objects[a].size() < best) {
        best = tbg.objects[a].size();
        best_name = tbg.object_name(a);
      }
    r.notes.push_back("minimal Galois cover of " + tbg.object_name(i) + ": " + best_name);
    r.add("has-galois-cover-" + std::to_string(i), best != SIZE_MAX, best_name);
  }
  return r;
}

}  // namespace locgal

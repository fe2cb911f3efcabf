#include "locgal/chain.hpp"

#include <algorithm>

#include "locgal/error.hpp"

namespace locgal {

namespace {
const char* kTruncationNote =
    "finite truncation of a prodiscrete tower: statements are verified for the "
    "given stages only";
}

GroupChain::GroupChain(std::vector<GroupPtr> stages, std::vector<std::vector<uint16_t>> transitions)
    : stages_(std::move(stages)), transitions_(std::move(transitions)) {
  if (stages_.empty()) throw ValidationError("chain: no stages");
  if (transitions_.size() + 1 != stages_.size())
    throw ValidationError("chain: need exactly one transition per adjacent stage pair");
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    const auto& src = *stages_[i + 1];
    const auto& dst = *stages_[i];
    if (!is_homomorphism(src, dst, t))
      throw ValidationError("chain: transition " + std::to_string(i + 1) + " -> " +
                            std::to_string(i) + " is not a homomorphism");
    std::vector<bool> hit(dst.order(), false);
    for (auto v : t) hit[v] = true;
    for (uint16_t a = 0; a < dst.order(); ++a)
      if (!hit[a])
        throw ValidationError("chain: transition misses element " + dst.element_name(a) + " of " +
                              dst.name());
  }
}

std::vector<uint16_t> GroupChain::composite(std::size_t from, std::size_t to) const {
  if (to > from || from >= stages_.size()) throw ValidationError("chain: bad composite request");
  std::vector<uint16_t> map(stages_[from]->order());
  for (uint16_t a = 0; a < map.size(); ++a) map[a] = a;
  for (std::size_t i = from; i > to; --i) {
    const auto& t = transitions_[i - 1];
    for (auto& v : map) v = t[v];
  }
  return map;
}

std::string GroupChain::describe() const {
  std::string out = stages_[0]->name();
  for (std::size_t i = 1; i < stages_.size(); ++i) out += " <- " + stages_[i]->name();
  return out;
}

GSet restrict_along(const GroupPtr& g, const std::vector<uint16_t>& t, const GSet& x) {
  if (t.size() != g->order()) throw ValidationError("restrict_along: map size mismatch");
  if (!is_homomorphism(*g, *x.group(), t))
    throw ValidationError("restrict_along: map is not a homomorphism");
  std::vector<bool> hit(x.group()->order(), false);
  for (auto v : t) hit[v] = true;
  for (uint16_t a = 0; a < x.group()->order(); ++a)
    if (!hit[a])
      throw ValidationError("restrict_along: not surjective, misses " +
                            x.group()->element_name(a));
  return x.restricted_along(g, t);
}

Report verify_bt_star(const GroupPtr& g, const std::vector<uint16_t>& t, const GroupPtr& h) {
  Report r;
  r.title = "B(t)* for " + g->name() + " ->> " + h->name();
  r.engine = "none";
  r.notes.push_back(kTruncationNote);

  SiteCategory tbh = build_tbg_site(h, FiniteGroup::kMaxOrder);
  std::vector<GSet> restricted;
  bool transitive_ok = true;
  std::string witness;
  for (std::size_t i = 0; i < tbh.objects.size(); ++i) {
    GSet rx = restrict_along(g, t, tbh.objects[i]);
    if (!rx.is_transitive()) {
      transitive_ok = false;
      witness = tbh.object_name(i);
    }
    restricted.push_back(std::move(rx));
  }
  r.add("restriction-preserves-transitivity", transitive_ok, witness);

  bool ff = true;
  witness.clear();
  for (std::size_t i = 0; i < tbh.objects.size() && ff; ++i)
    for (std::size_t j = 0; j < tbh.objects.size() && ff; ++j) {
      std::size_t before = tbh.hom_count(i, j);
      std::size_t after = hom_gsets(restricted[i], restricted[j]).size();
      if (before != after) {
        ff = false;
        witness = "hom(" + tbh.object_name(i) + ", " + tbh.object_name(j) + "): " +
                  std::to_string(before) + " vs " + std::to_string(after);
      }
    }
  r.add("restriction-full-and-faithful", ff, witness);
  return r;
}

ColimitSite colimit_site(const GroupChain& chain) {
  ColimitSite out;
  out.checks.title = "colimit site of " + chain.describe();
  out.checks.engine = "none";
  out.checks.notes.push_back(kTruncationNote);

  const std::size_t top = chain.length() - 1;
  for (std::size_t s = 0; s < chain.length(); ++s)
    out.stage_sites.push_back(build_tbg_site(chain.stage(s), FiniteGroup::kMaxOrder));

  out.germ_of.resize(chain.length());
  for (std::size_t s = 0; s < chain.length(); ++s) {
    auto to_top = chain.composite(top, s);
    for (std::size_t i = 0; i < out.stage_sites[s].objects.size(); ++i) {
      GSet pushed = s == top ? out.stage_sites[s].objects[i]
                             : restrict_along(chain.stage(top), to_top,
                                              out.stage_sites[s].objects[i]);
      std::size_t found = out.germs.size();
      for (std::size_t k = 0; k < out.germs.size(); ++k)
        if (isomorphic(out.germs[k].at_top, pushed)) {
          found = k;
          break;
        }
      if (found == out.germs.size()) out.germs.push_back({s, i, std::move(pushed)});
      out.germ_of[s].push_back(found);
    }
  }

  // Stagewise inclusions are full and faithful.
  bool ff = true;
  std::string witness;
  for (std::size_t s = 0; s + 1 < chain.length() && ff; ++s) {
    Report stage_report =
        verify_bt_star(chain.stage(s + 1), chain.transition(s), chain.stage(s));
    if (!stage_report.all_passed()) {
      ff = false;
      witness = "transition " + std::to_string(s + 1) + " -> " + std::to_string(s);
    }
  }
  out.checks.add("inclusions-full-and-faithful", ff, witness);

  // A linear chain is trivially filtered; verify the germ maps compose.
  bool functorial = true;
  witness.clear();
  for (std::size_t s = 0; s + 1 < chain.length() && functorial; ++s) {
    auto t = chain.transition(s);
    for (std::size_t i = 0; i < out.stage_sites[s].objects.size(); ++i) {
      GSet stepped = restrict_along(chain.stage(s + 1), t, out.stage_sites[s].objects[i]);
      std::size_t germ_direct = out.germ_of[s][i];
      // find the stepped object's germ at stage s+1
      std::size_t found = SIZE_MAX;
      for (std::size_t j = 0; j < out.stage_sites[s + 1].objects.size(); ++j)
        if (isomorphic(out.stage_sites[s + 1].objects[j], stepped)) {
          found = out.germ_of[s + 1][j];
          break;
        }
      if (found != germ_direct) {
        functorial = false;
        witness = "stage " + std::to_string(s) + " object " + std::to_string(i);
        break;
      }
    }
  }
  out.checks.add("germ-equality-functorial", functorial, witness);
  out.checks.add("union-filtered", true, "linear chain");
  return out;
}

FactorResult factor_transitive(const GroupChain& chain, const GSet& x) {
  const std::size_t top = chain.length() - 1;
  if (!x.group()->same_table(*chain.stage(top)))
    throw ValidationError("factor_transitive: object does not live over the top stage");
  if (!x.is_transitive()) throw ValidationError("factor_transitive: object is not transitive");

  uint64_t action_ker = x.action_kernel();
  std::size_t alpha = top;
  for (std::size_t s = 0; s < top; ++s) {
    auto t = chain.composite(top, s);
    uint64_t ker = kernel_of(*chain.stage(top), t, chain.stage(s)->identity());
    if ((ker & ~action_ker) == 0) {
      alpha = s;
      break;
    }
  }

  FactorResult out{alpha, alpha == top, GSet::trivial(chain.stage(alpha), 1), {}};
  out.checks.title = "factoring over " + chain.describe();
  out.checks.engine = "none";
  out.checks.notes.push_back(kTruncationNote);

  // Factored action: h acts as any preimage of h.
  auto t = chain.composite(top, alpha);
  const auto& ga = *chain.stage(alpha);
  std::vector<uint16_t> section(ga.order(), 0xffff);
  for (uint16_t g = 0; g < chain.stage(top)->order(); ++g)
    if (section[t[g]] == 0xffff) section[t[g]] = g;
  std::vector<uint16_t> act(ga.order() * x.size());
  for (uint16_t hgen = 0; hgen < ga.order(); ++hgen)
    for (uint16_t p = 0; p < x.size(); ++p) act[hgen * x.size() + p] = x.act(section[hgen], p);
  out.factored = GSet(chain.stage(alpha), x.size(), std::move(act));

  out.checks.add("factored-action-well-defined", true,
                 "stage " + std::to_string(alpha + 1) + " of " + std::to_string(top + 1));
  GSet back = restrict_along(chain.stage(top), t, out.factored);
  out.checks.add("pushback-recovers-action", back == x);
  out.checks.add("factored-transitive", out.factored.is_transitive());
  if (out.only_top)
    out.checks.notes.push_back("factors only at top stage " + std::to_string(top + 1));
  return out;
}

Report cofinal_subgroups(const GroupChain& chain, std::size_t max_order) {
  Report r;
  r.title = "cofinal open subgroups of " + chain.describe();
  r.engine = "none";
  r.notes.push_back(kTruncationNote);

  const std::size_t top = chain.length() - 1;
  const auto& g = *chain.stage(top);
  auto subs = g.all_subgroups(max_order);

  for (uint64_t u : subs) {
    std::size_t least = SIZE_MAX;
    for (std::size_t s = 0; s <= top; ++s) {
      auto t = chain.composite(top, s);
      uint64_t ker = kernel_of(g, t, chain.stage(s)->identity());
      if (ker & ~u) continue;
      // w = image of u; its preimage must give back u exactly.
      uint64_t w = 0;
      for (uint16_t a = 0; a < g.order(); ++a)
        if ((u >> a) & 1) w |= uint64_t{1} << t[a];
      uint64_t pre = 0;
      for (uint16_t a = 0; a < g.order(); ++a)
        if ((w >> t[a]) & 1) pre |= uint64_t{1} << a;
      if (pre == u) {
        least = s;
        break;
      }
    }
    r.add("subgroup-" + g.subgroup_name(u), least != SIZE_MAX,
          least != SIZE_MAX ? "reachable from stage " + std::to_string(least + 1)
                            : "not reachable at any stage");
  }
  return r;
}

}  // namespace locgal

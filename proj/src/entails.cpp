#include "locgal/entails.hpp"

#include <unordered_map>

#include "locgal/error.hpp"

namespace locgal {

namespace {

// Nodes are meet-expressions canonicalized by up-closure: [m] <= [m'] as
// lattice elements iff up(m') is a subset of up(m), and adjoining a factor g
// turns up(m) into up(m) | up(g).
struct Graph {
  std::vector<Bitset> up;                 // node id -> up-closure mask
  std::vector<char> truth;                // fixpoint mark
  std::vector<char> base;                 // below some family member outright
  std::vector<std::vector<uint32_t>> applicable;  // cover indices with target above node
  std::vector<std::vector<std::vector<uint32_t>>> children;  // per node, per applicable cover
  std::unordered_map<Bitset, uint32_t, BitsetHash> id;
};

}  // namespace

EntailResult entails(const Site& site, const Bitset& element,
                     const std::vector<Bitset>& family, EntailOptions opt) {
  const auto& base = site.base();
  const std::size_t n = base.size();
  if (element.universe() != n) throw ValidationError("entails: element mask universe mismatch");
  for (const auto& f : family)
    if (f.universe() != n) throw ValidationError("entails: family mask universe mismatch");

  std::vector<Bitset> target_up, member_up;
  std::vector<std::pair<std::size_t, std::size_t>> member_range;
  for (const auto& c : site.covers()) {
    target_up.push_back(base.up_closure(c.target));
    std::size_t begin = member_up.size();
    for (const auto& f : c.family) member_up.push_back(base.up_closure(f));
    member_range.emplace_back(begin, member_up.size());
  }

  Graph g;
  auto intern = [&](const Bitset& up_mask) -> uint32_t {
    auto it = g.id.find(up_mask);
    if (it != g.id.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(g.up.size());
    g.id.emplace(up_mask, id);
    g.up.push_back(up_mask);
    g.truth.push_back(0);
    bool below = false;
    for (const auto& f : family)
      if (f.is_subset_of(up_mask)) {  // sigma-rule: [m] <= [f]
        below = true;
        break;
      }
    g.base.push_back(below ? 1 : 0);
    g.applicable.emplace_back();
    g.children.emplace_back();
    return id;
  };

  const uint32_t root = intern(base.up_closure(element));

  // Breadth-first expansion of the reachable sub-poset.
  bool truncated = false;
  for (uint32_t cur = 0; cur < g.up.size(); ++cur) {
    if (g.base[cur]) continue;  // no children needed below a family member
    if (g.up.size() > opt.budget) {
      truncated = true;
      break;
    }
    for (uint32_t k = 0; k < target_up.size(); ++k) {
      if (!target_up[k].is_subset_of(g.up[cur])) continue;  // node not below target
      std::vector<uint32_t> kids;
      for (std::size_t j = member_range[k].first; j < member_range[k].second; ++j)
        kids.push_back(intern(g.up[cur] | member_up[j]));
      g.applicable[cur].push_back(k);
      g.children[cur].push_back(std::move(kids));
    }
  }

  // Least fixpoint: a node holds when it is below a family member or some
  // applicable cover has all pulled-back children holding.
  for (uint32_t i = 0; i < g.up.size(); ++i) g.truth[i] = g.base[i];
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t i = 0; i < g.up.size(); ++i) {
      if (g.truth[i]) continue;
      for (std::size_t a = 0; a < g.children[i].size() && !g.truth[i]; ++a) {
        bool all = true;
        for (uint32_t kid : g.children[i][a])
          if (!g.truth[kid]) {
            all = false;
            break;
          }
        if (all) {
          g.truth[i] = 1;
          changed = true;
        }
      }
    }
  }

  EntailResult r;
  r.nodes = g.up.size();
  if (g.truth[root])
    r.verdict = Verdict::Pass;
  else
    r.verdict = truncated ? Verdict::Undecided : Verdict::Fail;
  return r;
}

}  // namespace locgal

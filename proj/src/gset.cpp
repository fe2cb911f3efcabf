#include "locgal/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "locgal/error.hpp"

namespace locgal {

GSet::GSet(GroupPtr group, std::size_t size, std::vector<uint16_t> act,
           std::vector<std::string> point_names)
    : group_(std::move(group)), size_(size), act_(std::move(act)), names_(std::move(point_names)) {
  if (!group_) throw ValidationError("gset: null group");
  const std::size_t n = group_->order();
  if (act_.size() != n * size_) throw ValidationError("gset: action table size mismatch");
  for (auto v : act_)
    if (v >= size_) throw ValidationError("gset: action image out of range");

  for (uint16_t x = 0; x < size_; ++x)
    if (this->act(group_->identity(), x) != x)
      throw ValidationError("gset: identity moves point " + std::to_string(x));
  for (uint16_t g = 0; g < n; ++g)
    for (uint16_t h = 0; h < n; ++h)
      for (uint16_t x = 0; x < size_; ++x)
        if (this->act(group_->op(g, h), x) != this->act(g, this->act(h, x)))
          throw ValidationError("gset: action axiom fails at (g=" + group_->element_name(g) +
                                ", h=" + group_->element_name(h) + ", x=" + std::to_string(x) + ")");

  if (names_.empty())
    for (std::size_t x = 0; x < size_; ++x) names_.push_back("x" + std::to_string(x));
  if (names_.size() != size_) throw ValidationError("gset: point name count mismatch");
}

GSet GSet::trivial(GroupPtr group, std::size_t size) {
  std::vector<uint16_t> act(group->order() * size);
  for (std::size_t g = 0; g < group->order(); ++g)
    for (std::size_t x = 0; x < size; ++x) act[g * size + x] = static_cast<uint16_t>(x);
  return GSet(std::move(group), size, std::move(act));
}

GSet GSet::regular(GroupPtr group) {
  std::size_t n = group->order();
  std::vector<uint16_t> act(n * n);
  std::vector<std::string> names;
  for (uint16_t g = 0; g < n; ++g)
    for (uint16_t x = 0; x < n; ++x) act[g * n + x] = group->op(g, x);
  for (uint16_t x = 0; x < n; ++x) names.push_back(group->element_name(x));
  return GSet(std::move(group), n, std::move(act), std::move(names));
}

GSet GSet::cosets(GroupPtr group, uint64_t subgroup_mask) {
  if (!group->is_subgroup(subgroup_mask))
    throw ValidationError("cosets: mask " + group->subgroup_name(subgroup_mask) +
                          " is not a subgroup");
  const std::size_t n = group->order();
  std::vector<uint16_t> coset_of(n, 0xffff);
  std::vector<uint16_t> reps;
  for (uint16_t a = 0; a < n; ++a) {
    if (coset_of[a] != 0xffff) continue;
    uint16_t c = static_cast<uint16_t>(reps.size());
    reps.push_back(a);
    for (uint16_t h = 0; h < n; ++h)
      if ((subgroup_mask >> h) & 1) coset_of[group->op(a, h)] = c;
  }
  std::size_t m = reps.size();
  std::vector<uint16_t> act(n * m);
  std::vector<std::string> names;
  for (uint16_t g = 0; g < n; ++g)
    for (uint16_t c = 0; c < m; ++c) act[g * m + c] = coset_of[group->op(g, reps[c])];
  for (uint16_t c = 0; c < m; ++c) names.push_back(group->element_name(reps[c]) + "H");
  return GSet(std::move(group), m, std::move(act), std::move(names));
}

std::vector<std::vector<uint16_t>> GSet::orbits() const {
  std::vector<int> orb(size_, -1);
  std::vector<std::vector<uint16_t>> out;
  for (uint16_t x = 0; x < size_; ++x) {
    if (orb[x] >= 0) continue;
    std::vector<uint16_t> o;
    for (uint16_t g = 0; g < group_->order(); ++g) {
      uint16_t y = act(g, x);
      if (orb[y] < 0) {
        orb[y] = static_cast<int>(out.size());
        o.push_back(y);
      }
    }
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

uint64_t GSet::stabilizer(uint16_t x) const {
  uint64_t s = 0;
  for (uint16_t g = 0; g < group_->order(); ++g)
    if (act(g, x) == x) s |= uint64_t{1} << g;
  return s;
}

uint64_t GSet::action_kernel() const {
  uint64_t k = (uint64_t{1} << group_->order()) - 1;
  if (group_->order() == 64) k = ~uint64_t{0};
  for (uint16_t x = 0; x < size_; ++x) k &= stabilizer(x);
  return k;
}

GSet GSet::restricted_along(GroupPtr k, const std::vector<uint16_t>& hom) const {
  if (hom.size() != k->order()) throw ValidationError("restriction: homomorphism size mismatch");
  std::vector<uint16_t> act2(k->order() * size_);
  for (uint16_t g = 0; g < k->order(); ++g)
    for (uint16_t x = 0; x < size_; ++x) act2[g * size_ + x] = act(hom[g], x);
  return GSet(std::move(k), size_, std::move(act2), names_);
}

bool is_equivariant(const GSet& x, const GSet& y, const std::vector<uint16_t>& map) {
  if (map.size() != x.size()) return false;
  for (uint16_t g = 0; g < x.group()->order(); ++g)
    for (uint16_t p = 0; p < x.size(); ++p)
      if (y.act(g, map[p]) != map[x.act(g, p)]) return false;
  return true;
}

bool mu_star_monotone(const GSet& x, const GSet& y, const std::vector<uint16_t>& map) {
  if (map.size() != x.size()) return false;
  for (uint16_t p = 0; p < x.size(); ++p)
    for (uint16_t q = 0; q < x.size(); ++q)
      for (uint16_t g = 0; g < x.group()->order(); ++g)
        if (x.act(g, p) == q && y.act(g, map[p]) != map[q]) return false;
  return true;
}

std::vector<GSetMorphism> hom_gsets(const GSet& x, const GSet& y) {
  if (!x.group()->same_table(*y.group()))
    throw ValidationError("hom_gsets: group mismatch between source and target");

  auto orbits = x.orbits();
  std::vector<uint16_t> reps;
  for (const auto& o : orbits) reps.push_back(o.front());

  // Candidate images per representative: points fixed by its stabilizer.
  std::vector<std::vector<uint16_t>> candidates;
  for (uint16_t r : reps) {
    uint64_t stab = x.stabilizer(r);
    std::vector<uint16_t> c;
    for (uint16_t q = 0; q < y.size(); ++q)
      if ((stab & ~y.stabilizer(q)) == 0) c.push_back(q);
    candidates.push_back(std::move(c));
  }

  // One transporter element per point: x = carrier[g] . rep.
  std::vector<uint16_t> via(x.size(), 0);
  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    for (uint16_t g = 0; g < x.group()->order(); ++g) via[x.act(g, reps[oi])] = g;
    via[reps[oi]] = x.group()->identity();
  }
  std::vector<std::size_t> orbit_of(x.size());
  for (std::size_t oi = 0; oi < orbits.size(); ++oi)
    for (uint16_t p : orbits[oi]) orbit_of[p] = oi;

  std::vector<GSetMorphism> out;
  std::vector<std::size_t> pick(reps.size(), 0);
  if (x.size() == 0) {
    out.push_back(GSetMorphism{&x, &y, {}});
    return out;
  }
  while (true) {
    bool feasible = true;
    for (std::size_t i = 0; i < reps.size() && feasible; ++i)
      if (candidates[i].empty()) feasible = false;
    if (!feasible) return out;

    std::vector<uint16_t> map(x.size());
    for (uint16_t p = 0; p < x.size(); ++p) {
      std::size_t oi = orbit_of[p];
      map[p] = y.act(via[p], candidates[oi][pick[oi]]);
    }
    out.push_back(GSetMorphism{&x, &y, std::move(map)});

    std::size_t i = reps.size();
    while (i > 0) {
      if (++pick[i - 1] < candidates[i - 1].size()) break;
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  // Deterministic order independent of orbit layout.
  std::sort(out.begin(), out.end(),
            [](const GSetMorphism& a, const GSetMorphism& b) { return a.map < b.map; });
  return out;
}

bool is_bijective(const std::vector<uint16_t>& map, std::size_t target_size) {
  if (map.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (auto v : map) {
    if (v >= target_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<uint16_t> find_isomorphism(const GSet& x, const GSet& y) {
  if (x.size() != y.size()) return {};
  for (auto& h : hom_gsets(x, y))
    if (is_bijective(h.map, y.size())) return h.map;
  return {};
}

AutomorphismGroup automorphism_group(const GSet& x) {
  std::vector<std::vector<uint16_t>> maps;
  for (auto& h : hom_gsets(x, x))
    if (is_bijective(h.map, x.size())) maps.push_back(h.map);
  std::sort(maps.begin(), maps.end());

  std::map<std::vector<uint16_t>, uint16_t> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<uint16_t>(i);
  std::vector<std::vector<uint16_t>> table(maps.size(), std::vector<uint16_t>(maps.size()));
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t b = 0; b < maps.size(); ++b) {
      std::vector<uint16_t> comp(x.size());
      for (uint16_t p = 0; p < x.size(); ++p) comp[p] = maps[a][maps[b][p]];
      auto it = index.find(comp);
      if (it == index.end()) throw Error("automorphism_group: composition escaped the set");
      table[a][b] = it->second;
    }
  return AutomorphismGroup{maps, FiniteGroup::from_table("Aut", table)};
}

}  // namespace locgal

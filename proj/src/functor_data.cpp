#include "locgal/functor_data.hpp"

#include <algorithm>
#include <functional>

#include "locgal/error.hpp"

namespace locgal {

std::vector<uint32_t> FiniteCategory::hom(uint32_t x, uint32_t y) const {
  std::vector<uint32_t> out;
  for (uint32_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].src == x && arrows[a].dst == y) out.push_back(a);
  return out;
}

void FiniteCategory::validate() const {
  if (identity.size() != n_objects()) throw ValidationError("category: identity list size mismatch");
  for (uint32_t x = 0; x < n_objects(); ++x) {
    uint32_t e = identity[x];
    if (e >= arrows.size() || arrows[e].src != x || arrows[e].dst != x)
      throw ValidationError("category: bad identity for object " + object_names[x]);
  }
  if (compose.size() != arrows.size()) throw ValidationError("category: composition table size");
  for (uint32_t g = 0; g < arrows.size(); ++g) {
    if (compose[g].size() != arrows.size()) throw ValidationError("category: ragged composition");
    for (uint32_t f = 0; f < arrows.size(); ++f) {
      bool composable = arrows[f].dst == arrows[g].src;
      int32_t c = compose[g][f];
      if (!composable && c != -1)
        throw ValidationError("category: non-composable pair has a composite");
      if (composable) {
        if (c < 0 || static_cast<std::size_t>(c) >= arrows.size())
          throw ValidationError("category: missing composite");
        if (arrows[c].src != arrows[f].src || arrows[c].dst != arrows[g].dst)
          throw ValidationError("category: composite has wrong endpoints");
      }
    }
  }
  for (uint32_t f = 0; f < arrows.size(); ++f) {
    if (compose[f][identity[arrows[f].src]] != static_cast<int32_t>(f) ||
        compose[identity[arrows[f].dst]][f] != static_cast<int32_t>(f))
      throw ValidationError("category: unit law fails for arrow " + arrows[f].name);
  }
  for (uint32_t f = 0; f < arrows.size(); ++f)
    for (uint32_t g = 0; g < arrows.size(); ++g) {
      if (arrows[f].dst != arrows[g].src) continue;
      for (uint32_t h = 0; h < arrows.size(); ++h) {
        if (arrows[g].dst != arrows[h].src) continue;
        if (compose[h][compose[g][f]] != compose[compose[h][g]][f])
          throw ValidationError("category: associativity fails at (" + arrows[h].name + ", " +
                                arrows[g].name + ", " + arrows[f].name + ")");
      }
    }
}

void FunctorData::validate() const {
  if (!cat) throw ValidationError("functor: null category");
  if (sizes.size() != cat->n_objects() || maps.size() != cat->arrows.size())
    throw ValidationError("functor: table sizes mismatch");
  for (uint32_t a = 0; a < maps.size(); ++a) {
    if (maps[a].size() != sizes[cat->arrows[a].src])
      throw ValidationError("functor: arrow map domain mismatch at " + cat->arrows[a].name);
    for (auto v : maps[a])
      if (v >= sizes[cat->arrows[a].dst])
        throw ValidationError("functor: arrow map image out of range at " + cat->arrows[a].name);
  }
  for (uint32_t x = 0; x < cat->n_objects(); ++x)
    for (uint16_t p = 0; p < sizes[x]; ++p)
      if (maps[cat->identity[x]][p] != p)
        throw ValidationError("functor: identity arrow acts non-trivially on " +
                              cat->object_names[x]);
  for (uint32_t g = 0; g < maps.size(); ++g)
    for (uint32_t f = 0; f < maps.size(); ++f) {
      if (cat->arrows[f].dst != cat->arrows[g].src) continue;
      uint32_t gf = static_cast<uint32_t>(cat->compose[g][f]);
      for (uint16_t p = 0; p < sizes[cat->arrows[f].src]; ++p)
        if (maps[gf][p] != maps[g][maps[f][p]])
          throw ValidationError("functor: functoriality fails at " + cat->arrows[g].name +
                                " after " + cat->arrows[f].name);
    }
}

SiteFunctor functor_of_site(const SiteCategory& c) {
  auto cat = std::make_shared<FiniteCategory>();
  SiteFunctor out;
  for (std::size_t i = 0; i < c.objects.size(); ++i)
    cat->object_names.push_back(c.object_name(i));

  std::vector<std::vector<std::vector<int32_t>>> id_of(c.objects.size());
  for (std::size_t s = 0; s < c.objects.size(); ++s) {
    id_of[s].resize(c.objects.size());
    for (std::size_t d = 0; d < c.objects.size(); ++d)
      id_of[s][d].assign(c.homs[s][d].size(), -1);
  }
  for (std::size_t s = 0; s < c.objects.size(); ++s)
    for (std::size_t d = 0; d < c.objects.size(); ++d)
      for (std::size_t k = 0; k < c.homs[s][d].size(); ++k) {
        id_of[s][d][k] = static_cast<int32_t>(cat->arrows.size());
        cat->arrows.push_back({static_cast<uint32_t>(s), static_cast<uint32_t>(d),
                               "f" + std::to_string(cat->arrows.size())});
        out.arrow_origin.emplace_back(s, d, k);
      }

  cat->identity.resize(c.objects.size());
  for (std::size_t s = 0; s < c.objects.size(); ++s) {
    std::vector<uint16_t> id_map(c.objects[s].size());
    for (uint16_t p = 0; p < id_map.size(); ++p) id_map[p] = p;
    auto it = std::find(c.homs[s][s].begin(), c.homs[s][s].end(), id_map);
    if (it == c.homs[s][s].end())
      throw ValidationError("site category: identity map missing on object " + c.object_name(s));
    cat->identity[s] = static_cast<uint32_t>(id_of[s][s][it - c.homs[s][s].begin()]);
  }

  cat->compose.assign(cat->arrows.size(), std::vector<int32_t>(cat->arrows.size(), -1));
  for (uint32_t g = 0; g < cat->arrows.size(); ++g)
    for (uint32_t f = 0; f < cat->arrows.size(); ++f) {
      if (cat->arrows[f].dst != cat->arrows[g].src) continue;
      auto [fs, fd, fk] = out.arrow_origin[f];
      auto [gs, gd, gk] = out.arrow_origin[g];
      const auto& fm = c.homs[fs][fd][fk];
      const auto& gm = c.homs[gs][gd][gk];
      std::vector<uint16_t> comp(fm.size());
      for (std::size_t p = 0; p < fm.size(); ++p) comp[p] = gm[fm[p]];
      auto it = std::find(c.homs[fs][gd].begin(), c.homs[fs][gd].end(), comp);
      if (it == c.homs[fs][gd].end())
        throw ValidationError("site category: composition not closed");
      cat->compose[g][f] = id_of[fs][gd][it - c.homs[fs][gd].begin()];
    }

  cat->validate();
  out.cat = cat;
  out.underlying.cat = cat;
  for (const auto& obj : c.objects) out.underlying.sizes.push_back(obj.size());
  for (uint32_t a = 0; a < cat->arrows.size(); ++a) {
    auto [s, d, k] = out.arrow_origin[a];
    out.underlying.maps.push_back(c.homs[s][d][k]);
  }
  out.underlying.validate();
  return out;
}

FunctorData hom_functor(const CategoryPtr& cat, uint32_t a) {
  FunctorData f;
  f.cat = cat;
  std::vector<std::vector<uint32_t>> hom_lists;
  for (uint32_t x = 0; x < cat->n_objects(); ++x) {
    hom_lists.push_back(cat->hom(a, x));
    f.sizes.push_back(static_cast<uint32_t>(hom_lists.back().size()));
  }
  auto index_in = [&](uint32_t x, uint32_t arrow) -> uint16_t {
    const auto& lst = hom_lists[x];
    auto it = std::find(lst.begin(), lst.end(), arrow);
    if (it == lst.end()) throw Error("hom_functor: composite escaped the hom list");
    return static_cast<uint16_t>(it - lst.begin());
  };
  for (uint32_t g = 0; g < cat->arrows.size(); ++g) {
    std::vector<uint16_t> m(f.sizes[cat->arrows[g].src]);
    for (uint16_t i = 0; i < m.size(); ++i) {
      int32_t comp = cat->compose[g][hom_lists[cat->arrows[g].src][i]];
      m[i] = index_in(cat->arrows[g].dst, static_cast<uint32_t>(comp));
    }
    f.maps.push_back(std::move(m));
  }
  f.validate();
  return f;
}

namespace {

// Backtracking enumeration of component families with naturality pruning.
void enumerate_nat(const FunctorData& f, const FunctorData& g, bool bijective_only,
                   std::vector<std::vector<std::vector<uint16_t>>>& out) {
  const auto& cat = *f.cat;
  const std::size_t n = cat.n_objects();
  std::vector<std::vector<uint16_t>> comp(n);

  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == n) {
      out.push_back(comp);
      return;
    }
    std::vector<uint16_t> c(f.sizes[x], 0);
    std::function<void(std::size_t)> fill = [&](std::size_t p) {
      if (p == c.size()) {
        if (bijective_only && !is_bijective(c, g.sizes[x])) return;
        comp[x] = c;
        // naturality against all arrows whose endpoints are both assigned
        for (uint32_t a = 0; a < cat.arrows.size(); ++a) {
          uint32_t s = cat.arrows[a].src, d = cat.arrows[a].dst;
          if (s > x || d > x) continue;
          for (uint16_t q = 0; q < f.sizes[s]; ++q)
            if (g.maps[a][comp[s][q]] != comp[d][f.maps[a][q]]) return;
        }
        go(x + 1);
        return;
      }
      for (uint16_t v = 0; v < g.sizes[x]; ++v) {
        c[p] = v;
        fill(p + 1);
      }
    };
    if (f.sizes[x] == 0) {
      comp[x] = {};
      if (!(bijective_only && g.sizes[x] != 0)) go(x + 1);
      return;
    }
    fill(0);
  };
  go(0);
}

}  // namespace

std::vector<std::vector<std::vector<uint16_t>>> natural_transformations(const FunctorData& f,
                                                                        const FunctorData& g) {
  std::vector<std::vector<std::vector<uint16_t>>> out;
  enumerate_nat(f, g, false, out);
  return out;
}

std::vector<std::vector<std::vector<uint16_t>>> natural_isomorphisms(const FunctorData& f,
                                                                     const FunctorData& g) {
  std::vector<std::vector<std::vector<uint16_t>>> out;
  enumerate_nat(f, g, true, out);
  return out;
}

std::size_t count_natural_relations(const FunctorData& f, const FunctorData& g) {
  const auto& cat = *f.cat;
  const std::size_t n = cat.n_objects();
  // R_X as bitmask over FX x GX pairs.
  std::vector<uint32_t> rel(n, 0);
  std::size_t count = 0;

  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == n) {
      ++count;
      return;
    }
    uint32_t pairs = f.sizes[x] * g.sizes[x];
    for (uint32_t r = 0; r < (uint32_t{1} << pairs); ++r) {
      rel[x] = r;
      bool ok = true;
      for (uint32_t a = 0; a < cat.arrows.size() && ok; ++a) {
        uint32_t s = cat.arrows[a].src, d = cat.arrows[a].dst;
        if (s > x || d > x) continue;
        for (uint16_t p = 0; p < f.sizes[s] && ok; ++p)
          for (uint16_t q = 0; q < g.sizes[s] && ok; ++q) {
            if (!((rel[s] >> (p * g.sizes[s] + q)) & 1)) continue;
            uint32_t image_bit = f.maps[a][p] * g.sizes[d] + g.maps[a][q];
            if (!((rel[d] >> image_bit) & 1)) ok = false;
          }
      }
      if (ok) go(x + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace locgal

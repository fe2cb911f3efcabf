#include "locgal/nat_locale.hpp"

#include <set>

#include "locgal/error.hpp"

namespace locgal {

std::tuple<uint32_t, uint16_t, uint16_t> NatLocale::gen_info(std::size_t gen_index) const {
  for (uint32_t obj = 0; obj < offset.size(); ++obj) {
    std::size_t next = obj + 1 < offset.size() ? offset[obj + 1] : n_generators();
    if (gen_index < next) {
      std::size_t local = gen_index - offset[obj];
      return {obj, static_cast<uint16_t>(local / g.sizes[obj]),
              static_cast<uint16_t>(local % g.sizes[obj])};
    }
  }
  throw Error("nat locale: generator index out of range");
}

NatLocale nat_locale(WraithKind kind, FunctorData f, FunctorData g) {
  f.validate();
  g.validate();
  if (f.cat.get() != g.cat.get()) throw ValidationError("nat_locale: functors on different categories");
  const auto& cat = *f.cat;
  const std::size_t nobj = cat.n_objects();

  std::vector<std::size_t> offset(nobj, 0);
  std::size_t n = 0;
  std::vector<std::string> names;
  for (uint32_t x = 0; x < nobj; ++x) {
    offset[x] = n;
    n += static_cast<std::size_t>(f.sizes[x]) * g.sizes[x];
    for (uint16_t a = 0; a < f.sizes[x]; ++a)
      for (uint16_t b = 0; b < g.sizes[x]; ++b)
        names.push_back(cat.object_names[x] + ":" + std::to_string(a) + "|" + std::to_string(b));
  }
  auto gen = [&](uint32_t obj, uint16_t x0, uint16_t x1) {
    return offset[obj] + static_cast<std::size_t>(x0) * g.sizes[obj] + x1;
  };

  // Order rule: one pair per arrow.
  std::set<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t a = 0; a < cat.arrows.size(); ++a) {
    uint32_t s = cat.arrows[a].src, d = cat.arrows[a].dst;
    for (uint16_t x0 = 0; x0 < f.sizes[s]; ++x0)
      for (uint16_t x1 = 0; x1 < g.sizes[s]; ++x1)
        pairs.emplace(static_cast<uint32_t>(gen(s, x0, x1)),
                      static_cast<uint32_t>(gen(d, f.maps[a][x0], g.maps[a][x1])));
  }
  Preorder base = Preorder::from_relation(
      std::move(names), std::vector<std::pair<uint32_t, uint32_t>>(pairs.begin(), pairs.end()));

  std::vector<CoverSpec> covers;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto add_empty = [&](std::size_t g1, std::size_t g2) {
    auto key = std::minmax(g1, g2);
    if (!seen.insert(key).second) return;
    Bitset t(n);
    t.set(g1);
    t.set(g2);
    covers.push_back(CoverSpec{std::move(t), {}});
  };
  auto single = [&](std::size_t idx) {
    Bitset m(n);
    m.set(idx);
    return m;
  };

  if (kind != WraithKind::Relations) {
    for (uint32_t x = 0; x < nobj; ++x) {
      for (uint16_t z = 0; z < f.sizes[x]; ++z) {
        for (uint16_t a = 0; a < g.sizes[x]; ++a)
          for (uint16_t b = a + 1; b < g.sizes[x]; ++b) add_empty(gen(x, z, a), gen(x, z, b));
        CoverSpec e{Bitset(n), {}};
        for (uint16_t a = 0; a < g.sizes[x]; ++a) e.family.push_back(single(gen(x, z, a)));
        covers.push_back(std::move(e));
      }
    }
  }
  if (kind == WraithKind::Bijections) {
    for (uint32_t x = 0; x < nobj; ++x) {
      for (uint16_t z = 0; z < g.sizes[x]; ++z) {
        for (uint16_t a = 0; a < f.sizes[x]; ++a)
          for (uint16_t b = a + 1; b < f.sizes[x]; ++b) add_empty(gen(x, a, z), gen(x, b, z));
        CoverSpec s{Bitset(n), {}};
        for (uint16_t a = 0; a < f.sizes[x]; ++a) s.family.push_back(single(gen(x, a, z)));
        covers.push_back(std::move(s));
      }
    }
  }

  NatLocale out{kind, std::move(f), std::move(g), Site(std::move(base), std::move(covers)),
                std::move(offset)};
  return out;
}

}  // namespace locgal

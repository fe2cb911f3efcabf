#include "locgal/wraith.hpp"

#include <algorithm>
#include <set>

#include "locgal/error.hpp"

namespace locgal {

const char* to_string(WraithKind k) {
  switch (k) {
    case WraithKind::Relations: return "relations";
    case WraithKind::Functions: return "functions";
    default: return "bijections";
  }
}

WraithSite wraith_site(WraithKind kind, std::size_t nx, std::size_t ny) {
  const std::size_t n = nx * ny;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      names.push_back(std::to_string(x) + "|" + std::to_string(y));
  Preorder base = Preorder::discrete(std::move(names));

  auto gen = [&](std::size_t x, std::size_t y) { return x * ny + y; };
  auto single = [&](std::size_t g) {
    Bitset m(n);
    m.set(g);
    return m;
  };

  std::vector<CoverSpec> covers;
  std::set<std::vector<std::size_t>> seen;  // dedupe instantiated schemas
  auto add_empty_cover = [&](std::size_t g1, std::size_t g2) {
    std::vector<std::size_t> key{std::min(g1, g2), std::max(g1, g2)};
    if (!seen.insert(key).second) return;
    Bitset t(n);
    t.set(g1);
    t.set(g2);
    covers.push_back(CoverSpec{std::move(t), {}});
  };

  if (kind != WraithKind::Relations) {
    // u) empty -> [<z|x>, <z|y>], x != y
    for (std::size_t z = 0; z < nx; ++z)
      for (std::size_t x = 0; x < ny; ++x)
        for (std::size_t y = x + 1; y < ny; ++y) add_empty_cover(gen(z, x), gen(z, y));
    // e) {<z|x> : x} -> 1
    for (std::size_t z = 0; z < nx; ++z) {
      CoverSpec c{Bitset(n), {}};
      for (std::size_t x = 0; x < ny; ++x) c.family.push_back(single(gen(z, x)));
      covers.push_back(std::move(c));
    }
  }
  if (kind == WraithKind::Bijections) {
    // i) empty -> [<x|z>, <y|z>], x != y
    for (std::size_t z = 0; z < ny; ++z)
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = x + 1; y < nx; ++y) add_empty_cover(gen(x, z), gen(y, z));
    // s) {<x|z> : x} -> 1
    for (std::size_t z = 0; z < ny; ++z) {
      CoverSpec c{Bitset(n), {}};
      for (std::size_t x = 0; x < nx; ++x) c.family.push_back(single(gen(x, z)));
      covers.push_back(std::move(c));
    }
  }
  return WraithSite{kind, nx, ny, Site(std::move(base), std::move(covers))};
}

Site point_site() { return Site(Preorder::discrete(std::size_t{0}), {}); }

FrameMorphism wraith_m(const WraithSite& src, const WraithSite& left, const WraithSite& right,
                       const Site& tensor_site, int drop_term) {
  if (left.ny != right.nx || src.nx != left.nx || src.ny != right.ny)
    throw ValidationError("wraith_m: set sizes do not line up");
  const std::size_t nz = left.ny;
  const std::size_t off = left.nx * left.ny;
  const auto& lat = tensor_site.lattice();

  std::vector<FrameElement> assign;
  for (std::size_t x = 0; x < src.nx; ++x)
    for (std::size_t y = 0; y < src.ny; ++y) {
      std::vector<uint32_t> terms;
      for (std::size_t z = 0; z < nz; ++z) {
        if (drop_term >= 0 && src.gen(x, y) == static_cast<std::size_t>(drop_term) && z + 1 == nz)
          continue;
        uint32_t mask = (uint32_t{1} << left.gen(x, z)) | (uint32_t{1} << (off + right.gen(z, y)));
        terms.push_back(lat.element_of(mask));
      }
      assign.push_back(saturate(tensor_site, terms));
    }
  return drop_term >= 0 ? FrameMorphism::unchecked(src.site, tensor_site, std::move(assign))
                        : FrameMorphism::checked(src.site, tensor_site, std::move(assign));
}

FrameMorphism wraith_e(const WraithSite& src, const Site& point) {
  if (src.nx != src.ny) throw ValidationError("wraith_e: endo-hom expected");
  std::vector<FrameElement> assign;
  for (std::size_t x = 0; x < src.nx; ++x)
    for (std::size_t y = 0; y < src.ny; ++y)
      assign.push_back(x == y ? frame_top(point) : frame_zero(point));
  return FrameMorphism::checked(src.site, point, std::move(assign));
}

FrameMorphism wraith_iota(const WraithSite& src, const WraithSite& dst) {
  if (src.kind != WraithKind::Bijections || dst.kind != WraithKind::Bijections)
    throw ValidationError("wraith_iota: defined on bijection locales only");
  if (src.nx != dst.ny || src.ny != dst.nx) throw ValidationError("wraith_iota: size mismatch");
  std::vector<FrameElement> assign;
  for (std::size_t x = 0; x < src.nx; ++x)
    for (std::size_t y = 0; y < src.ny; ++y)
      assign.push_back(frame_principal(dst.site, dst.site.lattice().generator(dst.gen(y, x))));
  return FrameMorphism::checked(src.site, dst.site, std::move(assign));
}

Report verify_groupoid_laws(WraithKind kind, std::size_t nx, std::size_t ny, std::size_t nz,
                            bool corrupt_m) {
  if (kind == WraithKind::Relations)
    throw ValidationError("verify_groupoid_laws: relations carry no u/e structure to verify");
  Report r;
  r.title = std::string("groupoid laws, kind=") + to_string(kind) + " |X|=" + std::to_string(nx) +
            " |Y|=" + std::to_string(ny) + " |Z|=" + std::to_string(nz);
  r.engine = "full";

  WraithSite XY = wraith_site(kind, nx, ny);
  WraithSite XZ = wraith_site(kind, nx, nz);
  WraithSite ZZ = wraith_site(kind, nz, nz);
  WraithSite ZY = wraith_site(kind, nz, ny);

  // Coassociativity via the common middle Z: both composites land in
  // L(X,Z) (x) L(Z,Z) (x) L(Z,Y).
  {
    Site t_xz_zy = tensor(XZ.site, ZY.site);
    Site t_xz_zz = tensor(XZ.site, ZZ.site);
    Site t_zz_zy = tensor(ZZ.site, ZY.site);
    Site triple = tensor(t_xz_zz, ZY.site);

    FrameMorphism m1 = wraith_m(XY, XZ, ZY, t_xz_zy, corrupt_m ? 0 : -1);
    FrameMorphism m_left = wraith_m(XZ, XZ, ZZ, t_xz_zz);
    FrameMorphism m_right = wraith_m(ZY, ZZ, ZY, t_zz_zy);

    FrameMorphism id_zy = FrameMorphism::identity(ZY.site);
    FrameMorphism id_xz = FrameMorphism::identity(XZ.site);
    FrameMorphism step_a = tensor_of(m_left, id_zy, t_xz_zy, triple);
    FrameMorphism step_b = tensor_of(id_xz, m_right, t_xz_zy, triple);

    FrameMorphism path1 = FrameMorphism::compose(step_a, m1);
    FrameMorphism path2 = FrameMorphism::compose(step_b, m1);

    bool ok = true;
    std::string witness;
    for (std::size_t g = 0; g < nx * ny && ok; ++g)
      if (path1.assignment(g) != path2.assignment(g)) {
        ok = false;
        witness = "generator <" + XY.site.base().name(g) + ">";
      }
    r.add("coassociativity", ok, witness);
  }

  // Counit laws: (e* (x) id) m = id = (id (x) e*) m. The isomorphism
  // 2 (x) L = L is absorbed by mapping straight into L(X,Y).
  {
    WraithSite XX = wraith_site(kind, nx, nx);
    WraithSite YY = wraith_site(kind, ny, ny);
    Site t_xx_xy = tensor(XX.site, XY.site);
    Site t_xy_yy = tensor(XY.site, YY.site);
    FrameMorphism m_left = wraith_m(XY, XX, XY, t_xx_xy);
    FrameMorphism m_right = wraith_m(XY, XY, YY, t_xy_yy);

    std::vector<FrameElement> eid;
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < nx; ++y)
        eid.push_back(x == y ? frame_top(XY.site) : frame_zero(XY.site));
    for (std::size_t g = 0; g < nx * ny; ++g)
      eid.push_back(frame_principal(XY.site, XY.site.lattice().generator(g)));
    FrameMorphism counit_l = FrameMorphism::compose(
        FrameMorphism::unchecked(t_xx_xy, XY.site, std::move(eid)), m_left);

    std::vector<FrameElement> ide;
    for (std::size_t g = 0; g < nx * ny; ++g)
      ide.push_back(frame_principal(XY.site, XY.site.lattice().generator(g)));
    for (std::size_t x = 0; x < ny; ++x)
      for (std::size_t y = 0; y < ny; ++y)
        ide.push_back(x == y ? frame_top(XY.site) : frame_zero(XY.site));
    FrameMorphism counit_r = FrameMorphism::compose(
        FrameMorphism::unchecked(t_xy_yy, XY.site, std::move(ide)), m_right);

    bool okl = true, okr = true;
    std::string wl, wr;
    for (std::size_t g = 0; g < nx * ny; ++g) {
      FrameElement want = frame_principal(XY.site, XY.site.lattice().generator(g));
      if (okl && counit_l.assignment(g) != want) {
        okl = false;
        wl = "generator <" + XY.site.base().name(g) + ">";
      }
      if (okr && counit_r.assignment(g) != want) {
        okr = false;
        wr = "generator <" + XY.site.base().name(g) + ">";
      }
    }
    r.add("counit-left", okl, wl);
    r.add("counit-right", okr, wr);
  }

  if (kind == WraithKind::Bijections) {
    // Inverse laws, in L(X,Y) itself:
    //   join_y [<x0|y>, <x1|y>] = delta(x0, x1)  and
    //   join_x [<x|y0>, <x|y1>] = delta(y0, y1).
    const auto& lat = XY.site.lattice();
    bool ok = true;
    std::string witness;
    for (std::size_t x0 = 0; x0 < nx && ok; ++x0)
      for (std::size_t x1 = 0; x1 < nx && ok; ++x1) {
        std::vector<uint32_t> terms;
        for (std::size_t y = 0; y < ny; ++y)
          terms.push_back(lat.element_of((uint32_t{1} << XY.gen(x0, y)) |
                                         (uint32_t{1} << XY.gen(x1, y))));
        FrameElement got = saturate(XY.site, terms);
        FrameElement want = x0 == x1 ? frame_top(XY.site) : frame_zero(XY.site);
        if (got != want) {
          ok = false;
          witness = "x0=" + std::to_string(x0) + " x1=" + std::to_string(x1);
        }
      }
    r.add("inverse-law-left", ok, witness);

    ok = true;
    witness.clear();
    for (std::size_t y0 = 0; y0 < ny && ok; ++y0)
      for (std::size_t y1 = 0; y1 < ny && ok; ++y1) {
        std::vector<uint32_t> terms;
        for (std::size_t x = 0; x < nx; ++x)
          terms.push_back(lat.element_of((uint32_t{1} << XY.gen(x, y0)) |
                                         (uint32_t{1} << XY.gen(x, y1))));
        FrameElement got = saturate(XY.site, terms);
        FrameElement want = y0 == y1 ? frame_top(XY.site) : frame_zero(XY.site);
        if (got != want) {
          ok = false;
          witness = "y0=" + std::to_string(y0) + " y1=" + std::to_string(y1);
        }
      }
    r.add("inverse-law-right", ok, witness);

    WraithSite YX = wraith_site(kind, ny, nx);
    FrameMorphism i1 = wraith_iota(XY, YX);
    FrameMorphism i2 = wraith_iota(YX, XY);
    FrameMorphism twice = FrameMorphism::compose(i2, i1);
    ok = true;
    witness.clear();
    for (std::size_t g = 0; g < nx * ny && ok; ++g)
      if (twice.assignment(g) != frame_principal(XY.site, lat.generator(g))) {
        ok = false;
        witness = "generator <" + XY.site.base().name(g) + ">";
      }
    r.add("iota-involutive", ok, witness);
  }
  return r;
}

ActionFromGSet action_from_gset(const GSet& x) {
  ActionPresentation a;
  a.group = x.group();
  a.carrier = x.size();
  a.mu.assign(a.carrier * a.carrier, 0);
  for (uint16_t g = 0; g < a.group->order(); ++g)
    for (uint16_t p = 0; p < x.size(); ++p)
      a.mu[p * a.carrier + x.act(g, p)] |= uint64_t{1} << g;
  return ActionFromGSet{a, verify_action_equations(a)};
}

Report verify_action_equations(const ActionPresentation& a) {
  Report r;
  r.title = "action equations over " + a.group->name() + " on " + std::to_string(a.carrier) +
            " points";
  r.engine = "none";
  const auto& G = *a.group;
  const std::size_t n = a.carrier;

  // m* mu* = (mu* (x) mu*) m*
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        for (uint16_t g = 0; g < G.order() && ok; ++g)
          for (uint16_t h = 0; h < G.order() && ok; ++h) {
            bool lhs = (a.mu_star(x, y) >> G.op(h, g)) & 1;
            bool rhs = false;
            for (std::size_t z = 0; z < n && !rhs; ++z)
              rhs = ((a.mu_star(x, z) >> g) & 1) && ((a.mu_star(z, y) >> h) & 1);
            if (lhs != rhs) {
              ok = false;
              witness = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                        " g=" + G.element_name(g) + " h=" + G.element_name(h);
            }
          }
    r.add("multiplication-compatible", ok, witness);
  }

  // mu* iota* = iota* mu*
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        uint64_t inv_set = 0;
        for (uint16_t g = 0; g < G.order(); ++g)
          if ((a.mu_star(x, y) >> g) & 1) inv_set |= uint64_t{1} << G.inv(g);
        if (inv_set != a.mu_star(y, x)) {
          ok = false;
          witness = "x=" + std::to_string(x) + " y=" + std::to_string(y);
        }
      }
    r.add("inverse-compatible", ok, witness);
  }

  // e* mu* = e*
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        bool has_id = (a.mu_star(x, y) >> G.identity()) & 1;
        if (has_id != (x == y)) {
          ok = false;
          witness = "x=" + std::to_string(x) + " y=" + std::to_string(y);
        }
      }
    r.add("unit-compatible", ok, witness);
  }

  // Cover conditions of lAut: u, e, i, s hold under mu*.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t x = 0; x < n && ok; ++x) {
      uint64_t all = 0;
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t y2 = y + 1; y2 < n && ok; ++y2)
          if (a.mu_star(x, y) & a.mu_star(x, y2)) {
            ok = false;
            witness = "u fails at x=" + std::to_string(x);
          }
        all |= a.mu_star(x, y);
      }
      if (ok && __builtin_popcountll(all) != static_cast<int>(G.order())) {
        ok = false;
        witness = "e fails at x=" + std::to_string(x);
      }
    }
    for (std::size_t y = 0; y < n && ok; ++y) {
      uint64_t all = 0;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t x2 = x + 1; x2 < n && ok; ++x2)
          if (a.mu_star(x, y) & a.mu_star(x2, y)) {
            ok = false;
            witness = "i fails at y=" + std::to_string(y);
          }
        all |= a.mu_star(x, y);
      }
      if (ok && __builtin_popcountll(all) != static_cast<int>(G.order())) {
        ok = false;
        witness = "s fails at y=" + std::to_string(y);
      }
    }
    r.add("locale-morphism-covers", ok, witness);
  }
  return r;
}

uint64_t l_fix(const ActionPresentation& a, std::size_t x) {
  uint64_t s = a.mu_star(x, x);
  if (!a.group->is_subgroup(s))
    throw Error("l_fix: mu*<x|x> is not closed under product and inverse");
  return s;
}

bool is_transitive(const ActionPresentation& a) {
  for (uint64_t m : a.mu)
    if (!m) return false;
  return a.carrier > 0;
}

}  // namespace locgal

#include "locgal/site.hpp"

#include <algorithm>

#include "locgal/error.hpp"

namespace locgal {

Site::Site(Preorder base, std::vector<CoverSpec> covers)
    : base_(std::move(base)), covers_(std::move(covers)) {
  for (std::size_t k = 0; k < covers_.size(); ++k) {
    const auto& c = covers_[k];
    if (c.target.universe() != base_.size())
      throw ValidationError("site: cover " + std::to_string(k) + " target mask universe mismatch");
    for (const auto& f : c.family) {
      if (f.universe() != base_.size())
        throw ValidationError("site: cover " + std::to_string(k) + " family mask universe mismatch");
      if (!free_leq(f, c.target, base_))
        throw ValidationError("site: cover " + std::to_string(k) +
                              " has a family member not below its target");
    }
  }
}

void Site::materialize() const {
  if (lattice_) return;
  lattice_.emplace(base_);
  const auto& lat = *lattice_;
  const std::size_t L = lat.size();

  auto to_u32 = [](const Bitset& b) {
    uint32_t m = 0;
    b.for_each([&](std::size_t i) { m |= uint32_t{1} << i; });
    return m;
  };

  lattice_covers_.clear();
  lattice_covers_.reserve(covers_.size());
  for (const auto& c : covers_) {
    LatticeCover lc;
    lc.target = lat.element_of(to_u32(c.target));
    for (const auto& f : c.family) lc.family.push_back(lat.element_of(to_u32(f)));
    lc.target_downset = Bitset(L);
    for (uint32_t i = 0; i < L; ++i)
      if (lat.leq(i, lc.target)) lc.target_downset.set(i);
    lattice_covers_.push_back(std::move(lc));
  }
  zero_ = saturate(*this, std::vector<uint32_t>{}).members;
}

const FreeInfLattice& Site::lattice() const {
  materialize();
  return *lattice_;
}

const std::vector<Site::LatticeCover>& Site::lattice_covers() const {
  materialize();
  return lattice_covers_;
}

const Bitset& Site::zero_members() const {
  materialize();
  return *zero_;
}

namespace {

// Adds `e` and its downset to members.
void add_down(const FreeInfLattice& lat, Bitset& members, uint32_t e) {
  const std::size_t L = lat.size();
  for (uint32_t i = 0; i < L; ++i)
    if (!members.test(i) && lat.leq(i, e)) members.set(i);
  members.set(e);
}

}  // namespace

FrameElement saturate(const Site& site, const Bitset& seed_members) {
  std::vector<uint32_t> seed;
  seed_members.for_each([&](std::size_t i) { seed.push_back(static_cast<uint32_t>(i)); });
  return saturate(site, seed);
}

FrameElement saturate(const Site& site, const std::vector<uint32_t>& seed) {
  site.materialize();
  const auto& lat = site.lattice();
  const auto& covers = site.lattice_covers();
  const std::size_t L = lat.size();

  Bitset members(L);
  for (uint32_t s : seed) {
    if (s >= L) throw ValidationError("saturate: seed index out of range");
    add_down(lat, members, s);
  }

  // Fixpoint over pulled-back covers: c <= target inherits the family
  // {meet(c, f)}; when all pulled-back members are in, so is c.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& cov : covers) {
      Bitset candidates = cov.target_downset;
      candidates.subtract(members);
      candidates.for_each([&](std::size_t c) {
        for (uint32_t f : cov.family)
          if (!members.test(lat.meet(static_cast<uint32_t>(c), f))) return;
        add_down(lat, members, static_cast<uint32_t>(c));
        changed = true;
      });
    }
  }
  return FrameElement{&site, std::move(members)};
}

FrameElement frame_top(const Site& site) {
  site.materialize();
  return FrameElement{&site, Bitset::all(site.lattice().size())};
}

FrameElement frame_zero(const Site& site) {
  return FrameElement{&site, site.zero_members()};
}

FrameElement frame_principal(const Site& site, uint32_t element) {
  return saturate(site, std::vector<uint32_t>{element});
}

namespace {
void require_same_site(const FrameElement& a, const FrameElement& b) {
  if (a.site != b.site)
    throw ValidationError("frame operation on elements of different sites");
}
}  // namespace

FrameElement frame_join(const FrameElement& a, const FrameElement& b) {
  require_same_site(a, b);
  return saturate(*a.site, a.members | b.members);
}

FrameElement frame_meet(const FrameElement& a, const FrameElement& b) {
  require_same_site(a, b);
  return FrameElement{a.site, a.members & b.members};
}

bool frame_leq(const FrameElement& a, const FrameElement& b) {
  require_same_site(a, b);
  return a.members.is_subset_of(b.members);
}

bool is_zero(const FrameElement& a) { return a.members == a.site->zero_members(); }

std::vector<LocalePoint> enumerate_points(const Site& site, std::size_t max_generators) {
  const std::size_t n = site.base().size();
  if (n > max_generators)
    throw CapacityError("enumerate_points: " + std::to_string(n) +
                        " generators exceed the bound " + std::to_string(max_generators));

  // Up-closures of targets/family members, used to test acceptance of a
  // trace. A trace accepts [m] iff up(m) is contained in it.
  std::vector<Bitset> target_up, member_up;
  std::vector<std::pair<std::size_t, std::size_t>> member_range;
  for (const auto& c : site.covers()) {
    target_up.push_back(site.base().up_closure(c.target));
    std::size_t begin = member_up.size();
    for (const auto& f : c.family) member_up.push_back(site.base().up_closure(f));
    member_range.emplace_back(begin, member_up.size());
  }

  std::vector<Bitset> gen_up;
  for (std::size_t a = 0; a < n; ++a) gen_up.push_back(site.base().up_closure([&] {
    Bitset m(n);
    m.set(a);
    return m;
  }()));

  std::vector<LocalePoint> points;
  const uint64_t limit = uint64_t{1} << n;
  for (uint64_t m = 0; m < limit; ++m) {
    Bitset trace(n);
    for (std::size_t a = 0; a < n; ++a)
      if ((m >> a) & 1) trace.set(a);

    // Filters are upward closed, so traces must be up-closed in the base.
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if (trace.test(a) && !gen_up[a].is_subset_of(trace)) ok = false;
    // Each accepted cover target needs an accepted family member.
    for (std::size_t k = 0; k < target_up.size() && ok; ++k) {
      if (!target_up[k].is_subset_of(trace)) continue;
      bool member_in = false;
      for (std::size_t j = member_range[k].first; j < member_range[k].second && !member_in; ++j)
        if (member_up[j].is_subset_of(trace)) member_in = true;
      if (!member_in) ok = false;
    }
    if (ok) points.push_back(LocalePoint{std::move(trace)});
  }
  return points;
}

}  // namespace locgal

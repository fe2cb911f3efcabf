#include "locgal/frame_morphism.hpp"

#include <algorithm>
#include <unordered_set>

#include "locgal/error.hpp"

namespace locgal {

FrameMorphism::FrameMorphism(const Site& source, const Site& target,
                             std::vector<FrameElement> assign)
    : source_(&source), target_(&target), assign_(std::move(assign)) {
  source.materialize();
  target.materialize();
  if (assign_.size() != source.base().size())
    throw ValidationError("frame morphism: assignment size differs from generator count");
  for (const auto& e : assign_)
    if (e.site != target_)
      throw ValidationError("frame morphism: assigned element belongs to a different site");
  meet_cache_.resize(source.lattice().size());
  cached_.resize(source.lattice().size(), false);
}

FrameMorphism FrameMorphism::unchecked(const Site& source, const Site& target,
                                       std::vector<FrameElement> assign) {
  return FrameMorphism(source, target, std::move(assign));
}

FrameMorphism FrameMorphism::checked(const Site& source, const Site& target,
                                     std::vector<FrameElement> assign) {
  FrameMorphism m(source, target, std::move(assign));
  auto bad = m.violations();
  if (!bad.empty()) throw ValidationError("frame morphism: " + bad.front());
  return m;
}

std::vector<std::string> FrameMorphism::violations() const {
  std::vector<std::string> out;
  const auto& base = source_->base();
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = 0; b < base.size(); ++b)
      if (a != b && base.leq(a, b) && !frame_leq(assign_[a], assign_[b]))
        out.push_back("order pair " + base.name(a) + " <= " + base.name(b) +
                      " not preserved");

  const auto& covers = source_->lattice_covers();
  for (std::size_t k = 0; k < covers.size(); ++k) {
    FrameElement join = frame_zero(*target_);
    for (uint32_t f : covers[k].family) join = frame_join(join, apply_element(f));
    // Monotone assignments give join <= image(target) for free; the cover
    // condition is the other containment.
    if (!frame_leq(apply_element(covers[k].target), join))
      out.push_back("cover " + std::to_string(k) + " (target " +
                    source_->lattice().describe(covers[k].target) +
                    ") does not map to an epimorphic family");
  }
  return out;
}

FrameElement FrameMorphism::apply_element(uint32_t e) const {
  if (!cached_[e]) {
    const auto& lat = source_->lattice();
    Bitset acc = Bitset::all(target_->lattice().size());
    uint32_t rep = lat.rep_mask(e);
    while (rep) {
      std::size_t a = static_cast<std::size_t>(__builtin_ctz(rep));
      acc &= assign_[a].members;
      rep &= rep - 1;
    }
    meet_cache_[e] = std::move(acc);
    cached_[e] = true;
  }
  return FrameElement{target_, meet_cache_[e]};
}

FrameElement FrameMorphism::apply(const FrameElement& x) const {
  if (x.site != source_)
    throw ValidationError("frame morphism applied to element of a different site");
  Bitset acc(target_->lattice().size());
  x.members.for_each([&](std::size_t e) {
    acc |= apply_element(static_cast<uint32_t>(e)).members;
  });
  return saturate(*target_, acc);
}

FrameMorphism FrameMorphism::identity(const Site& site) {
  std::vector<FrameElement> assign;
  for (std::size_t a = 0; a < site.base().size(); ++a)
    assign.push_back(frame_principal(site, site.lattice().generator(a)));
  return unchecked(site, site, std::move(assign));
}

FrameMorphism FrameMorphism::compose(const FrameMorphism& g, const FrameMorphism& f) {
  if (&f.target() != &g.source())
    throw ValidationError("frame morphism composition: sites do not line up");
  std::vector<FrameElement> assign;
  for (std::size_t a = 0; a < f.source().base().size(); ++a)
    assign.push_back(g.apply(f.assignment(a)));
  return unchecked(f.source(), g.target(), std::move(assign));
}

Site tensor(const Site& a, const Site& b) {
  const std::size_t na = a.base().size(), nb = b.base().size();
  std::vector<std::string> names;
  std::unordered_set<std::string> used;
  auto push_name = [&](std::string n) {
    std::string candidate = n;
    int k = 2;
    while (!used.insert(candidate).second) candidate = n + "~" + std::to_string(k++);
    names.push_back(candidate);
  };
  for (std::size_t i = 0; i < na; ++i) push_name(a.base().name(i));
  for (std::size_t i = 0; i < nb; ++i) push_name(b.base().name(i));

  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      if (i != j && a.base().leq(i, j))
        pairs.emplace_back(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (i != j && b.base().leq(i, j))
        pairs.emplace_back(static_cast<uint32_t>(na + i), static_cast<uint32_t>(na + j));
  Preorder base = Preorder::from_relation(std::move(names), pairs);

  auto shift = [&](const Bitset& m, std::size_t offset) {
    Bitset out(na + nb);
    m.for_each([&](std::size_t i) { out.set(i + offset); });
    return out;
  };
  std::vector<CoverSpec> covers;
  for (const auto& c : a.covers()) {
    CoverSpec cc{shift(c.target, 0), {}};
    for (const auto& f : c.family) cc.family.push_back(shift(f, 0));
    covers.push_back(std::move(cc));
  }
  for (const auto& c : b.covers()) {
    CoverSpec cc{shift(c.target, na), {}};
    for (const auto& f : c.family) cc.family.push_back(shift(f, na));
    covers.push_back(std::move(cc));
  }
  return Site(std::move(base), std::move(covers));
}

FrameMorphism tensor_embed(const Site& part, const Site& tensor_site, std::size_t offset) {
  std::vector<FrameElement> assign;
  for (std::size_t a = 0; a < part.base().size(); ++a)
    assign.push_back(
        frame_principal(tensor_site, tensor_site.lattice().generator(offset + a)));
  return FrameMorphism::unchecked(part, tensor_site, std::move(assign));
}

FrameMorphism tensor_of(const FrameMorphism& f, const FrameMorphism& g,
                        const Site& source_tensor, const Site& target_tensor) {
  const std::size_t nf = f.source().base().size();
  const std::size_t ng = g.source().base().size();
  if (source_tensor.base().size() != nf + ng)
    throw ValidationError("tensor_of: source tensor does not match the factors");
  FrameMorphism left = tensor_embed(f.target(), target_tensor, 0);
  FrameMorphism right =
      tensor_embed(g.target(), target_tensor, f.target().base().size());
  std::vector<FrameElement> assign;
  for (std::size_t a = 0; a < nf; ++a) assign.push_back(left.apply(f.assignment(a)));
  for (std::size_t b = 0; b < ng; ++b) assign.push_back(right.apply(g.assignment(b)));
  return FrameMorphism::unchecked(source_tensor, target_tensor, std::move(assign));
}

}  // namespace locgal

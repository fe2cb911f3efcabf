#ifndef LOCGAL_SITE_CATEGORY_HPP
#define LOCGAL_SITE_CATEGORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "locgal/gset.hpp"
#include "locgal/preorder.hpp"
#include "locgal/report.hpp"

namespace locgal {

/// A small concrete category of finite G-sets with its underlying-set
/// functor: the data the atomic-site axioms are checked against. Arrows are
/// stored as raw point maps so that deliberately broken arrows can be
/// injected for negative controls.
struct SiteCategory {
  GroupPtr group;
  std::vector<GSet> objects;
  // homs[s][d]: all arrow tables from objects[s] to objects[d].
  std::vector<std::vector<std::vector<std::vector<uint16_t>>>> homs;

  std::size_t hom_count(std::size_t s, std::size_t d) const { return homs[s][d].size(); }
  std::string object_name(std::size_t i) const;

  /// Full subcategory on the given object indices.
  SiteCategory full_subcategory(const std::vector<std::size_t>& keep) const;
};

/// The site of non-empty transitive G-sets: one coset object per conjugacy
/// class of subgroups (least subgroup as representative), all equivariant
/// maps, ordered by carrier size then subgroup mask. The covers of the
/// canonical topology are single arrows, so the coverage needs no separate
/// data here.
SiteCategory build_tbg_site(GroupPtr group, std::size_t max_order = 24);

/// The diagram of the underlying-set functor and its poset collapse.
struct DiagramOfF {
  // Objects of Gamma_F: (object index, point) pairs in listing order.
  std::vector<std::pair<std::size_t, uint16_t>> objects;
  // arrows[i][j]: arrow tables f with f(x_i) = x_j.
  std::vector<std::vector<std::vector<std::vector<uint16_t>>>> arrows;
  Preorder poset;  // D_F: (i <= j) iff some arrow i -> j
  bool cofiltered = false;
  bool poset_collapse_faithful = false;  // every Gamma_F hom-set has <= 1 arrow
  std::optional<std::size_t> initial;    // index into objects

  std::string object_name(const SiteCategory& c, std::size_t i) const;
};

DiagramOfF diagram_of(const SiteCategory& c);

/// Checks the pointed-atomic-site axioms on (C, F):
///   i) every arrow is a strict epimorphism (operationalized as surjectivity
///      of the carrier map, which is what strictness amounts to in G-sets;
///      the report records this assumption),
///  ii) every F-value is non-empty,
/// iii) F preserves strict epimorphisms,
///  iv) Gamma_F is cofiltered, and moreover a poset (hom-sets of Gamma_F are
///      at most singletons); F is faithful and reflects isomorphisms.
Report verify_atomic_site(const SiteCategory& c);

}  // namespace locgal

#endif

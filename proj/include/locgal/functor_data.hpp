#ifndef LOCGAL_FUNCTOR_DATA_HPP
#define LOCGAL_FUNCTOR_DATA_HPP

#include <memory>
#include <string>
#include <vector>

#include "locgal/site_category.hpp"

namespace locgal {

/// A finite category: objects, arrows (identities included) and a total
/// composition table over composable pairs.
struct FiniteCategory {
  struct Arrow {
    uint32_t src = 0, dst = 0;
    std::string name;
  };

  std::vector<std::string> object_names;
  std::vector<Arrow> arrows;
  std::vector<uint32_t> identity;             // per object
  std::vector<std::vector<int32_t>> compose;  // compose[g][f] = g after f, -1 if not composable

  std::size_t n_objects() const { return object_names.size(); }
  int32_t composed(uint32_t g, uint32_t f) const { return compose[g][f]; }
  std::vector<uint32_t> hom(uint32_t x, uint32_t y) const;

  /// Identities, unit laws, composability and associativity.
  void validate() const;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// A set-valued functor on a finite category, as value sizes plus one map
/// table per arrow. Functoriality is validated separately so deliberately
/// corrupted tables can be exercised by negative controls.
struct FunctorData {
  CategoryPtr cat;
  std::vector<uint32_t> sizes;
  std::vector<std::vector<uint16_t>> maps;

  void validate() const;
};

/// The category underlying a G-set site, with arrows in hom-set listing
/// order, plus its underlying-set functor.
struct SiteFunctor {
  CategoryPtr cat;
  FunctorData underlying;
  // (src, dst, index-in-hom) for every arrow id
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> arrow_origin;
};
SiteFunctor functor_of_site(const SiteCategory& c);

/// The hom functor [A, -].
FunctorData hom_functor(const CategoryPtr& cat, uint32_t a);

/// All natural transformations f => g: per transformation, one component
/// table per object. Deterministic order.
std::vector<std::vector<std::vector<uint16_t>>> natural_transformations(const FunctorData& f,
                                                                        const FunctorData& g);
std::vector<std::vector<std::vector<uint16_t>>> natural_isomorphisms(const FunctorData& f,
                                                                     const FunctorData& g);

/// All natural relations f -|- g: families R_X of subsets of FX x GX with
/// (Ff x Gf)(R_X) contained in R_Y. Exponential; small instances only.
std::size_t count_natural_relations(const FunctorData& f, const FunctorData& g);

}  // namespace locgal

#endif

#ifndef LOCGAL_NAT_LOCALE_HPP
#define LOCGAL_NAT_LOCALE_HPP

#include <tuple>

#include "locgal/functor_data.hpp"
#include "locgal/site.hpp"
#include "locgal/wraith.hpp"

namespace locgal {

/// The locale of natural relations/transformations/bijections between two
/// set-valued functors, presented on the preorder D_{F delta G} whose
/// objects are the pairs (X, (x0, x1)) with x0 in FX, x1 in GX, ordered by
/// (X,(x0,x1)) <= (Y,(y0,y1)) iff some arrow f: X -> Y satisfies
/// Ff(x0) = y0 and Gf(x1) = y1. Cover schemas are instantiated objectwise
/// exactly as in the function/bijection locales.
struct NatLocale {
  WraithKind kind = WraithKind::Relations;
  FunctorData f, g;
  Site site;
  std::vector<std::size_t> offset;  // per object: first generator index

  std::size_t gen(uint32_t obj, uint16_t x0, uint16_t x1) const {
    return offset[obj] + static_cast<std::size_t>(x0) * g.sizes[obj] + x1;
  }
  std::tuple<uint32_t, uint16_t, uint16_t> gen_info(std::size_t gen_index) const;
  std::size_t n_generators() const { return site.base().size(); }

  Bitset gen_mask(std::size_t gen_index) const {
    Bitset m(n_generators());
    m.set(gen_index);
    return m;
  }
};

NatLocale nat_locale(WraithKind kind, FunctorData f, FunctorData g);

/// lAut(F) = the natural-bijection locale of F with itself.
inline NatLocale laut_locale(const FunctorData& f) {
  return nat_locale(WraithKind::Bijections, f, f);
}

}  // namespace locgal

#endif

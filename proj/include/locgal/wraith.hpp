#ifndef LOCGAL_WRAITH_HPP
#define LOCGAL_WRAITH_HPP

#include <cstdint>
#include <vector>

#include "locgal/frame_morphism.hpp"
#include "locgal/group.hpp"
#include "locgal/gset.hpp"
#include "locgal/report.hpp"
#include "locgal/site.hpp"

namespace locgal {

enum class WraithKind { Relations, Functions, Bijections };

const char* to_string(WraithKind k);

/// The locale of relations/functions/bijections between two finite sets,
/// presented on the discrete base X x Y with generators <x|y>. Functions add
/// the u (univalued) and e (everywhere defined) cover schemas, bijections
/// also i (injective) and s (surjective); instantiated schemas are
/// deduplicated.
struct WraithSite {
  WraithKind kind = WraithKind::Relations;
  std::size_t nx = 0, ny = 0;
  Site site;

  std::size_t gen(std::size_t x, std::size_t y) const { return x * ny + y; }
};

WraithSite wraith_site(WraithKind kind, std::size_t nx, std::size_t ny);

/// lAut(X) = lBij(X, X).
inline WraithSite laut_site(std::size_t nx) {
  return wraith_site(WraithKind::Bijections, nx, nx);
}

/// The site with no generators; its frame is the two-element frame.
Site point_site();

/// Composition inverse image m*: src = L(X,Y), factors L(X,Z) and L(Z,Y)
/// already combined into `tensor_site`. On generators,
/// m*<x|y> = join over z of <x|z> (tensor) <z|y>. Set `drop_term` to a
/// generator index of src to corrupt that generator's join by one term (a
/// negative control; skips validation).
FrameMorphism wraith_m(const WraithSite& src, const WraithSite& left, const WraithSite& right,
                       const Site& tensor_site, int drop_term = -1);

/// Unit inverse image e*: L(X,X) -> 2, top on the diagonal generators.
FrameMorphism wraith_e(const WraithSite& src, const Site& point);

/// Inversion inverse image: <x|y> -> <y|x>; bijections only.
FrameMorphism wraith_iota(const WraithSite& src, const WraithSite& dst);

/// Frame-equality verification of the localic monoid/groupoid laws on the
/// materialized frames: coassociativity through Z, both counit laws, and for
/// bijections the two inverse laws and iota-involutivity. `corrupt_m` drops
/// one composition term to exercise the negative control.
Report verify_groupoid_laws(WraithKind kind, std::size_t nx, std::size_t ny, std::size_t nz,
                            bool corrupt_m = false);

/// A finite group action presented by its inverse image on generators:
/// mu[x][y] = {g | g.x = y} as an element of the powerset frame of G. The
/// discrete locale on G stands in for the abstract localic group, which is
/// exact for finite groups.
struct ActionPresentation {
  GroupPtr group;
  std::size_t carrier = 0;
  std::vector<uint64_t> mu;  // mu[x * carrier + y]

  uint64_t mu_star(std::size_t x, std::size_t y) const { return mu[x * carrier + y]; }
};

struct ActionFromGSet {
  ActionPresentation presentation;
  Report equations;  // the action equations plus the u/e/i/s locale conditions
};

/// mu(x, y) = {g | g.x = y}, with the action equations verified and
/// recorded.
ActionFromGSet action_from_gset(const GSet& x);

/// The three action equations of a continuous group morphism into lAut(X),
/// in their finite inverse-image form, plus the cover conditions that make
/// mu* a locale morphism. The localic multiplication follows composition
/// order (the left factor acts first), so the group-side comparison reads
/// op(h, g).
Report verify_action_equations(const ActionPresentation& a);

/// The stabilizer mu*<x|x> as a subgroup mask; verified closed under
/// product and inverse.
uint64_t l_fix(const ActionPresentation& a, std::size_t x);

/// Transitivity in the localic sense: every mu*<x|y> is non-zero.
bool is_transitive(const ActionPresentation& a);

}  // namespace locgal

#endif

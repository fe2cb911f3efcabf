#ifndef LOCGAL_ENRICHMENT_HPP
#define LOCGAL_ENRICHMENT_HPP

#include <optional>

#include "locgal/entails.hpp"
#include "locgal/frame_morphism.hpp"
#include "locgal/nat_locale.hpp"
#include "locgal/report.hpp"

namespace locgal {

enum class Engine { Full, Lazy, Auto };

struct EnrichOptions {
  Engine engine = Engine::Auto;
  std::size_t budget = 1'000'000;
  std::size_t full_capacity = FreeInfLattice::kMaxGenerators;
  std::size_t max_object_size = SIZE_MAX;  // drop site objects larger than this
};

/// Localic Yoneda: phi: lFunc([A,-], F) -> FA (discrete) built from
/// phi_X(x, y) = {a in FA | Fx(a) = y}, and lambda back from
/// lambda{a} = #[(A, <id_A|a>)]. Verifies both are locale morphisms and
/// that both composites are identities, as frame equalities; cross-checks
/// the point count against natural-transformation enumeration.
Report yoneda_verify(const CategoryPtr& cat, uint32_t a, const FunctorData& f);

/// The automorphism variant: lBij([A,-],[B,-]) -> Iso[B,A] (discrete), with
/// the zero-forcing of non-isomorphisms #[(A, <id_A|a>)] = 0; for B = A the
/// localic group of points is matched against Aut(A)^op (point composition
/// in application order reverses arrow composition).
Report yoneda_auto_verify(const CategoryPtr& cat, uint32_t a, uint32_t b);

/// Structure maps of lAut(F), defined on generators through the lambda_X*
/// coprojections. The caller owns the sites; tensor_site must be
/// tensor(l.site, l.site).
FrameMorphism laut_m(const NatLocale& l, const Site& tensor_site);
FrameMorphism laut_e(const NatLocale& l, const Site& point);
FrameMorphism laut_iota(const NatLocale& l);

/// mu*(x0,x1) = #[(X,<x0|x1>)]: every arrow of the category must be a
/// morphism of actions, mu*<x|y> <= mu*<Ff x|Ff y>. Supplying override maps
/// (e.g. a corrupted arrow table) exercises the negative direction; the
/// offending arrow is reported.
Report mu_action_morphisms(const NatLocale& laut,
                           const std::vector<std::vector<uint16_t>>& override_maps = {});

/// Transitivity theorem: #[(X,<x0|x1>)] != 0 in lAut(F) for every object
/// and pair, decided by the chosen engine; undecided entries are reported
/// as such, never as passes.
Report verify_transitivity(const SiteCategory& c, const EnrichOptions& opt = {});

/// Lifting lemma: #[(X,<x0|x1>)] <= #[(Y,<y0|y1>)] holds iff some arrow f
/// has Ff(x0) = y0 and Ff(x1) = y1; additionally, whenever
/// lFix(x) <= lFix(y) the lifting arrow is unique (checked against hom
/// enumeration).
Report verify_lifting(const SiteCategory& c, const EnrichOptions& opt = {});

/// A functor between finite categories, for transition morphisms.
struct FunctorMap {
  CategoryPtr src, dst;
  std::vector<uint32_t> object_map;
  std::vector<uint32_t> arrow_map;
  void validate() const;
};

/// A site morphism given on generators by meet-expressions over the target
/// base; validates lazily so large targets need no materialization.
struct SiteGenMap {
  const Site* source = nullptr;
  const Site* target = nullptr;
  std::vector<Bitset> assign;  // per source generator

  Report validate(std::size_t budget = 1'000'000) const;
  FrameMorphism to_frame_morphism() const;
};

/// The transition morphism aut(T): given T: C -> D and a natural iso
/// theta: F => GT, sends [(X,<x0|x1>)] to [(TX,<theta x0|theta x1>)].
/// Rejects non-natural or non-bijective theta with a witness.
SiteGenMap aut_transition(const NatLocale& f_loc, const NatLocale& g_loc, const FunctorMap& t,
                          const std::vector<std::vector<uint16_t>>& theta);

/// Whether a generator trace satisfies the point conditions of the site.
bool is_point(const Site& site, const Bitset& trace);

/// Pullback of a target point along a generator meet-expression map.
Bitset pull_point(const SiteGenMap& m, const Bitset& target_trace);

/// Germ-colimit check for a chain of inclusions of natural-bijection sites:
/// stage generators embed order-preservingly and order-reflectingly, every
/// union generator is reached, and the union coverage is generated by the
/// stage covers.
Report colimit_inflattices(const std::vector<const NatLocale*>& stages,
                           const std::vector<SiteGenMap>& steps);

}  // namespace locgal

#endif

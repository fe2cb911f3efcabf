#ifndef LOCGAL_CHAIN_HPP
#define LOCGAL_CHAIN_HPP

#include <string>
#include <vector>

#include "locgal/group.hpp"
#include "locgal/gset.hpp"
#include "locgal/report.hpp"
#include "locgal/site_category.hpp"

namespace locgal {

/// A finite tower of finite groups with surjective transitions: a truncated
/// prodiscrete group. stages[0] is the coarsest quotient; transitions[i]
/// maps stages[i+1] onto stages[i]. Every transition is validated to be a
/// surjective homomorphism on construction.
class GroupChain {
public:
  GroupChain(std::vector<GroupPtr> stages, std::vector<std::vector<uint16_t>> transitions);

  std::size_t length() const { return stages_.size(); }
  const GroupPtr& stage(std::size_t i) const { return stages_[i]; }
  const std::vector<uint16_t>& transition(std::size_t i) const { return transitions_[i]; }

  /// Composite map stage `from` -> stage `to`, with to <= from.
  std::vector<uint16_t> composite(std::size_t from, std::size_t to) const;

  std::string describe() const;

private:
  std::vector<GroupPtr> stages_;
  std::vector<std::vector<uint16_t>> transitions_;
};

/// Action pulled back along a surjection t: G -> H. Rejects non-surjective t
/// naming an element outside the image.
GSet restrict_along(const GroupPtr& g, const std::vector<uint16_t>& t, const GSet& x);

/// Checks that restriction along t sends transitive objects to transitive
/// objects and is full and faithful on them (hom-count equality over all
/// pairs of transitive H-sets).
Report verify_bt_star(const GroupPtr& g, const std::vector<uint16_t>& t, const GroupPtr& h);

/// The colimit site of the tower: germs of transitive objects across stages.
/// Germ equality pushes both representatives to the top stage and tests
/// isomorphism there.
struct ColimitSite {
  struct Germ {
    std::size_t first_stage;
    std::size_t object_index;  // in that stage's site
    GSet at_top;
  };
  std::vector<SiteCategory> stage_sites;
  std::vector<Germ> germs;
  std::vector<std::vector<std::size_t>> germ_of;  // [stage][object] -> germ id
  Report checks;
};

ColimitSite colimit_site(const GroupChain& chain);

/// Least stage through which a transitive top-stage action factors: the
/// kernel of the composite transition must lie inside the action kernel.
/// The factored set has the same carrier; pushing it back to the top stage
/// recovers the action on the nose.
struct FactorResult {
  std::size_t stage;  // 0-based
  bool only_top;      // factors only at the top stage
  GSet factored;
  Report checks;
};

FactorResult factor_transitive(const GroupChain& chain, const GSet& x);

/// For every subgroup u of the top group, which stages alpha admit a
/// subgroup w with preimage(w) = u (possible exactly when ker(top -> alpha)
/// lies inside u).
Report cofinal_subgroups(const GroupChain& chain, std::size_t max_order = 24);

}  // namespace locgal

#endif

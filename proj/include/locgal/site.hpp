#ifndef LOCGAL_SITE_HPP
#define LOCGAL_SITE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locgal/bitset.hpp"
#include "locgal/inf_lattice.hpp"
#include "locgal/preorder.hpp"

namespace locgal {

/// One basic cover in presentation form: the target and every family member
/// are finite subsets of the base, denoting their meets in the free
/// inf-lattice. Family members must lie below the target; an empty family
/// forces the target to zero.
struct CoverSpec {
  Bitset target;
  std::vector<Bitset> family;
};

/// A site: a free inf-lattice presented by a base preorder, plus a coverage.
///
/// The presentation (base + subset-mask covers) is always available and
/// drives the lazy entailment engine. materialize() additionally builds the
/// lattice of subset classes, enabling exact frame computations; it is
/// bounded by FreeInfLattice::kMaxGenerators.
class Site {
public:
  Site(Preorder base, std::vector<CoverSpec> covers);

  const Preorder& base() const { return base_; }
  const std::vector<CoverSpec>& covers() const { return covers_; }

  void materialize() const;
  bool materialized() const { return lattice_.has_value(); }
  const FreeInfLattice& lattice() const;

  struct LatticeCover {
    uint32_t target;
    std::vector<uint32_t> family;
    Bitset target_downset;  // elements <= target
  };
  const std::vector<LatticeCover>& lattice_covers() const;

  /// Members of saturate(empty) — the zero frame element's downset.
  const Bitset& zero_members() const;

private:
  Preorder base_;
  std::vector<CoverSpec> covers_;
  mutable std::optional<FreeInfLattice> lattice_;
  mutable std::vector<LatticeCover> lattice_covers_;
  mutable std::optional<Bitset> zero_;
};

/// A frame element of a materialized site: a cover-saturated downset of
/// lattice elements, held as a bitmask over lattice indices.
struct FrameElement {
  const Site* site = nullptr;
  Bitset members;

  bool operator==(const FrameElement& o) const {
    return site == o.site && members == o.members;
  }
  bool operator!=(const FrameElement& o) const { return !(*this == o); }
};

/// Least saturated downset containing the given lattice elements. This is
/// the nucleus of the coverage: inflationary, monotone and idempotent.
FrameElement saturate(const Site& site, const std::vector<uint32_t>& seed);
FrameElement saturate(const Site& site, const Bitset& seed_members);

FrameElement frame_top(const Site& site);
FrameElement frame_zero(const Site& site);
/// saturate of the downset of a single lattice element.
FrameElement frame_principal(const Site& site, uint32_t element);

FrameElement frame_join(const FrameElement& a, const FrameElement& b);
FrameElement frame_meet(const FrameElement& a, const FrameElement& b);
bool frame_leq(const FrameElement& a, const FrameElement& b);
bool is_zero(const FrameElement& a);

/// A point of the locale: a cover-respecting meet-filter, recorded by its
/// trace on the generators. The trace determines the full filter.
struct LocalePoint {
  Bitset accepted;  // generators sent to 1

  /// Whether the subset-mask element [m] lies in the filter.
  bool accepts(const Site& site, const Bitset& m) const {
    return site.base().up_closure(m).is_subset_of(accepted);
  }
};

/// All points, in ascending trace order. Works on the presentation (no
/// materialization needed); bounded by `max_generators` since enumeration is
/// over generator subsets.
std::vector<LocalePoint> enumerate_points(const Site& site, std::size_t max_generators = 20);

}  // namespace locgal

#endif

#ifndef LOCGAL_FRAME_MORPHISM_HPP
#define LOCGAL_FRAME_MORPHISM_HPP

#include <string>
#include <vector>

#include "locgal/site.hpp"

namespace locgal {

/// A frame morphism out of a presented frame, given by its values on the
/// base generators. It extends to the whole frame by meets and joins: a
/// lattice element maps to the meet of its generators' images, a frame
/// element to the join over its members.
///
/// A generator assignment presents a valid morphism when it is monotone on
/// the base and sends each basic cover to a family joining to the image of
/// the cover's target.
class FrameMorphism {
public:
  static FrameMorphism checked(const Site& source, const Site& target,
                               std::vector<FrameElement> assign);
  static FrameMorphism unchecked(const Site& source, const Site& target,
                                 std::vector<FrameElement> assign);

  static FrameMorphism identity(const Site& site);
  /// g after f (f applied first).
  static FrameMorphism compose(const FrameMorphism& g, const FrameMorphism& f);

  /// Violations of the morphism conditions; empty when valid. Each entry
  /// names the offending order pair or cover.
  std::vector<std::string> violations() const;

  const Site& source() const { return *source_; }
  const Site& target() const { return *target_; }
  const FrameElement& assignment(std::size_t gen) const { return assign_[gen]; }

  /// Image of a single lattice element (the meet of its generators' images).
  FrameElement apply_element(uint32_t e) const;
  /// Image of a frame element (join over its members).
  FrameElement apply(const FrameElement& x) const;

private:
  FrameMorphism(const Site& source, const Site& target, std::vector<FrameElement> assign);

  const Site* source_;
  const Site* target_;
  std::vector<FrameElement> assign_;
  mutable std::vector<Bitset> meet_cache_;  // raw meets per source element
  mutable std::vector<bool> cached_;
};

/// Tensor of two presented sites: the free inf-lattice on the disjoint union
/// of the bases, with both coverages imported. The unit is the site on the
/// empty base.
Site tensor(const Site& a, const Site& b);

/// The coprojection a -> a (tensor) b as a frame morphism; `offset` is 0 for
/// the left part and a.base().size() for the right part.
FrameMorphism tensor_embed(const Site& part, const Site& tensor_site, std::size_t offset);

/// Tensor of morphisms: (f tensor g) on sources/targets already formed with
/// `tensor`. Source generators left of the split go through f, the rest
/// through g.
FrameMorphism tensor_of(const FrameMorphism& f, const FrameMorphism& g,
                        const Site& source_tensor, const Site& target_tensor);

}  // namespace locgal

#endif

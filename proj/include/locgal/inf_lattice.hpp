#ifndef LOCGAL_INF_LATTICE_HPP
#define LOCGAL_INF_LATTICE_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "locgal/preorder.hpp"

namespace locgal {

/// The free inf-lattice on a finite preorder: finite subsets of the base
/// ordered by the sigma-rule, one canonical representative per mutual-<=
/// class. Two subsets are mutually comparable exactly when they have the
/// same up-closure, so elements are keyed by up-closure masks.
///
/// Element indices are assigned by (popcount, numeric value) of the
/// representative mask, which puts the top (empty subset) at index 0 and
/// makes all downstream output byte-stable.
class FreeInfLattice {
public:
  static constexpr std::size_t kMaxGenerators = 16;

  // `max_generators` caps |base|; exceeding it raises CapacityError (larger
  // bases are served by the lazy entailment engine instead).
  explicit FreeInfLattice(Preorder base, std::size_t max_generators = kMaxGenerators);

  const Preorder& base() const { return base_; }
  std::size_t size() const { return rep_.size(); }
  uint32_t top() const { return 0; }

  /// Index of the class of a subset mask.
  uint32_t element_of(uint32_t subset_mask) const;
  /// eta(a): the class of the singleton {a}.
  uint32_t generator(std::size_t a) const { return gen_[a]; }

  uint32_t rep_mask(uint32_t e) const { return rep_[e]; }
  uint32_t closure_mask(uint32_t e) const { return closure_[e]; }

  bool leq(uint32_t a, uint32_t b) const {
    return (closure_[b] & ~closure_[a]) == 0;
  }
  uint32_t meet(uint32_t a, uint32_t b) const {
    return index_of_closure(closure_[a] | closure_[b]);
  }

  std::string describe(uint32_t e) const;

private:
  uint32_t index_of_closure(uint32_t c) const;
  uint32_t up_closure(uint32_t subset_mask) const;

  Preorder base_;
  std::vector<uint32_t> up_;       // per base element, up-set as mask
  std::vector<uint32_t> rep_;      // canonical subset mask per lattice element
  std::vector<uint32_t> closure_;  // up-closure mask per lattice element
  std::vector<uint32_t> gen_;      // eta image per base element
  std::unordered_map<uint32_t, uint32_t> by_closure_;
};

}  // namespace locgal

#endif

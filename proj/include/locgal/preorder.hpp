#ifndef LOCGAL_PREORDER_HPP
#define LOCGAL_PREORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "locgal/bitset.hpp"

namespace locgal {

/// A finite preorder: a reflexive, transitive relation on named elements.
/// Antisymmetry is not required, so distinct elements may be mutually
/// comparable.
class Preorder {
public:
  Preorder() = default;

  // Builds from an explicit relation and verifies reflexivity and
  // transitivity. `pairs` lists (i, j) with i <= j.
  static Preorder from_relation(std::vector<std::string> names,
                                const std::vector<std::pair<uint32_t, uint32_t>>& pairs);

  // Same, but applies the reflexive/transitive closure instead of rejecting.
  // `closure_added`, when non-null, receives the number of pairs the closure
  // introduced beyond the input.
  static Preorder closure_of(std::vector<std::string> names,
                             const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                             std::size_t* closure_added = nullptr);

  static Preorder discrete(std::vector<std::string> names);
  static Preorder discrete(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }

  /// All elements above `a`, including `a` itself.
  const Bitset& up_set(std::size_t a) const { return up_[a]; }

  /// Union of up-sets over a subset mask: {d | exists a in A, a <= d}.
  Bitset up_closure(const Bitset& subset) const;

  bool operator==(const Preorder& o) const {
    return names_ == o.names_ && up_ == o.up_;
  }

private:
  std::vector<std::string> names_;
  std::vector<Bitset> up_;  // up_[a].test(b) iff a <= b
};

/// The sigma-rule order on finite subsets of a preorder: [A] <= [B] iff every
/// b in B admits some a in A with a <= b. Subsets denote meets, so larger
/// subsets are smaller and the empty subset is the top.
bool free_leq(const Bitset& a, const Bitset& b, const Preorder& p);

}  // namespace locgal

#endif

#ifndef LOCGAL_GSET_HPP
#define LOCGAL_GSET_HPP

#include <memory>
#include <string>
#include <vector>

#include "locgal/group.hpp"

namespace locgal {

/// A finite set with a validated action of a finite group.
class GSet {
public:
  GSet(GroupPtr group, std::size_t size, std::vector<uint16_t> act,
       std::vector<std::string> point_names = {});

  static GSet trivial(GroupPtr group, std::size_t size);
  static GSet regular(GroupPtr group);
  /// Left cosets of H with left translation; cosets ordered by least member.
  static GSet cosets(GroupPtr group, uint64_t subgroup_mask);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return size_; }
  uint16_t act(uint16_t g, uint16_t x) const { return act_[g * size_ + x]; }
  const std::string& point_name(uint16_t x) const { return names_[x]; }

  std::vector<std::vector<uint16_t>> orbits() const;
  uint64_t stabilizer(uint16_t x) const;
  uint64_t action_kernel() const;
  bool is_transitive() const { return size_ > 0 && orbits().size() == 1; }

  /// Action pulled back along a homomorphism K -> G.
  GSet restricted_along(GroupPtr k, const std::vector<uint16_t>& hom) const;

  bool operator==(const GSet& o) const {
    return size_ == o.size_ && act_ == o.act_ && group_->same_table(*o.group_);
  }

private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<uint16_t> act_;
  std::vector<std::string> names_;
};

struct GSetMorphism {
  const GSet* source = nullptr;
  const GSet* target = nullptr;
  std::vector<uint16_t> map;
};

bool is_equivariant(const GSet& x, const GSet& y, const std::vector<uint16_t>& map);

/// The inverse-image characterization of equivariance: for all (p, q),
/// {g | g.p = q} is contained in {g | g.f(p) = f(q)}.
bool mu_star_monotone(const GSet& x, const GSet& y, const std::vector<uint16_t>& map);

/// All equivariant maps x -> y, in deterministic order. Enumeration is by
/// images of orbit representatives; a representative with stabilizer H may
/// go to any point fixed by H.
std::vector<GSetMorphism> hom_gsets(const GSet& x, const GSet& y);

bool is_bijective(const std::vector<uint16_t>& map, std::size_t target_size);

/// Any equivariant bijection x -> y, or empty if none.
std::vector<uint16_t> find_isomorphism(const GSet& x, const GSet& y);
inline bool isomorphic(const GSet& x, const GSet& y) {
  return x.size() == y.size() && !find_isomorphism(x, y).empty();
}

struct AutomorphismGroup {
  std::vector<std::vector<uint16_t>> maps;  // sorted tables
  FiniteGroup composition;                  // table[a][b] = maps[a] after maps[b]
};
AutomorphismGroup automorphism_group(const GSet& x);

}  // namespace locgal

#endif

#ifndef LOCGAL_GROUP_HPP
#define LOCGAL_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace locgal {

using Perm = std::vector<uint16_t>;

Perm parse_cycles(const std::string& text, std::size_t degree);
std::string cycle_string(const Perm& p);
Perm compose_perms(const Perm& f, const Perm& g);  // f after g

/// A finite group given by its Cayley table. The group laws are validated
/// exhaustively on construction. Element count is capped at 64 so subgroups
/// fit in one machine word.
class FiniteGroup {
public:
  static constexpr std::size_t kMaxOrder = 64;

  static FiniteGroup from_table(std::string name, const std::vector<std::vector<uint16_t>>& table,
                                std::vector<std::string> element_names = {});
  /// Closure of permutation generators; elements are sorted lexicographically
  /// (the identity always lands at index 0).
  static FiniteGroup from_permutations(std::string name, const std::vector<Perm>& generators,
                                       std::size_t degree);
  /// Z<n>, S2..S4, A3..A4, D3..D6, Q8, V4. "Z/4" is accepted for "Z4".
  static FiniteGroup builtin(const std::string& name);

  std::size_t order() const { return n_; }
  uint16_t op(uint16_t a, uint16_t b) const { return table_[a * n_ + b]; }
  uint16_t inv(uint16_t a) const { return inv_[a]; }
  uint16_t identity() const { return id_; }
  const std::string& name() const { return name_; }
  const std::string& element_name(uint16_t a) const { return elem_names_[a]; }

  bool same_table(const FiniteGroup& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

  // --- subgroup machinery (subgroups are element masks) ---

  uint64_t subgroup_closure(uint64_t seed) const;
  bool is_subgroup(uint64_t mask) const;
  uint64_t conjugate_subgroup(uint64_t mask, uint16_t g) const;
  bool is_normal(uint64_t mask) const;

  /// All subgroups, ascending as masks. Guarded by `max_order` on |G|.
  std::vector<uint64_t> all_subgroups(std::size_t max_order = 24) const;
  /// Conjugacy classes of subgroups; each class ascending, classes ordered by
  /// their least member.
  std::vector<std::vector<uint64_t>> subgroup_classes(std::size_t max_order = 24) const;

  std::string subgroup_name(uint64_t mask) const;

private:
  std::string name_;
  std::size_t n_ = 0;
  uint16_t id_ = 0;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inv_;
  std::vector<std::string> elem_names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Same elements, reversed multiplication.
FiniteGroup opposite(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  std::vector<uint16_t> projection;  // element of G -> element of G/N
};
/// Quotient by a normal subgroup; cosets are ordered by least member.
Quotient quotient_group(const FiniteGroup& g, uint64_t normal_mask);

/// A homomorphism as an image table indexed by source elements.
struct Homomorphism {
  std::vector<uint16_t> map;
  bool surjective = false;
};
/// Every homomorphism src -> dst, deterministic order.
std::vector<Homomorphism> all_homomorphisms(const FiniteGroup& src, const FiniteGroup& dst);

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                     const std::vector<uint16_t>& map);

/// Kernel mask of a homomorphism.
uint64_t kernel_of(const FiniteGroup& src, const std::vector<uint16_t>& map, uint16_t dst_identity);

}  // namespace locgal

#endif

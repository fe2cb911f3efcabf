#include "locgal/preorder.hpp"

#include "locgal/error.hpp"

namespace locgal {

namespace {

std::vector<Bitset> rows_from_pairs(std::size_t n,
                                    const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw ValidationError("preorder: pair index out of range");
    up[a].set(b);
  }
  return up;
}

// Warshall-style closure on up-set rows.
bool close_transitively(std::vector<Bitset>& up) {
  bool changed_any = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& row : up) {
      Bitset next = row;
      row.for_each([&](std::size_t b) { next |= up[b]; });
      if (next != row) {
        row = next;
        changed = changed_any = true;
      }
    }
  }
  return changed_any;
}

}  // namespace

Preorder Preorder::from_relation(std::vector<std::string> names,
                                 const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  Preorder p;
  p.names_ = std::move(names);
  p.up_ = rows_from_pairs(p.size(), pairs);
  auto closed = p.up_;
  if (close_transitively(closed))
    throw ValidationError("preorder: relation is not transitively closed");
  return p;
}

Preorder Preorder::closure_of(std::vector<std::string> names,
                              const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                              std::size_t* closure_added) {
  Preorder p;
  p.names_ = std::move(names);
  p.up_ = rows_from_pairs(p.size(), pairs);
  std::size_t before = 0;
  for (const auto& row : p.up_) before += row.count();
  close_transitively(p.up_);
  if (closure_added) {
    std::size_t after = 0;
    for (const auto& row : p.up_) after += row.count();
    *closure_added = after - before;
  }
  return p;
}

Preorder Preorder::discrete(std::vector<std::string> names) {
  return from_relation(std::move(names), {});
}

Preorder Preorder::discrete(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return discrete(std::move(names));
}

Bitset Preorder::up_closure(const Bitset& subset) const {
  Bitset out(size());
  subset.for_each([&](std::size_t a) { out |= up_[a]; });
  return out;
}

bool free_leq(const Bitset& a, const Bitset& b, const Preorder& p) {
  return b.is_subset_of(p.up_closure(a));
}

}  // namespace locgal

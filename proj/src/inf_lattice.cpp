#include "locgal/inf_lattice.hpp"

#include <algorithm>

#include "locgal/error.hpp"

namespace locgal {

FreeInfLattice::FreeInfLattice(Preorder base, std::size_t max_generators)
    : base_(std::move(base)) {
  const std::size_t n = base_.size();
  if (max_generators > kMaxGenerators) max_generators = kMaxGenerators;
  if (n > max_generators)
    throw CapacityError("free inf-lattice: base has " + std::to_string(n) +
                        " generators, bound is " + std::to_string(max_generators));

  up_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    uint32_t m = 0;
    base_.up_set(a).for_each([&](std::size_t b) { m |= uint32_t{1} << b; });
    up_[a] = m;
  }

  // Enumerate all subsets in (popcount, value) order; the first subset seen
  // with a given up-closure is the class representative.
  const uint32_t limit = uint32_t{1} << n;
  std::vector<uint32_t> order(limit);
  for (uint32_t m = 0; m < limit; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (uint32_t m : order) {
    uint32_t c = up_closure(m);
    if (by_closure_.emplace(c, static_cast<uint32_t>(rep_.size())).second) {
      rep_.push_back(m);
      closure_.push_back(c);
    }
  }

  gen_.resize(n);
  for (std::size_t a = 0; a < n; ++a) gen_[a] = element_of(uint32_t{1} << a);
}

uint32_t FreeInfLattice::up_closure(uint32_t subset_mask) const {
  uint32_t c = 0;
  uint32_t m = subset_mask;
  while (m) {
    c |= up_[static_cast<std::size_t>(__builtin_ctz(m))];
    m &= m - 1;
  }
  return c;
}

uint32_t FreeInfLattice::index_of_closure(uint32_t c) const {
  auto it = by_closure_.find(c);
  if (it == by_closure_.end())
    throw Error("free inf-lattice: internal closure lookup failed");
  return it->second;
}

uint32_t FreeInfLattice::element_of(uint32_t subset_mask) const {
  return index_of_closure(up_closure(subset_mask));
}

std::string FreeInfLattice::describe(uint32_t e) const {
  std::string out = "[";
  bool first = true;
  uint32_t m = rep_[e];
  while (m) {
    std::size_t a = static_cast<std::size_t>(__builtin_ctz(m));
    if (!first) out += ",";
    out += "<" + base_.name(a) + ">";
    first = false;
    m &= m - 1;
  }
  return out + "]";
}

}  // namespace locgal

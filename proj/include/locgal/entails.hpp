#ifndef LOCGAL_ENTAILS_HPP
#define LOCGAL_ENTAILS_HPP

#include <cstdint>
#include <vector>

#include "locgal/site.hpp"
#include "locgal/verdict.hpp"

namespace locgal {

struct EntailOptions {
  // Node-expansion budget for the reachable-expression graph.
  std::size_t budget = 1'000'000;
};

struct EntailResult {
  Verdict verdict = Verdict::Undecided;
  std::size_t nodes = 0;

  bool holds() const { return verdict == Verdict::Pass; }
};

/// Lazy coverage entailment: decides whether, in the frame presented by the
/// site, the meet-expression [element] lies below the join of the family.
/// No lattice is materialized: the engine explores only meet-expressions
/// reachable from the inputs through cover pullbacks, canonicalized by
/// up-closure, then takes a least fixpoint. Exceeding the budget yields
/// Undecided, never a wrong answer. Agrees with the bitset engine wherever
/// both apply.
EntailResult entails(const Site& site, const Bitset& element,
                     const std::vector<Bitset>& family, EntailOptions opt = {});

}  // namespace locgal

#endif

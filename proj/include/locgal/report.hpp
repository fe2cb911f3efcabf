#ifndef LOCGAL_REPORT_HPP
#define LOCGAL_REPORT_HPP

#include <string>
#include <vector>

#include "locgal/verdict.hpp"

namespace locgal {

struct Check {
  std::string name;
  Verdict verdict = Verdict::Undecided;
  std::string witness;  // what passed/failed, or why undecided
};

/// Verifier output: a list of named checks plus which engine produced them.
/// Reports carry no timing data so identical inputs yield identical bytes;
/// wall time goes to stderr instead.
struct Report {
  std::string title;
  std::string engine = "full";  // "full", "lazy(budget=N)", "none"
  std::string inputs_digest;    // set by the CLI from the resolved inputs
  std::vector<std::string> notes;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string witness = "") {
    checks.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(witness)});
  }
  void add(std::string name, Verdict v, std::string witness = "") {
    checks.push_back({std::move(name), v, std::move(witness)});
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.verdict != Verdict::Pass) return false;
    return true;
  }
  std::size_t count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.verdict == v) ++n;
    return n;
  }
  Verdict overall() const {
    if (count(Verdict::Fail)) return Verdict::Fail;
    if (count(Verdict::Undecided)) return Verdict::Undecided;
    return Verdict::Pass;
  }
};

}  // namespace locgal

#endif

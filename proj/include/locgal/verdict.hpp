#ifndef LOCGAL_VERDICT_HPP
#define LOCGAL_VERDICT_HPP

#include <string>

namespace locgal {

// Tri-state outcome. Undecided arises only from budget-bounded engines and
// is never counted as a pass.
enum class Verdict { Pass, Fail, Undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "undecided";
  }
}

}  // namespace locgal

#endif

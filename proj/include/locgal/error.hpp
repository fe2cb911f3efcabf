#ifndef LOCGAL_ERROR_HPP
#define LOCGAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace locgal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input fails a structural precondition (bad table, non-surjective map, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Instance exceeds a configured engine bound.
struct CapacityError : Error {
  using Error::Error;
};

}  // namespace locgal

#endif

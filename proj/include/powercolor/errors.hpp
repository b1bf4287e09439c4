#pragma once

#include <stdexcept>
#include <string>

namespace powercolor {

/// Malformed or invalid input (group spec, table, generators, format name).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A size or search-budget cap was hit.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A checked mathematical claim failed at runtime.
class TheoremViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace powercolor

#pragma once

#include <stdexcept>
#include <string>

namespace holoskew {

/// Input that fails a stated precondition or hypothesis: a bad group spec,
/// a map that is not a gamma function, a non-semidirect factorization, ...
class Rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold for every valid input was
/// observed to fail. Always a bug.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantBreach(what);
}

}  // namespace holoskew

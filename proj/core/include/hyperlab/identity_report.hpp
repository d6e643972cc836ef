#pragma once

#include <string>

namespace hyperlab {

/// Outcome of checking one instance of a closed-form identity.
template <class T>
struct IdentityReport {
  std::string identity;
  T lhs;
  T rhs;
  bool holds;
};

}  // namespace hyperlab

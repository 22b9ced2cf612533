// fixture.hpp - the supermarket KB and helpers shared by the test binaries
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "mprec/kb.hpp"
#include "mprec/path.hpp"

namespace fixture {

inline const char* kKb =
    "(eq-prior 0.001)(schema store- :prior 0.05)(schema supermarket :isa store- :prior 0.01)"
    "(schema supermarket-shopping :isa shopping :prior 0.02)(schema shopping :prior 0.05)"
    "(role supermarket-shopping store-of supermarket)(role shopping go-step go)(schema go :prior 0.1)";

// supermarket2 up the store-of slot, generalise to shopping, down go-step to go1
inline const char* kPath =
    "(inst supermarket2 supermarket :belief 0.9)"
    "(role supermarket-shopping store-of supermarket)"
    "(isa supermarket-shopping shopping)"
    "(role- shopping go-step go)"
    "(inst go1 go :belief 0.9)";

inline mprec::KnowledgeBase kb() { return mprec::load_kb(kKb); }

inline bool rel_close(double a, double b, double tol) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 || std::fabs(a - b) <= tol * scale;
}

// The path grammar restated as its four conditions, independent of the library.
inline bool conditions_hold(const std::vector<mprec::LinkKind>& k) {
  using mprec::LinkKind;
  bool any_role = false;
  for (LinkKind x : k) any_role |= x == LinkKind::RoleUp || x == LinkKind::RoleDown;
  if (!any_role) return false;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    if (k[i] == LinkKind::IsaUp && k[i + 1] == LinkKind::IsaDown) return false;
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      if (k[i] == LinkKind::RoleDown && k[j] == LinkKind::RoleUp) return false;
    }
  }
  return true;
}

}  // namespace fixture

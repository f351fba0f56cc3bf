#ifndef FUNDOM_VERIFY_HPP_
#define FUNDOM_VERIFY_HPP_

#include <string>
#include <vector>

#include "fundom/ctquiver.hpp"

namespace fundom {

struct VerifyItem {
  std::string label;
  std::string status;  // "pass", "fail", or "non-Dynkin: skipped"
  std::string detail;  // counterexample payload on failure
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_pass() const;  // no "fail" entries (skips allowed)
};

// Runs every structural property suite over one hereditary input; the
// enumeration-dependent checks are skipped with explicit markers when the
// quiver is not of Dynkin type.
VerifyReport verify_all(const Quiver& h, std::size_t mutation_cap = 100000);

}  // namespace fundom

#endif  // FUNDOM_VERIFY_HPP_

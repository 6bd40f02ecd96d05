#pragma once

#include "axtk/perm.hpp"

namespace axtk {

struct FixtureError : Error {
  using Error::Error;
};

// Named permutation groups used by the test suite and addressable from the
// command line as "fixture:<name>".  A few alternate spellings are accepted
// (e.g. "L2(11)" for "L2_11").
PermGroup fixture_group(const std::string& name);

// Canonical fixture names, for listings and error messages.
const std::vector<std::string>& fixture_names();

}  // namespace axtk

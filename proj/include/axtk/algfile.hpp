#pragma once

#include <iosfwd>
#include <string>

#include "axtk/algebra.hpp"
#include "axtk/catalog.hpp"
#include "axtk/perm.hpp"

namespace axtk {

// Text representation of an algebra, with optional named axes:
//
//   axtk-algebra 1
//   dim 3
//   field Q                  (or: field ext <c1> <c0>)
//   basis a0 a1 arho
//   sparse 1                 (optional; omitted product pairs read as zero)
//   structure
//   0 0 : 1 0 0
//   ...
//   end
//   form                     (optional block)
//   0 0 : 1
//   ...
//   end
//   axes                     (optional block)
//   a0 : 1 0 0
//   end
//
// All scalars serialize exactly ("p/q" or "p/q+r/s*w"); parsing reports the
// offending line.  parse(serialize(A)) reproduces A exactly.
struct AlgebraFile {
  Algebra algebra;
  std::vector<std::string> axis_names;
  std::vector<Vec> axes;
};

std::string serialize_algebra(const Algebra& alg,
                              const std::vector<std::string>& axis_names = {},
                              const std::vector<Vec>& axes = {},
                              bool sparse = false);

AlgebraFile parse_algebra_text(const std::string& text);
AlgebraFile load_algebra(const std::string& path);
void save_algebra(const std::string& path, const Algebra& alg,
                  const std::vector<std::string>& axis_names = {},
                  const std::vector<Vec>& axes = {}, bool sparse = false);

// Group files: the degree on the first line, then one generator per line in
// image notation ("1 2 0" maps 0->1, 1->2, 2->0).
std::string serialize_group(const PermGroup& g);
PermGroup parse_group_text(const std::string& text);
PermGroup load_group(const std::string& path);

// Law specs: "monster:<alpha>,<beta>", "almost_monster:<alpha>,<beta>",
// "jordan:<eta>", with exact rational parameters.
FusionLaw parse_law_spec(const std::string& spec);

}  // namespace axtk

#pragma once

#include <iosfwd>
#include <string>

#include "fuskit/permgroup.hpp"

namespace fuskit {

struct GroupSource {
  std::string label;  // display name
  PermGroupPtr group;
};

/// Group specification text: `degree: n`, `gens: <cycle>;<cycle>;...`,
/// optional `name: <string>`; `#` starts a comment; whitespace-insensitive.
GroupSource read_group_stream(std::istream& in, const std::string& label);
GroupSource read_group_file(const std::string& path);

/// Either `name:<catalog spec>` or a path to a group file.
GroupSource parse_group_source(const std::string& source);

}  // namespace fuskit

#pragma once

#include <iosfwd>
#include <string>

#include "tricensus/geometry.hpp"

namespace tricensus {

/// Text format: one point per line as `x y`, each coordinate an integer or
/// `num/den`; `#` starts a comment; blank lines are ignored.
PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);

void write_point_set(std::ostream& out, const PointSet& ps, const std::string& comment = "");
void write_point_set_file(const std::string& path, const PointSet& ps, const std::string& comment = "");

}  // namespace tricensus

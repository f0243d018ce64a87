#pragma once

#include <iosfwd>

#include "lifeline/model.hpp"

namespace lifeline {

/// Static snapshot: base square, robots coloured by role/light/alive,
/// visibility circles around alive launched robots, and the life line from
/// the base to the companion when one exists.
void write_svg(std::ostream& out, const Params& p, const Configuration& cf, std::size_t round);

}  // namespace lifeline

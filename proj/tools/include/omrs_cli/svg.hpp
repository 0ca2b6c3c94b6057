#ifndef OMRS_CLI_SVG_HPP
#define OMRS_CLI_SVG_HPP

#include <string>

#include "omrs/cross_section.hpp"

namespace omrs::cli {

struct SvgLabels {
  std::string region = "R";
  std::string across_third_side = "X";  // region across sides[2]
  std::string across_first_side = "T";  // region across sides[0]
};

/// Static figure of a cross-section: one line per hyperplane trace that
/// crosses the view, the distinguished region shaded, vertices v1..vN
/// counterclockwise with v1v2 on the first side.  Coordinates are printed
/// with 6 decimals.  Throws std::invalid_argument when the region has
/// fewer than 3 sides.
std::string emit_svg(const CrossSection& cs, const RootSlice& slice, const SvgLabels& labels = {});

}  // namespace omrs::cli

#endif  // OMRS_CLI_SVG_HPP

#ifndef OMRS_CROSS_SECTION_HPP
#define OMRS_CROSS_SECTION_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omrs/topes.hpp"

namespace omrs {

/// Affine slice {f : <f, u> = 1} of the rank-3 arrangement of a root slice,
/// in which one region R is a bounded convex polygon.
struct CrossSection {
  Vector u;
  /// Classes whose hyperplane meets the slicing plane (all of them; the
  /// functional is never parallel to a root).
  std::vector<std::size_t> line_classes;
  TopalSet region;
  /// Wall classes of R in counterclockwise order, seen from the side u
  /// points to.  sides[0] is the requested first side.
  std::vector<std::size_t> sides;
  /// vertices[k] is where side k starts, so side k runs from vertices[k] to
  /// vertices[k + 1 mod N].  Each lies on the plane <f, u> = 1.
  std::vector<Vector> vertices;
  /// Number of functionals tried before one worked.
  int attempts = 1;

  std::size_t side_count() const { return sides.size(); }
  /// Position of a class among the sides, if it is a wall of R.
  std::optional<std::size_t> side_of(std::size_t cls) const;
};

class CrossSectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds a cross-section bounding the region R of a realizable rank-3
/// matroid.  first_side must be a wall of R when given.  Throws
/// CrossSectionError when no admissible functional is found within the retry
/// budget or R is not a pointed region.
CrossSection make_cross_section(const OrientedMatroid& m, const TopalSet& region,
                                std::optional<std::size_t> first_side = std::nullopt, int retry_budget = 8);

/// Floating-point coordinates of points on the slicing plane in an
/// orthonormal basis (e1, e2) of u-perp with det(e1, e2, u) > 0.  Display
/// only.
std::vector<std::pair<double, double>> plane_coordinates(const CrossSection& cs, const std::vector<Vector>& points);

}  // namespace omrs

#endif  // OMRS_CROSS_SECTION_HPP

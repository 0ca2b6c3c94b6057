#ifndef OMRS_TOPES_HPP
#define OMRS_TOPES_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omrs/oriented_matroid.hpp"

namespace omrs {

/// A subset meeting every *-class exactly once.  Stored as one bit per class:
/// bit k set means the element 2k (the positive root of class k) is chosen.
class TopalSet {
 public:
  TopalSet() = default;
  explicit TopalSet(ClassSet picks) : picks_(std::move(picks)) {}

  static TopalSet all_positive(std::size_t classes) { return TopalSet(ClassSet(classes).set()); }
  static TopalSet all_negative(std::size_t classes) { return TopalSet(ClassSet(classes)); }
  /// Throws std::invalid_argument unless x meets each class exactly once.
  static TopalSet from_elements(const ElementSet& x);

  const ClassSet& picks() const { return picks_; }
  std::size_t class_count() const { return picks_.size(); }
  bool positive(std::size_t cls) const { return picks_.test(cls); }
  /// Chosen element of a class.
  std::size_t element(std::size_t cls) const { return picks_.test(cls) ? 2 * cls : 2 * cls + 1; }
  ElementSet elements() const;
  TopalSet negated() const { return TopalSet(~picks_); }
  std::string to_string() const;

  friend bool operator==(const TopalSet& a, const TopalSet& b) { return a.picks_ == b.picks_; }
  friend bool operator!=(const TopalSet& a, const TopalSet& b) { return !(a == b); }
  /// Lexicographic on the pick bits in class order (class 0 first).
  friend bool operator<(const TopalSet& a, const TopalSet& b);

 private:
  ClassSet picks_;
};

using SeparationSet = ClassSet;
using Gallery = std::vector<TopalSet>;
using TopeSet = std::set<TopalSet>;

TopalSet flip(const TopalSet& r, std::size_t cls);
/// Classes on which the two topal sets differ.
SeparationSet separation(const TopalSet& a, const TopalSet& b);
bool adjacent(const TopalSet& a, const TopalSet& b);
/// S(r1, r3) is the disjoint union of S(r1, r2) and S(r2, r3).
bool is_between(const TopalSet& r1, const TopalSet& r2, const TopalSet& r3);

/// For reduced matroids a topal set is a tope iff it is closed.
bool is_tope(const OrientedMatroid& m, const TopalSet& r);

/// Classes x with flip(r, x) again a tope.  Requires r to be a tope.
ClassSet walls(const OrientedMatroid& m, const TopalSet& r);
/// Walls with respect to an explicit tope family.
ClassSet walls(const TopeSet& topes, const TopalSet& r);

class SeedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Breadth-first search over flips from a seed tope (the all-positive set
/// when none is given); complete when the tope graph is flip-connected,
/// which holds for realizable matroids.  Result in canonical order.
std::vector<TopalSet> enumerate_topes(const OrientedMatroid& m, std::optional<TopalSet> seed = std::nullopt);
/// Filters every topal set; only for up to 20 classes.
std::vector<TopalSet> enumerate_topes_exhaustive(const OrientedMatroid& m);

/// A gallery from r1 to r2 that flips each separating class once, moving
/// only through topes accepted by is_tope_fn.  nullopt when none exists.
std::optional<Gallery> minimal_gallery(const std::function<bool(const TopalSet&)>& is_tope_fn, const TopalSet& r1,
                                       const TopalSet& r2);
std::optional<Gallery> minimal_gallery(const OrientedMatroid& m, const TopalSet& r1, const TopalSet& r2);
std::optional<Gallery> minimal_gallery(const TopeSet& topes, const TopalSet& r1, const TopalSet& r2);

struct ReorientationReport {
  std::size_t topes = 0;
  std::size_t pairs_checked = 0;
  /// Non-adjacent pairs with no tope strictly between them.
  std::vector<std::pair<TopalSet, TopalSet>> violations;
  bool ok() const { return violations.empty(); }
};

ReorientationReport check_reorientation(const std::vector<TopalSet>& topes);
ReorientationReport check_reorientation(const OrientedMatroid& m);

/// Region count of the central arrangement dual to the given vectors, by
/// inserting hyperplanes one at a time: each new hyperplane adds as many
/// regions as its induced arrangement has.  Vectors must be pairwise
/// non-parallel and of length 2 or 3.
std::size_t count_regions_incremental(const std::vector<Vector>& normals);
std::size_t count_regions_incremental(const RootSlice& slice);

}  // namespace omrs

#endif  // OMRS_TOPES_HPP

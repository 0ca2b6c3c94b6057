#ifndef OMRS_BICLOSED_HPP
#define OMRS_BICLOSED_HPP

#include <vector>

#include "omrs/coxeter.hpp"
#include "omrs/topes.hpp"

namespace omrs {

/// Subset of the positive roots of a slice, one bit per class (bit k is the
/// positive root 2k).
using BiclosedSet = ClassSet;

/// Elements gamma of the slice with gamma = a*alpha + b*beta, a, b >= 0 not
/// both zero.  Endpoints are included.  Throws std::invalid_argument when
/// alpha and beta are dependent.
ElementSet rank2_span_members(const RootSlice& slice, std::size_t alpha, std::size_t beta);

/// Positive rank-2 spans of every independent pair of positive roots, kept
/// only where the span holds a root other than the endpoints.
class Rank2Structure {
 public:
  struct Constraint {
    std::size_t i = 0;
    std::size_t j = 0;
    ClassSet interior;  // span members other than i and j
  };

  explicit Rank2Structure(const RootSlice& slice);

  std::size_t class_count() const { return classes_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  /// Members of the positive span of classes i and j, as classes.
  ClassSet span(std::size_t i, std::size_t j) const;

  bool is_closed(const ClassSet& b) const;
  bool is_biclosed(const ClassSet& b) const { return is_closed(b) && is_closed(~b); }

 private:
  std::size_t classes_ = 0;
  std::vector<Constraint> constraints_;
};

bool is_biclosed(const RootSlice& slice, const BiclosedSet& b);

/// Every biclosed subset of the positive roots, found by backtracking in
/// depth order with rank-2 propagation.  Sorted like TopalSet.
std::vector<BiclosedSet> enumerate_biclosed(const RootSlice& slice);
std::vector<BiclosedSet> enumerate_biclosed(const Rank2Structure& structure);

/// B -> B ∪ -(positives not in B).  Throws std::invalid_argument unless B
/// is biclosed.
TopalSet quasitope_from_biclosed(const RootSlice& slice, const BiclosedSet& b);
/// Positive part of a topal set.  Throws std::invalid_argument unless it is
/// biclosed.
BiclosedSet biclosed_from_quasitope(const RootSlice& slice, const TopalSet& r);
bool is_quasitope(const RootSlice& slice, const TopalSet& r);

/// {alpha positive : w^-1(alpha) negative}.  Throws std::invalid_argument if
/// the slice has no form or is not closed under w^-1.
BiclosedSet inversion_set(const RootSlice& slice, const GroupElement& w);

struct CleanReport {
  std::size_t topes = 0;
  std::size_t quasitopes = 0;
  std::vector<TopalSet> tope_not_quasitope;  // would contradict tope => quasitope
  std::vector<TopalSet> quasitope_not_tope;  // the slice is not clean
  bool lemma_holds() const { return tope_not_quasitope.empty(); }
  bool clean() const { return tope_not_quasitope.empty() && quasitope_not_tope.empty(); }
};

/// Compares quasitopes with the topes of a realizable matroid.
CleanReport check_clean(const OrientedMatroid& m);
/// Same comparison against an explicit tope family.
CleanReport check_clean(const RootSlice& slice, const std::vector<TopalSet>& topes);

}  // namespace omrs

#endif  // OMRS_BICLOSED_HPP

#ifndef OMRS_COXETER_HPP
#define OMRS_COXETER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omrs/exact.hpp"

namespace omrs {

/// Coxeter matrix of rank 2 or 3.  An entry of kInfinity marks an infinite
/// bond; each infinite bond carries a rational parameter c <= -1 used as the
/// bilinear form value B(a_s, a_t).
struct CoxeterMatrix {
  static constexpr int kInfinity = 0;

  int rank = 0;
  std::vector<std::vector<int>> m;
  std::map<std::pair<int, int>, Rational> bond_params;  // keyed by (s, t), s < t

  /// Every violated invariant, one message per offending entry.  Empty when
  /// the matrix is valid.
  std::vector<std::string> validation_errors() const;
  /// Throws std::invalid_argument with the joined validation errors.
  void validate() const;

  /// Parameter of the infinite bond (s, t); -1 unless configured.
  Rational bond(int s, int t) const;
  bool is_infinite(int s, int t) const { return m[s][t] == kInfinity; }
  void set_bond(int s, int t, const Rational& c);

  /// Named types: A1xA1, A2, B2, G2, I2(m), A3, B3, H3, G2xA1, and the affine
  /// types A2~, C2~, G2~.  Also "universal3" (all bonds infinite).
  static CoxeterMatrix named(const std::string& name);
  static CoxeterMatrix dihedral(int m);
  static CoxeterMatrix from_entries(std::vector<std::vector<int>> entries);

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    return a.rank == b.rank && a.m == b.m && a.bond_params == b.bond_params;
  }
};

/// -cos(pi/m) for m in {2,3,4,5,6}.
FieldElement minus_cos_pi_over(int m);

/// B(a_s, a_t) = -cos(pi/m_st), or the bond parameter for infinite bonds.
Matrix bilinear_form(const CoxeterMatrix& cm);

/// True when the bilinear form is positive definite, i.e. W is finite.
bool is_finite_type(const CoxeterMatrix& cm);

/// s(v) = v - 2 B(a_s, v) a_s, coordinates in the simple-root basis.
Vector reflect(const Matrix& form, int s, const Vector& v);
Vector reflect(const CoxeterMatrix& cm, int s, const Vector& v);

/// Matrix of the simple reflection s acting on simple-root coordinates.
Matrix reflection_matrix(const Matrix& form, int s);

struct Root {
  Vector vec;  // canonical ray representative
  int depth = 1;
  bool positive = true;
};

/// Finite, negation-closed, reduced set of roots.
///
/// Elements are laid out in pairs: element 2k is the positive root of class k
/// and element 2k + 1 its negative, so the involution is `e ^ 1`.  Classes are
/// sorted by (depth, coordinates in decreasing lexicographic real order),
/// which is the fixed ordering beta_1, beta_2, ... of the positive roots.
class RootSlice {
 public:
  RootSlice() = default;
  /// Builds a slice from positive vectors (any positive scaling) and their
  /// depths.  Throws if two vectors share a ray or a vector mixes signs.
  RootSlice(int dimension, const std::vector<Vector>& positives, const std::vector<int>& depths,
            std::optional<Matrix> form = std::nullopt);

  int dimension() const { return dimension_; }
  std::size_t size() const { return roots_.size(); }
  std::size_t class_count() const { return roots_.size() / 2; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t element) const { return roots_[element]; }
  const Vector& vec(std::size_t element) const { return roots_[element].vec; }
  /// Indices of positive roots in the fixed order.
  const std::vector<std::size_t>& positive_order() const { return positive_order_; }

  /// Element whose ray contains v, if any.
  std::optional<std::size_t> find(const Vector& v) const;

  /// Bilinear form of the generating Coxeter system, when known.
  const std::optional<Matrix>& form() const { return form_; }

  /// Slice made of the given classes, in the given order.
  RootSlice subslice(const std::vector<std::size_t>& classes) const;
  /// The first n classes of the fixed order.
  RootSlice prefix(std::size_t n) const;

  /// Rank of the span of the given classes (all classes when empty list is
  /// not given).
  std::size_t span_rank(const std::vector<std::size_t>& classes) const;
  std::size_t span_rank() const;

 private:
  int dimension_ = 0;
  std::vector<Root> roots_;
  std::vector<std::size_t> positive_order_;
  std::map<Vector, std::size_t, ReprLess> lookup_;
  std::optional<Matrix> form_;
};

/// Roots of depth <= max_depth, found by breadth-first search from the
/// simple roots under simple reflections.  Throws std::logic_error if a
/// generated vector has coordinates of both signs.
RootSlice enumerate_roots(const CoxeterMatrix& cm, int max_depth);

/// Largest depth needed to reach every root of a finite system; enumerates
/// until no new root appears (callers must only pass finite types).
RootSlice enumerate_all_roots(const CoxeterMatrix& cm, int depth_cap = 256);

struct GroupElement {
  std::vector<int> word;  // shortlex-least
  Matrix action;          // product of simple reflection matrices along word
};

struct GroupEnumeration {
  std::vector<GroupElement> elements;  // shortlex order
  bool closed = false;                 // true when BFS ran out of new elements
};

/// Shortlex breadth-first enumeration of words up to max_length,
/// deduplicated by exact action matrix.
GroupEnumeration enumerate_group(const CoxeterMatrix& cm, int max_length);

/// Label of a root as w(a_s) with (w, s) shortlex-least, and a sign.
struct ReflectionLabel {
  std::vector<int> word;
  int generator = 0;
  int sign = 1;

  friend bool operator==(const ReflectionLabel&, const ReflectionLabel&) = default;
  friend bool operator<(const ReflectionLabel& a, const ReflectionLabel& b);
  std::string to_string() const;
};

class LabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labels for every element of a slice produced by enumerate_roots.  Throws
/// LabelError if the slice has no form or a root has no parent path.
std::vector<ReflectionLabel> canonical_label(const RootSlice& slice);

/// Permutation of the slice elements induced by a linear map, or nullopt if
/// the map sends some root outside the slice.
std::optional<std::vector<std::size_t>> element_permutation(const RootSlice& slice, const Matrix& action);

}  // namespace omrs

#endif  // OMRS_COXETER_HPP

#ifndef OMRS_ORIENTED_MATROID_HPP
#define OMRS_ORIENTED_MATROID_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omrs/coxeter.hpp"

namespace omrs {

/// Subset of a ground set, one bit per element.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;
/// Subset of the *-classes of a ground set, one bit per class.
using ClassSet = boost::dynamic_bitset<std::uint64_t>;

inline std::size_t star(std::size_t e) { return e ^ 1u; }
inline std::size_t class_of(std::size_t e) { return e >> 1; }

/// X* = {x* : x in X}.
ElementSet star_of(const ElementSet& x);
/// Classes met by X.
ClassSet classes_of(const ElementSet& x);
bool is_star_closed(const ElementSet& x);
std::vector<std::size_t> members(const boost::dynamic_bitset<std::uint64_t>& bits);
std::string format_set(const ElementSet& x, const std::vector<std::string>& names);

/// Ground set with its fixed-point-free involution.  Elements come in pairs
/// (2k, 2k + 1) that are swapped by *, so the involution is structural.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::size_t classes);
  GroundSet(std::size_t classes, std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  std::size_t class_count() const { return names_.size() / 2; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t e) const { return names_[e]; }
  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet(size()).set(); }

 private:
  std::vector<std::string> names_;
};

/// Closure operator on subsets of a ground set.  Implementations must be
/// pure and deterministic.
class ClosureOracle {
 public:
  virtual ~ClosureOracle() = default;
  virtual std::size_t ground_size() const = 0;
  virtual ElementSet closure(const ElementSet& x) const = 0;
  /// Walls of a tope, when the oracle can compute them directly.  nullopt
  /// means the caller must fall back to flip-and-close.
  virtual std::optional<ClassSet> tope_walls(const ElementSet& /*tope*/) const { return std::nullopt; }
};

/// Closure given by an arbitrary function; used for synthetic matroids.
class FunctionClosure : public ClosureOracle {
 public:
  using Fn = std::function<ElementSet(const ElementSet&)>;
  FunctionClosure(std::size_t ground_size, Fn fn) : size_(ground_size), fn_(std::move(fn)) {}
  std::size_t ground_size() const override { return size_; }
  ElementSet closure(const ElementSet& x) const override { return fn_(x); }

 private:
  std::size_t size_;
  Fn fn_;
};

/// cone(X) ∩ Γ for a reduced root slice of dimension 2 or 3.
///
/// Every supporting functional of a cone generated by slice vectors is
/// perpendicular to one (rank 2) or two (rank 3) of them, so the sign of
/// every slice vector against each such normal is tabulated once and closure
/// becomes a sweep over pairs of generators with bitset filtering.
class ConeClosure : public ClosureOracle {
 public:
  explicit ConeClosure(std::shared_ptr<const RootSlice> slice);

  std::size_t ground_size() const override { return slice_->size(); }
  ElementSet closure(const ElementSet& x) const override;
  std::optional<ClassSet> tope_walls(const ElementSet& tope) const override;

  const RootSlice& slice() const { return *slice_; }
  /// Classes lying in the plane spanned by classes i != j (rank 3 only).
  const ClassSet& coplanar(std::size_t i, std::size_t j) const { return pair(i, j).zero; }

 private:
  // Signs of one functional against every element.
  struct SignTable {
    ElementSet pos;
    ElementSet neg;
    ClassSet zero;
  };

  std::size_t pair_index(std::size_t i, std::size_t j) const;
  const SignTable& pair(std::size_t i, std::size_t j) const { return pairs_[pair_index(i, j)]; }
  SignTable make_table(const Vector& functional) const;
  void restrict_by(const SignTable& t, const ElementSet& x, ElementSet& allowed) const;

  std::shared_ptr<const RootSlice> slice_;
  std::size_t classes_ = 0;
  int dim_ = 0;
  bool essential_ = false;
  std::vector<SignTable> pairs_;   // rank 3: normals v_i x v_j, i < j
  std::vector<SignTable> lines_;   // rank 2: functionals det(v_i, .)
};

/// Carathéodory cone closure over an arbitrary list of vectors: gamma is in
/// cone(X) iff it is a nonnegative combination of at most rank-many
/// members of X, decided by exact solves.  Vectors may be parallel.
ElementSet cone_closure(const std::vector<Vector>& ground, const ElementSet& x);
ElementSet cone_closure(const RootSlice& slice, const ElementSet& x);

/// Oriented matroid (E, *, cx).
class OrientedMatroid {
 public:
  OrientedMatroid() = default;
  OrientedMatroid(GroundSet ground, std::shared_ptr<const ClosureOracle> oracle,
                  std::shared_ptr<const RootSlice> realization = nullptr);

  /// (Γ, -, cone_Γ) for a reduced root slice.
  static OrientedMatroid realizable(std::shared_ptr<const RootSlice> slice);
  static OrientedMatroid realizable(const RootSlice& slice);
  /// Cone closure on a possibly non-reduced vector family; elements 2k and
  /// 2k + 1 are v_k and -v_k.  Uses the Carathéodory closure.
  static OrientedMatroid from_vectors(const std::vector<Vector>& vectors);
  static OrientedMatroid synthetic(std::size_t classes, FunctionClosure::Fn fn);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::size_t class_count() const { return ground_.class_count(); }
  const ClosureOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const ClosureOracle> oracle_ptr() const { return oracle_; }
  const std::shared_ptr<const RootSlice>& realization() const { return realization_; }

  ElementSet closure(const ElementSet& x) const { return oracle_->closure(x); }
  bool is_closed(const ElementSet& x) const { return closure(x) == x; }
  ElementSet loops() const { return closure(ground_.empty_set()); }
  ElementSet empty_set() const { return ground_.empty_set(); }
  ElementSet full_set() const { return ground_.full_set(); }
  ElementSet singleton(std::size_t e) const;

 private:
  GroundSet ground_;
  std::shared_ptr<const ClosureOracle> oracle_;
  std::shared_ptr<const RootSlice> realization_;
};

inline bool is_closed(const OrientedMatroid& m, const ElementSet& x) { return m.is_closed(x); }
inline ElementSet loops(const OrientedMatroid& m) { return m.loops(); }

struct Reduction {
  OrientedMatroid reduced;
  /// Element of the reduced matroid for each original element; nullopt for
  /// loops.
  std::vector<std::optional<std::size_t>> quotient;
};

/// Removes loops and merges parallel classes cx(x) \ cx(∅).
Reduction reduce(const OrientedMatroid& m);

/// M restricted to a *-closed subset E': cx_{E'}(X) = cx(X) ∩ E'.  Classes
/// keep their relative order.  Throws std::invalid_argument if E' is not
/// *-closed.
OrientedMatroid restrict(const OrientedMatroid& m, const ElementSet& subset);
/// Restriction to ±{given classes}, in the given order.
OrientedMatroid restrict_to_classes(const OrientedMatroid& m, const std::vector<std::size_t>& classes);

struct AxiomWitness {
  std::string check;
  ElementSet set;
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;
  std::string describe(const GroundSet& ground) const;
};

struct AxiomReport {
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t subsets_checked = 0;
  /// Check name -> pass.  Names: extensive, monotone, idempotent, axiom1,
  /// axiom2, axiom3, axiom4 (vacuous on finite ground sets).
  std::vector<std::pair<std::string, bool>> results;
  std::vector<AxiomWitness> failures;  // first witness per failing check

  bool ok() const { return failures.empty(); }
  bool passed(const std::string& check) const;
};

struct AxiomCheckOptions {
  /// Exhaustive over the power set up to this many elements.
  std::size_t exhaustive_limit = 12;
  std::size_t random_samples = 10000;
  std::uint64_t seed = 20240601;
};

/// Checks closure-operator laws and axioms (1)-(3) of an oriented matroid.
AxiomReport check_axioms(const OrientedMatroid& m, const AxiomCheckOptions& options = {});
/// Same checks over an explicit list of subsets.
AxiomReport check_axioms(const OrientedMatroid& m, const std::vector<ElementSet>& samples);

}  // namespace omrs

#endif  // OMRS_ORIENTED_MATROID_HPP

#ifndef OMRS_VERIFY_HPP
#define OMRS_VERIFY_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "omrs/biclosed.hpp"
#include "omrs/coxeter.hpp"
#include "omrs/cross_section.hpp"
#include "omrs/oriented_matroid.hpp"
#include "omrs/topes.hpp"

namespace omrs {

/// Named fields describing one offending case.
using Witness = std::map<std::string, std::string>;

struct CheckResult {
  std::string name;
  std::string claim;  // property under test, in one line
  bool passed = true;
  std::size_t cases = 0;
  std::vector<Witness> witnesses;  // at most kMaxWitnesses

  static constexpr std::size_t kMaxWitnesses = 5;
  /// Counts one case; on failure keeps the witness if there is room.
  void record(bool ok, const std::function<Witness()>& witness);
  /// Marks a failure without counting a case.
  void fail(Witness witness);
};

struct VerificationReport {
  std::string subject;
  std::deque<CheckResult> checks;  // references stay valid as checks are added
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, bool> flags;

  bool ok() const;
  /// Existing check of that name, or a new one appended in order.
  CheckResult& check(const std::string& name, const std::string& claim = "");
  const CheckResult* find(const std::string& name) const;
  void merge(const VerificationReport& other, const std::string& prefix);
};

struct OmrsCheckOptions {
  std::size_t samples = 2000;
  std::uint64_t seed = 20240601;
  /// Sets checked against every usable group element in addition to the
  /// random ones.
  std::vector<ElementSet> extra_sets;
};

/// Equivariance under group elements that map the slice into itself, the
/// positive system being closed, and agreement with the cone closure on
/// sets spanning at most a plane.
VerificationReport check_omrs_axioms(const OrientedMatroid& m, const RootSlice& slice,
                                     const std::vector<GroupElement>& group, const OmrsCheckOptions& options = {});
VerificationReport check_omrs_axioms(const OrientedMatroid& m, const std::vector<GroupElement>& group,
                                     const OmrsCheckOptions& options = {});

/// Counting replay for a finite type: the translates of the positive system
/// are distinct topes, there are |W| biclosed sets, and topes coincide with
/// quasitopes.
VerificationReport verify_finite_uniqueness(const CoxeterMatrix& cm);

struct InductionOptions {
  int retry_budget = 8;
  /// Applied to the region family of prefix n before the local checks;
  /// lets tests corrupt the family.
  std::function<void(std::size_t n, TopeSet& regions)> tamper;
};

/// Replays the rank-3 induction over prefixes 1..n_max of the fixed order.
VerificationReport simulate_induction(const RootSlice& slice, std::size_t n_max, const InductionOptions& options = {});

/// Restriction tope counts over every triple of classes of a rank-3 slice.
VerificationReport check_triple_topes(const RootSlice& slice);

struct CompareOptions {
  std::size_t samples = 2000;
  std::uint64_t seed = 20240601;
};

/// Matches two realizations of one Coxeter matrix through canonical labels
/// and compares tope sets and sampled closures.  Throws
/// std::invalid_argument when the matrices differ in shape.
VerificationReport compare_realizations(const CoxeterMatrix& a, const CoxeterMatrix& b, int depth,
                                        const CompareOptions& options = {});

/// Random subset: usually a handful of elements, sometimes a quarter-dense
/// one.  Uses raw engine output only, so results are platform independent.
ElementSet random_subset(std::size_t ground, std::mt19937_64& rng);

}  // namespace omrs

#endif  // OMRS_VERIFY_HPP

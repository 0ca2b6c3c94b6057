#include "omrs/oriented_matroid.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace omrs {

ElementSet star_of(const ElementSet& x) {
  ElementSet out(x.size());
  for (auto e = x.find_first(); e != ElementSet::npos; e = x.find_next(e)) out.set(star(e));
  return out;
}

ClassSet classes_of(const ElementSet& x) {
  ClassSet out(x.size() / 2);
  for (auto e = x.find_first(); e != ElementSet::npos; e = x.find_next(e)) out.set(class_of(e));
  return out;
}

bool is_star_closed(const ElementSet& x) { return star_of(x) == x; }

std::vector<std::size_t> members(const boost::dynamic_bitset<std::uint64_t>& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for (auto e = bits.find_first(); e != ElementSet::npos; e = bits.find_next(e)) out.push_back(e);
  return out;
}

std::string format_set(const ElementSet& x, const std::vector<std::string>& names) {
  std::string s = "{";
  bool first = true;
  for (auto e = x.find_first(); e != ElementSet::npos; e = x.find_next(e)) {
    if (!first) s += ", ";
    s += e < names.size() ? names[e] : std::to_string(e);
    first = false;
  }
  return s + "}";
}

namespace {

ElementSet expand(const ClassSet& classes) {
  ElementSet out(2 * classes.size());
  for (auto c = classes.find_first(); c != ClassSet::npos; c = classes.find_next(c)) {
    out.set(2 * c);
    out.set(2 * c + 1);
  }
  return out;
}

std::vector<std::string> default_names(std::size_t classes) {
  std::vector<std::string> names;
  names.reserve(2 * classes);
  for (std::size_t k = 0; k < classes; ++k) {
    names.push_back("b" + std::to_string(k + 1));
    names.push_back("-b" + std::to_string(k + 1));
  }
  return names;
}

}  // namespace

GroundSet::GroundSet(std::size_t classes) : names_(default_names(classes)) {}

GroundSet::GroundSet(std::size_t classes, std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() != 2 * classes) throw std::invalid_argument("GroundSet: need one name per element");
}

// ---------------------------------------------------------------------------

ConeClosure::ConeClosure(std::shared_ptr<const RootSlice> slice)
    : slice_(std::move(slice)), classes_(slice_->class_count()), dim_(slice_->dimension()) {
  if (dim_ == 3) {
    pairs_.reserve(classes_ * (classes_ - (classes_ ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < classes_; ++i) {
      for (std::size_t j = i + 1; j < classes_; ++j) {
        pairs_.push_back(make_table(cross(slice_->vec(2 * i), slice_->vec(2 * j))));
      }
    }
    essential_ = slice_->span_rank() == 3;
  } else if (dim_ == 2) {
    for (std::size_t i = 0; i < classes_; ++i) {
      const Vector& a = slice_->vec(2 * i);
      lines_.push_back(make_table(Vector{-a[1], a[0]}));
    }
    essential_ = slice_->span_rank() == 2;
  } else {
    throw DimensionError("ConeClosure: slices must have dimension 2 or 3");
  }
}

std::size_t ConeClosure::pair_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return i * classes_ - i * (i + 1) / 2 + (j - i - 1);
}

ConeClosure::SignTable ConeClosure::make_table(const Vector& functional) const {
  SignTable t{ElementSet(2 * classes_), ElementSet(2 * classes_), ClassSet(classes_)};
  for (std::size_t k = 0; k < classes_; ++k) {
    const int s = dot(functional, slice_->vec(2 * k)).sign();
    if (s > 0) {
      t.pos.set(2 * k);
      t.neg.set(2 * k + 1);
    } else if (s < 0) {
      t.neg.set(2 * k);
      t.pos.set(2 * k + 1);
    } else {
      t.zero.set(k);
    }
  }
  return t;
}

void ConeClosure::restrict_by(const SignTable& t, const ElementSet& x, ElementSet& allowed) const {
  if (!x.intersects(t.neg)) allowed -= t.neg;
  if (!x.intersects(t.pos)) allowed -= t.pos;
}

ElementSet ConeClosure::closure(const ElementSet& x) const {
  if (x.size() != 2 * classes_) throw std::invalid_argument("ConeClosure: subset of the wrong ground set");
  const std::vector<std::size_t> cls = members(classes_of(x));
  if (cls.size() <= 1) return x;
  ElementSet allowed(2 * classes_);
  if (dim_ == 2) {
    allowed.set();
    for (std::size_t a : cls) restrict_by(lines_[a], x, allowed);
    return allowed;
  }
  const SignTable& first = pair(cls[0], cls[1]);
  bool planar = true;
  for (std::size_t c : cls) planar = planar && first.zero.test(c);
  if (!planar) {
    allowed.set();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) restrict_by(pair(cls[i], cls[j]), x, allowed);
    }
    return allowed;
  }
  // X spans a plane: stay inside it and cut by in-plane lines through each
  // generator, realised as the plane spanned by the generator and any class
  // off the plane.
  allowed = expand(first.zero);
  ClassSet off = ~first.zero;
  const auto witness = off.find_first();
  if (witness != ClassSet::npos) {
    for (std::size_t a : cls) restrict_by(pair(a, witness), x, allowed);
  } else {
    const Vector normal = cross(slice_->vec(2 * cls[0]), slice_->vec(2 * cls[1]));
    for (std::size_t a : cls) restrict_by(make_table(cross(normal, slice_->vec(2 * a))), x, allowed);
  }
  return allowed;
}

std::optional<ClassSet> ConeClosure::tope_walls(const ElementSet& tope) const {
  if (!essential_ || tope.size() != 2 * classes_) return std::nullopt;
  ClassSet walls(classes_);
  if (dim_ == 2) {
    for (std::size_t c = 0; c < classes_; ++c) {
      ElementSet others = tope;
      others.reset(2 * c);
      others.reset(2 * c + 1);
      if (!others.intersects(lines_[c].pos) || !others.intersects(lines_[c].neg)) walls.set(c);
    }
    return walls;
  }
  // Walls are the extreme rays of cone(tope); each lies on a supporting
  // plane spanned by two generators.
  for (std::size_t i = 0; i < classes_; ++i) {
    for (std::size_t j = i + 1; j < classes_; ++j) {
      const SignTable& t = pair(i, j);
      if (tope.intersects(t.neg) && tope.intersects(t.pos)) continue;
      const auto z0 = t.zero.find_first();
      const auto z1 = t.zero.find_next(z0);
      if (z0 != i || z1 != j) continue;  // each facet plane is visited once
      if (t.zero.count() == 2) {
        walls.set(i);
        walls.set(j);
        continue;
      }
      const ClassSet off = ~t.zero;
      const std::size_t w = off.find_first();
      const ElementSet on_plane = tope & expand(t.zero);
      for (auto c = t.zero.find_first(); c != ClassSet::npos; c = t.zero.find_next(c)) {
        ElementSet others = on_plane;
        others.reset(2 * c);
        others.reset(2 * c + 1);
        const SignTable& side = pair(c, w);
        if (!others.intersects(side.pos) || !others.intersects(side.neg)) walls.set(c);
      }
    }
  }
  return walls;
}

// ---------------------------------------------------------------------------

ElementSet cone_closure(const std::vector<Vector>& ground, const ElementSet& x) {
  ElementSet out = x;
  // 0 lies in every cone, the empty one included.
  for (std::size_t e = 0; e < ground.size(); ++e) {
    if (is_zero(ground[e])) out.set(e);
  }
  const std::vector<std::size_t> gens = members(x);
  if (gens.empty()) return out;
  const std::size_t dim = ground[gens[0]].size();
  auto nonnegative = [](const Vector& coeffs) {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElement& c) { return c.sign() >= 0; });
  };
  auto in_cone = [&](const Vector& gamma) {
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const auto s1 = solve_linear(Matrix::from_columns({ground[gens[a]]}), gamma);
      if (s1 && nonnegative(*s1)) return true;
      if (dim < 2) continue;
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        const auto s2 = solve_linear(Matrix::from_columns({ground[gens[a]], ground[gens[b]]}), gamma);
        if (s2 && nonnegative(*s2)) return true;
        if (dim < 3) continue;
        for (std::size_t c = b + 1; c < gens.size(); ++c) {
          const Matrix m = Matrix::from_columns({ground[gens[a]], ground[gens[b]], ground[gens[c]]});
          const auto s3 = solve_linear(m, gamma);
          if (s3 && nonnegative(*s3)) return true;
        }
      }
    }
    return false;
  };
  for (std::size_t e = 0; e < ground.size(); ++e) {
    if (!out.test(e) && in_cone(ground[e])) out.set(e);
  }
  return out;
}

ElementSet cone_closure(const RootSlice& slice, const ElementSet& x) {
  std::vector<Vector> ground;
  ground.reserve(slice.size());
  for (const auto& r : slice.roots()) ground.push_back(r.vec);
  return cone_closure(ground, x);
}

// ---------------------------------------------------------------------------

OrientedMatroid::OrientedMatroid(GroundSet ground, std::shared_ptr<const ClosureOracle> oracle,
                                 std::shared_ptr<const RootSlice> realization)
    : ground_(std::move(ground)), oracle_(std::move(oracle)), realization_(std::move(realization)) {
  if (oracle_->ground_size() != ground_.size()) throw std::invalid_argument("oracle and ground set sizes differ");
}

OrientedMatroid OrientedMatroid::realizable(std::shared_ptr<const RootSlice> slice) {
  auto oracle = std::make_shared<ConeClosure>(slice);
  GroundSet ground(slice->class_count());
  return OrientedMatroid(std::move(ground), std::move(oracle), std::move(slice));
}

OrientedMatroid OrientedMatroid::realizable(const RootSlice& slice) {
  return realizable(std::make_shared<const RootSlice>(slice));
}

OrientedMatroid OrientedMatroid::from_vectors(const std::vector<Vector>& vectors) {
  std::vector<Vector> ground;
  for (const auto& v : vectors) {
    ground.push_back(v);
    ground.push_back(-v);
  }
  auto fn = [ground](const ElementSet& x) { return cone_closure(ground, x); };
  return OrientedMatroid(GroundSet(vectors.size()), std::make_shared<FunctionClosure>(ground.size(), fn));
}

OrientedMatroid OrientedMatroid::synthetic(std::size_t classes, FunctionClosure::Fn fn) {
  return OrientedMatroid(GroundSet(classes), std::make_shared<FunctionClosure>(2 * classes, std::move(fn)));
}

ElementSet OrientedMatroid::singleton(std::size_t e) const {
  ElementSet s = empty_set();
  s.set(e);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

class TraceClosure : public ClosureOracle {
 public:
  TraceClosure(std::shared_ptr<const ClosureOracle> parent, std::vector<std::size_t> to_parent)
      : parent_(std::move(parent)), to_parent_(std::move(to_parent)) {}

  std::size_t ground_size() const override { return to_parent_.size(); }

  ElementSet closure(const ElementSet& x) const override {
    ElementSet lifted(parent_->ground_size());
    for (auto e = x.find_first(); e != ElementSet::npos; e = x.find_next(e)) lifted.set(to_parent_[e]);
    const ElementSet closed = parent_->closure(lifted);
    ElementSet out(to_parent_.size());
    for (std::size_t e = 0; e < to_parent_.size(); ++e) {
      if (closed.test(to_parent_[e])) out.set(e);
    }
    return out;
  }

 private:
  std::shared_ptr<const ClosureOracle> parent_;
  std::vector<std::size_t> to_parent_;
};

}  // namespace

OrientedMatroid restrict_to_classes(const OrientedMatroid& m, const std::vector<std::size_t>& classes) {
  std::vector<std::size_t> to_parent;
  std::vector<std::string> names;
  for (std::size_t c : classes) {
    if (c >= m.class_count()) throw std::out_of_range("restrict: class out of range");
    to_parent.push_back(2 * c);
    to_parent.push_back(2 * c + 1);
    names.push_back(m.ground().name(2 * c));
    names.push_back(m.ground().name(2 * c + 1));
  }
  std::shared_ptr<const RootSlice> realization;
  if (m.realization()) realization = std::make_shared<const RootSlice>(m.realization()->subslice(classes));
  auto oracle = std::make_shared<TraceClosure>(m.oracle_ptr(), std::move(to_parent));
  return OrientedMatroid(GroundSet(classes.size(), std::move(names)), std::move(oracle), std::move(realization));
}

OrientedMatroid restrict(const OrientedMatroid& m, const ElementSet& subset) {
  if (subset.size() != m.size()) throw std::invalid_argument("restrict: subset of the wrong ground set");
  if (!is_star_closed(subset)) throw std::invalid_argument("restrict: subset is not closed under the involution");
  return restrict_to_classes(m, members(classes_of(subset)));
}

Reduction reduce(const OrientedMatroid& m) {
  const ElementSet loop_set = m.loops();
  std::vector<std::optional<std::size_t>> quotient(m.size());
  std::vector<ElementSet> class_members;  // members of each reduced element
  std::map<ElementSet, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (loop_set.test(e) || quotient[e]) continue;
    const ElementSet cls = m.closure(m.singleton(e)) - loop_set;
    const ElementSet partner = m.closure(m.singleton(star(e))) - loop_set;
    if (cls.intersects(partner)) throw std::logic_error("reduce: x and x* are parallel; not an oriented matroid");
    const std::size_t k = class_members.size();
    class_members.push_back(cls);
    class_members.push_back(partner);
    names.push_back(m.ground().name(e));
    names.push_back(m.ground().name(star(e)));
    for (auto f = cls.find_first(); f != ElementSet::npos; f = cls.find_next(f)) quotient[f] = k;
    for (auto f = partner.find_first(); f != ElementSet::npos; f = partner.find_next(f)) quotient[f] = k + 1;
  }
  const std::size_t reduced_size = class_members.size();
  auto parent = m.oracle_ptr();
  auto fn = [parent, class_members, quotient, reduced_size, loop_set](const ElementSet& x) {
    ElementSet lifted = loop_set;
    for (auto e = x.find_first(); e != ElementSet::npos; e = x.find_next(e)) lifted |= class_members[e];
    const ElementSet closed = parent->closure(lifted);
    ElementSet out(reduced_size);
    for (auto e = closed.find_first(); e != ElementSet::npos; e = closed.find_next(e)) {
      if (quotient[e]) out.set(*quotient[e]);
    }
    return out;
  };
  OrientedMatroid reduced(GroundSet(reduced_size / 2, std::move(names)),
                          std::make_shared<FunctionClosure>(reduced_size, fn), m.realization());
  return {std::move(reduced), std::move(quotient)};
}

// ---------------------------------------------------------------------------

std::string AxiomWitness::describe(const GroundSet& ground) const {
  std::string s = check + ": X = " + format_set(set, ground.names());
  if (x) s += ", x = " + ground.name(*x);
  if (y) s += ", y = " + ground.name(*y);
  return s;
}

bool AxiomReport::passed(const std::string& check) const {
  for (const auto& [name, ok] : results) {
    if (name == check) return ok;
  }
  return false;
}

namespace {

class AxiomChecker {
 public:
  explicit AxiomChecker(const OrientedMatroid& m) : m_(m) {
    for (const char* name : {"extensive", "monotone", "idempotent", "axiom1", "axiom2", "axiom3"}) {
      status_.emplace_back(name, true);
    }
  }

  void check(const ElementSet& x) {
    ++checked_;
    const ElementSet cx = m_.closure(x);
    if (!x.is_subset_of(cx)) fail("extensive", x);
    if (m_.closure(cx) != cx) fail("idempotent", x);
    if (star_of(cx) != m_.closure(star_of(x))) fail("axiom1", x);
    for (std::size_t y = 0; y < m_.size(); ++y) {
      ElementSet with = x;
      with.set(star(y));
      const ElementSet cy = m_.closure(with);
      if (!cx.is_subset_of(cy)) fail("monotone", x, star(y));
      // (2) with the element y* added being x* for x = y.
      if (cy.test(y) && !cx.test(y)) fail("axiom2", x, y);
      const ElementSet gained = cy - cx;
      for (auto e = gained.find_first(); e != ElementSet::npos; e = gained.find_next(e)) {
        ElementSet other = x;
        other.reset(y);
        other.set(star(e));
        if (!m_.closure(other).test(y)) fail("axiom3", x, e, y);
      }
    }
  }

  AxiomReport finish(bool exhaustive, std::uint64_t seed) {
    AxiomReport report;
    report.exhaustive = exhaustive;
    report.seed = seed;
    report.subsets_checked = checked_;
    report.results = status_;
    report.results.emplace_back("axiom4", true);  // finite ground set
    report.failures = failures_;
    return report;
  }

 private:
  void fail(const std::string& name, const ElementSet& x, std::optional<std::size_t> a = std::nullopt,
            std::optional<std::size_t> b = std::nullopt) {
    for (auto& [n, ok] : status_) {
      if (n != name) continue;
      if (ok) failures_.push_back({name, x, a, b});
      ok = false;
    }
  }

  const OrientedMatroid& m_;
  std::vector<std::pair<std::string, bool>> status_;
  std::vector<AxiomWitness> failures_;
  std::size_t checked_ = 0;
};

}  // namespace

AxiomReport check_axioms(const OrientedMatroid& m, const std::vector<ElementSet>& samples) {
  AxiomChecker checker(m);
  for (const auto& x : samples) checker.check(x);
  return checker.finish(false, 0);
}

AxiomReport check_axioms(const OrientedMatroid& m, const AxiomCheckOptions& options) {
  AxiomChecker checker(m);
  const std::size_t n = m.size();
  if (n <= options.exhaustive_limit) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ElementSet x(n, bits);
      checker.check(x);
    }
    return checker.finish(true, options.seed);
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_samples; ++i) {
    ElementSet x(n);
    if (rng() % 4 == 3) {
      for (std::size_t e = 0; e < n; ++e) {
        if (rng() % 4 == 0) x.set(e);
      }
    } else {
      const std::size_t k = rng() % (std::min<std::size_t>(n, 6) + 1);
      for (std::size_t j = 0; j < k; ++j) x.set(rng() % n);
    }
    checker.check(x);
  }
  return checker.finish(false, options.seed);
}

}  // namespace omrs

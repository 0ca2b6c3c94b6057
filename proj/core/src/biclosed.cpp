#include "omrs/biclosed.hpp"

#include <algorithm>
#include <stdexcept>

namespace omrs {
namespace {

// Signs of (a, b) in gamma = a*alpha + b*beta, or nullopt when gamma is off
// the plane of alpha and beta.  Cramer's rule, keeping only signs.
std::optional<std::pair<int, int>> plane_coefficient_signs(const Vector& alpha, const Vector& beta,
                                                           const Vector& gamma) {
  if (alpha.size() == 2) {
    const int d = det2(alpha, beta).sign();
    return std::make_pair(det2(gamma, beta).sign() * d, det2(alpha, gamma).sign() * d);
  }
  const Vector n = cross(alpha, beta);
  if (!dot(n, gamma).is_zero()) return std::nullopt;
  return std::make_pair(dot(cross(gamma, beta), n).sign(), dot(cross(alpha, gamma), n).sign());
}

bool independent(const Vector& a, const Vector& b) {
  return a.size() == 2 ? !det2(a, b).is_zero() : !is_zero(cross(a, b));
}

}  // namespace

ElementSet rank2_span_members(const RootSlice& slice, std::size_t alpha, std::size_t beta) {
  const Vector& a = slice.vec(alpha);
  const Vector& b = slice.vec(beta);
  if (!independent(a, b)) throw std::invalid_argument("rank2_span_members: dependent roots");
  ElementSet out(slice.size());
  for (std::size_t e = 0; e < slice.size(); ++e) {
    const auto signs = plane_coefficient_signs(a, b, slice.vec(e));
    if (signs && signs->first >= 0 && signs->second >= 0) out.set(e);
  }
  return out;
}

Rank2Structure::Rank2Structure(const RootSlice& slice) : classes_(slice.class_count()) {
  for (std::size_t i = 0; i < classes_; ++i) {
    for (std::size_t j = i + 1; j < classes_; ++j) {
      const Vector& a = slice.vec(2 * i);
      const Vector& b = slice.vec(2 * j);
      ClassSet interior(classes_);
      for (std::size_t k = 0; k < classes_; ++k) {
        if (k == i || k == j) continue;
        const auto signs = plane_coefficient_signs(a, b, slice.vec(2 * k));
        if (signs && signs->first > 0 && signs->second > 0) interior.set(k);
      }
      if (interior.any()) constraints_.push_back({i, j, std::move(interior)});
    }
  }
}

ClassSet Rank2Structure::span(std::size_t i, std::size_t j) const {
  ClassSet out(classes_);
  out.set(i).set(j);
  const auto [lo, hi] = std::minmax(i, j);
  for (const auto& c : constraints_) {
    if (c.i == lo && c.j == hi) out |= c.interior;
  }
  return out;
}

bool Rank2Structure::is_closed(const ClassSet& b) const {
  for (const auto& c : constraints_) {
    if (b.test(c.i) && b.test(c.j) && !c.interior.is_subset_of(b)) return false;
  }
  return true;
}

bool is_biclosed(const RootSlice& slice, const BiclosedSet& b) { return Rank2Structure(slice).is_biclosed(b); }

namespace {

class BiclosedSearch {
 public:
  explicit BiclosedSearch(const Rank2Structure& s) : s_(s) {}

  std::vector<BiclosedSet> run() {
    const std::size_t n = s_.class_count();
    ClassSet in(n), out(n);
    if (propagate(in, out)) descend(in, out, 0);
    std::vector<TopalSet> sorted;
    sorted.reserve(found_.size());
    for (auto& b : found_) sorted.emplace_back(std::move(b));
    std::sort(sorted.begin(), sorted.end());
    std::vector<BiclosedSet> result;
    result.reserve(sorted.size());
    for (const auto& t : sorted) result.push_back(t.picks());
    return result;
  }

 private:
  // Unit propagation of i∧j ⇒ interior and ¬i∧¬j ⇒ ¬interior.  Returns false
  // on conflict.
  bool propagate(ClassSet& in, ClassSet& out) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : s_.constraints()) {
        const bool ii = in.test(c.i), ij = in.test(c.j);
        const bool oi = out.test(c.i), oj = out.test(c.j);
        if (ii && ij) {
          if (c.interior.intersects(out)) return false;
          if (!c.interior.is_subset_of(in)) {
            in |= c.interior;
            changed = true;
          }
        } else if (oi && oj) {
          if (c.interior.intersects(in)) return false;
          if (!c.interior.is_subset_of(out)) {
            out |= c.interior;
            changed = true;
          }
        } else {
          const bool some_out = c.interior.intersects(out);
          const bool some_in = c.interior.intersects(in);
          if (some_out && some_in) continue;
          if (some_out && (ii || ij)) {
            const std::size_t other = ii ? c.j : c.i;
            if (in.test(other)) return false;
            if (!out.test(other)) {
              out.set(other);
              changed = true;
            }
          } else if (some_in && (oi || oj)) {
            const std::size_t other = oi ? c.j : c.i;
            if (out.test(other)) return false;
            if (!in.test(other)) {
              in.set(other);
              changed = true;
            }
          }
        }
      }
    }
    return !in.intersects(out);
  }

  void descend(const ClassSet& in, const ClassSet& out, std::size_t next) {
    const std::size_t n = s_.class_count();
    while (next < n && (in.test(next) || out.test(next))) ++next;
    if (next == n) {
      if (s_.is_biclosed(in)) found_.push_back(in);
      return;
    }
    {
      ClassSet in2 = in, out2 = out;
      in2.set(next);
      if (propagate(in2, out2)) descend(in2, out2, next + 1);
    }
    {
      ClassSet in2 = in, out2 = out;
      out2.set(next);
      if (propagate(in2, out2)) descend(in2, out2, next + 1);
    }
  }

  const Rank2Structure& s_;
  std::vector<ClassSet> found_;
};

}  // namespace

std::vector<BiclosedSet> enumerate_biclosed(const Rank2Structure& structure) {
  return BiclosedSearch(structure).run();
}

std::vector<BiclosedSet> enumerate_biclosed(const RootSlice& slice) {
  return enumerate_biclosed(Rank2Structure(slice));
}

TopalSet quasitope_from_biclosed(const RootSlice& slice, const BiclosedSet& b) {
  if (b.size() != slice.class_count()) throw std::invalid_argument("quasitope_from_biclosed: size mismatch");
  if (!is_biclosed(slice, b)) throw std::invalid_argument("quasitope_from_biclosed: set is not biclosed");
  return TopalSet(b);
}

BiclosedSet biclosed_from_quasitope(const RootSlice& slice, const TopalSet& r) {
  if (!is_quasitope(slice, r)) throw std::invalid_argument("biclosed_from_quasitope: not a quasitope");
  return r.picks();
}

bool is_quasitope(const RootSlice& slice, const TopalSet& r) {
  return r.class_count() == slice.class_count() && is_biclosed(slice, r.picks());
}

BiclosedSet inversion_set(const RootSlice& slice, const GroupElement& w) {
  if (!slice.form()) throw std::invalid_argument("inversion_set: slice carries no bilinear form");
  const Matrix& form = *slice.form();
  BiclosedSet out(slice.class_count());
  for (std::size_t k = 0; k < slice.class_count(); ++k) {
    // action = s_1 ... s_k, so w^-1 applies s_1 first.
    Vector v = slice.vec(2 * k);
    for (int s : w.word) v = reflect(form, s, v);
    const auto image = slice.find(v);
    if (!image) throw std::invalid_argument("inversion_set: slice is not closed under the group element");
    if (*image % 2 == 1) out.set(k);
  }
  return out;
}

CleanReport check_clean(const RootSlice& slice, const std::vector<TopalSet>& topes) {
  const Rank2Structure structure(slice);
  CleanReport report;
  report.topes = topes.size();
  TopeSet quasitopes;
  for (auto& b : enumerate_biclosed(structure)) quasitopes.emplace(std::move(b));
  report.quasitopes = quasitopes.size();
  const TopeSet tope_set(topes.begin(), topes.end());
  for (const auto& t : tope_set) {
    if (!structure.is_biclosed(t.picks())) report.tope_not_quasitope.push_back(t);
  }
  for (const auto& q : quasitopes) {
    if (!tope_set.count(q)) report.quasitope_not_tope.push_back(q);
  }
  return report;
}

CleanReport check_clean(const OrientedMatroid& m) {
  if (!m.realization()) throw std::invalid_argument("check_clean: matroid has no realization");
  return check_clean(*m.realization(), enumerate_topes(m));
}

}  // namespace omrs

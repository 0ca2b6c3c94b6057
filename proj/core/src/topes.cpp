#include "omrs/topes.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace omrs {

TopalSet TopalSet::from_elements(const ElementSet& x) {
  ClassSet picks(x.size() / 2);
  for (std::size_t k = 0; k < picks.size(); ++k) {
    const bool p = x.test(2 * k);
    const bool n = x.test(2 * k + 1);
    if (p == n) throw std::invalid_argument("set is not topal at class " + std::to_string(k));
    if (p) picks.set(k);
  }
  return TopalSet(std::move(picks));
}

ElementSet TopalSet::elements() const {
  ElementSet x(2 * picks_.size());
  for (std::size_t k = 0; k < picks_.size(); ++k) x.set(element(k));
  return x;
}

std::string TopalSet::to_string() const {
  std::string s;
  s.reserve(picks_.size());
  for (std::size_t k = 0; k < picks_.size(); ++k) s += picks_.test(k) ? '+' : '-';
  return s;
}

bool operator<(const TopalSet& a, const TopalSet& b) {
  if (a.picks_.size() != b.picks_.size()) return a.picks_.size() < b.picks_.size();
  const ClassSet diff = a.picks_ ^ b.picks_;
  const auto first = diff.find_first();
  if (first == ClassSet::npos) return false;
  return !a.picks_.test(first);
}

TopalSet flip(const TopalSet& r, std::size_t cls) {
  ClassSet picks = r.picks();
  picks.flip(cls);
  return TopalSet(std::move(picks));
}

SeparationSet separation(const TopalSet& a, const TopalSet& b) { return a.picks() ^ b.picks(); }

bool adjacent(const TopalSet& a, const TopalSet& b) { return separation(a, b).count() == 1; }

bool is_between(const TopalSet& r1, const TopalSet& r2, const TopalSet& r3) {
  const SeparationSet s12 = separation(r1, r2);
  const SeparationSet s23 = separation(r2, r3);
  return !s12.intersects(s23) && (s12 | s23) == separation(r1, r3);
}

bool is_tope(const OrientedMatroid& m, const TopalSet& r) { return m.is_closed(r.elements()); }

ClassSet walls(const OrientedMatroid& m, const TopalSet& r) {
  if (auto fast = m.oracle().tope_walls(r.elements())) return *fast;
  ClassSet out(r.class_count());
  for (std::size_t c = 0; c < r.class_count(); ++c) {
    if (is_tope(m, flip(r, c))) out.set(c);
  }
  return out;
}

ClassSet walls(const TopeSet& topes, const TopalSet& r) {
  ClassSet out(r.class_count());
  for (std::size_t c = 0; c < r.class_count(); ++c) {
    if (topes.count(flip(r, c))) out.set(c);
  }
  return out;
}

std::vector<TopalSet> enumerate_topes(const OrientedMatroid& m, std::optional<TopalSet> seed) {
  const TopalSet start = seed ? *seed : TopalSet::all_positive(m.class_count());
  if (start.class_count() != m.class_count()) throw SeedError("seed has the wrong number of classes");
  if (!is_tope(m, start)) throw SeedError("seed " + start.to_string() + " is not a tope");
  TopeSet seen{start};
  std::deque<TopalSet> queue{start};
  while (!queue.empty()) {
    const TopalSet r = std::move(queue.front());
    queue.pop_front();
    const ClassSet w = walls(m, r);
    for (auto c = w.find_first(); c != ClassSet::npos; c = w.find_next(c)) {
      TopalSet next = flip(r, c);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<TopalSet> enumerate_topes_exhaustive(const OrientedMatroid& m) {
  const std::size_t n = m.class_count();
  if (n > 20) throw std::invalid_argument("enumerate_topes_exhaustive: more than 20 classes");
  std::vector<TopalSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    TopalSet r(ClassSet(n, bits));
    if (is_tope(m, r)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Gallery> minimal_gallery(const std::function<bool(const TopalSet&)>& is_tope_fn, const TopalSet& r1,
                                       const TopalSet& r2) {
  if (!is_tope_fn(r1) || !is_tope_fn(r2)) return std::nullopt;
  // Breadth-first over topes between r1 and r2; every step removes one
  // separating class, so any path found is minimal.
  std::map<TopalSet, TopalSet> parent;
  std::deque<TopalSet> queue{r1};
  parent.emplace(r1, r1);
  while (!queue.empty()) {
    const TopalSet r = queue.front();
    queue.pop_front();
    if (r == r2) {
      Gallery g{r2};
      for (TopalSet cur = r2; cur != r1;) {
        cur = parent.at(cur);
        g.push_back(cur);
      }
      std::reverse(g.begin(), g.end());
      return g;
    }
    const SeparationSet todo = separation(r, r2);
    for (auto c = todo.find_first(); c != ClassSet::npos; c = todo.find_next(c)) {
      TopalSet next = flip(r, c);
      if (parent.count(next) || !is_tope_fn(next)) continue;
      parent.emplace(next, r);
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

std::optional<Gallery> minimal_gallery(const OrientedMatroid& m, const TopalSet& r1, const TopalSet& r2) {
  return minimal_gallery([&m](const TopalSet& r) { return is_tope(m, r); }, r1, r2);
}

std::optional<Gallery> minimal_gallery(const TopeSet& topes, const TopalSet& r1, const TopalSet& r2) {
  return minimal_gallery([&topes](const TopalSet& r) { return topes.count(r) > 0; }, r1, r2);
}

ReorientationReport check_reorientation(const std::vector<TopalSet>& topes) {
  ReorientationReport report;
  report.topes = topes.size();
  const TopeSet index(topes.begin(), topes.end());
  for (std::size_t i = 0; i < topes.size(); ++i) {
    for (std::size_t j = i + 1; j < topes.size(); ++j) {
      ++report.pairs_checked;
      const SeparationSet s = separation(topes[i], topes[j]);
      if (s.count() <= 1) continue;
      bool found = false;
      // A tope adjacent to topes[i] across a separating class is strictly
      // between; otherwise scan for any tope whose separation from topes[i]
      // is a proper nonempty part of s.
      for (auto c = s.find_first(); c != ClassSet::npos && !found; c = s.find_next(c)) {
        found = index.count(flip(topes[i], c)) > 0;
      }
      for (std::size_t k = 0; k < topes.size() && !found; ++k) {
        if (k == i || k == j) continue;
        found = is_between(topes[i], topes[k], topes[j]);
      }
      if (!found) report.violations.emplace_back(topes[i], topes[j]);
    }
  }
  return report;
}

ReorientationReport check_reorientation(const OrientedMatroid& m) { return check_reorientation(enumerate_topes(m)); }

std::size_t count_regions_incremental(const std::vector<Vector>& normals) {
  std::size_t regions = 1;
  for (std::size_t n = 0; n < normals.size(); ++n) {
    const Vector& h = normals[n];
    if (h.size() == 2) {
      // Earlier lines all meet the new one at the origin.
      regions += n == 0 ? 1 : 2;
      continue;
    }
    if (h.size() != 3) throw DimensionError("count_regions_incremental: vectors must have length 2 or 3");
    // Distinct lines cut on the new plane by earlier planes.
    std::vector<std::size_t> representatives;
    for (std::size_t i = 0; i < n; ++i) {
      bool fresh = true;
      for (std::size_t r : representatives) {
        if (det3(h, normals[r], normals[i]).is_zero()) {
          fresh = false;
          break;
        }
      }
      if (fresh) representatives.push_back(i);
    }
    regions += representatives.empty() ? 1 : 2 * representatives.size();
  }
  return regions;
}

std::size_t count_regions_incremental(const RootSlice& slice) {
  std::vector<Vector> normals;
  for (std::size_t k = 0; k < slice.class_count(); ++k) normals.push_back(slice.vec(2 * k));
  return count_regions_incremental(normals);
}

}  // namespace omrs

#include "omrs/cross_section.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace omrs {

std::optional<std::size_t> CrossSection::side_of(std::size_t cls) const {
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (sides[k] == cls) return k;
  }
  return std::nullopt;
}

namespace {

bool parallel(const Vector& a, const Vector& b) { return is_zero(cross(a, b)); }

// Fixed perturbation directions, tried in turn.
const std::array<std::array<int, 3>, 4> kNudges{{{1, 2, 3}, {3, -1, 2}, {-2, 3, 1}, {1, -3, -2}}};

}  // namespace

CrossSection make_cross_section(const OrientedMatroid& m, const TopalSet& region, std::optional<std::size_t> first_side,
                                int retry_budget) {
  if (!m.realization()) throw CrossSectionError("cross-section needs a realizable matroid");
  const RootSlice& slice = *m.realization();
  if (slice.dimension() != 3) throw CrossSectionError("cross-section needs a rank-3 slice");

  const std::vector<std::size_t> wall_list = members(walls(m, region));
  const std::size_t n = wall_list.size();
  if (n < 3) throw CrossSectionError("region " + region.to_string() + " has fewer than 3 walls");
  if (first_side && std::find(wall_list.begin(), wall_list.end(), *first_side) == wall_list.end()) {
    throw CrossSectionError("class " + std::to_string(*first_side) + " is not a wall of " + region.to_string());
  }
  std::vector<Vector> w;  // signed wall vectors, the extreme rays of cone(R)
  for (std::size_t c : wall_list) w.push_back(slice.vec(region.element(c)));

  // Two walls bound a common side when every other wall lies strictly on
  // one side of their plane; the side's vertex is the plane normal, signed
  // to be nonnegative on the walls.
  std::vector<std::vector<std::size_t>> next(n);
  std::vector<std::vector<Vector>> corner(n, std::vector<Vector>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector normal = cross(w[a], w[b]);
      int side = 0;
      bool supporting = true;
      for (std::size_t c = 0; c < n && supporting; ++c) {
        if (c == a || c == b) continue;
        const int s = dot(normal, w[c]).sign();
        if (s == 0 || (side != 0 && s != side)) supporting = false;
        side = s;
      }
      if (!supporting) continue;
      if (side < 0) normal = -normal;
      next[a].push_back(b);
      next[b].push_back(a);
      corner[a][b] = corner[b][a] = normal;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (next[a].size() != 2) throw CrossSectionError("region " + region.to_string() + " is not a pointed polygon");
  }

  // Functional: sum of the walls, nudged off any root direction.
  Vector base(3);
  for (const auto& v : w) base = base + v;
  Vector u;
  int attempt = 0;
  for (; attempt < retry_budget; ++attempt) {
    u = base;
    if (attempt > 0) {
      const auto& g = kNudges[(attempt - 1) % kNudges.size()];
      const Rational eps(1, 1 << (2 + attempt));
      u = base + FieldElement(eps) * Vector{FieldElement(g[0]), FieldElement(g[1]), FieldElement(g[2])};
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b : next[a]) {
        if (dot(corner[a][b], u).sign() <= 0) ok = false;
      }
    }
    for (std::size_t k = 0; k < slice.class_count() && ok; ++k) {
      if (parallel(slice.vec(2 * k), u)) ok = false;
    }
    if (ok) break;
  }
  if (attempt == retry_budget) {
    throw CrossSectionError("no slicing functional for region " + region.to_string() + " after " +
                            std::to_string(retry_budget) + " attempts");
  }

  // Walk the cycle of sides starting at the requested one.
  const std::size_t start =
      first_side ? static_cast<std::size_t>(std::find(wall_list.begin(), wall_list.end(), *first_side) -
                                            wall_list.begin())
                 : 0;
  std::vector<std::size_t> cycle{start};
  for (std::size_t prev = start, cur = next[start][0]; cur != start;) {
    cycle.push_back(cur);
    const std::size_t nxt = next[cur][0] == prev ? next[cur][1] : next[cur][0];
    prev = cur;
    cur = nxt;
  }
  auto vertex = [&](std::size_t a, std::size_t b) {
    const Vector& f = corner[a][b];
    return dot(f, u).inverse() * f;
  };
  auto build_vertices = [&](const std::vector<std::size_t>& cyc) {
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < cyc.size(); ++k) vs.push_back(vertex(cyc[(k + cyc.size() - 1) % cyc.size()], cyc[k]));
    return vs;
  };
  std::vector<Vector> verts = build_vertices(cycle);
  Vector centre(3);
  for (const auto& v : verts) centre = centre + v;
  centre = FieldElement(Rational(1, static_cast<long>(verts.size()))) * centre;
  if (det3(verts[0] - centre, verts[1] - centre, u).sign() < 0) {
    std::reverse(cycle.begin() + 1, cycle.end());
    verts = build_vertices(cycle);
  }

  CrossSection cs;
  cs.u = u;
  for (std::size_t k = 0; k < slice.class_count(); ++k) cs.line_classes.push_back(k);
  cs.region = region;
  for (std::size_t idx : cycle) cs.sides.push_back(wall_list[idx]);
  cs.vertices = std::move(verts);
  cs.attempts = attempt + 1;
  return cs;
}

std::vector<std::pair<double, double>> plane_coordinates(const CrossSection& cs, const std::vector<Vector>& points) {
  std::array<double, 3> u{cs.u[0].to_double(), cs.u[1].to_double(), cs.u[2].to_double()};
  const double un = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  for (auto& x : u) x /= un;
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::fabs(u[i]) < std::fabs(u[axis])) axis = i;
  }
  std::array<double, 3> e1{0, 0, 0};
  e1[axis] = 1;
  const double d = e1[0] * u[0] + e1[1] * u[1] + e1[2] * u[2];
  for (std::size_t i = 0; i < 3; ++i) e1[i] -= d * u[i];
  const double en = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (auto& x : e1) x /= en;
  const std::array<double, 3> e2{u[1] * e1[2] - u[2] * e1[1], u[2] * e1[0] - u[0] * e1[2], u[0] * e1[1] - u[1] * e1[0]};
  std::vector<std::pair<double, double>> out;
  for (const auto& p : points) {
    const double x = p[0].to_double(), y = p[1].to_double(), z = p[2].to_double();
    out.emplace_back(x * e1[0] + y * e1[1] + z * e1[2], x * e2[0] + y * e2[1] + z * e2[2]);
  }
  return out;
}

}  // namespace omrs

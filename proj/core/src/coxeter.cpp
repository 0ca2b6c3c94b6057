#include "omrs/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace omrs {

namespace {

bool allowed_entry(int m) { return m == CoxeterMatrix::kInfinity || (m >= 2 && m <= 6); }

std::string entry_name(int s, int t) {
  std::ostringstream os;
  os << "m[" << s << "][" << t << "]";
  return os.str();
}

// Coordinates compared by real value, larger first.
bool coordinate_order(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

std::vector<std::string> CoxeterMatrix::validation_errors() const {
  std::vector<std::string> errors;
  if (rank != 2 && rank != 3) {
    errors.push_back("rank must be 2 or 3");
    return errors;
  }
  if (static_cast<int>(m.size()) != rank) {
    errors.push_back("matrix must have rank rows");
    return errors;
  }
  for (int s = 0; s < rank; ++s) {
    if (static_cast<int>(m[s].size()) != rank) {
      errors.push_back("row " + std::to_string(s) + " must have rank entries");
      return errors;
    }
  }
  for (int s = 0; s < rank; ++s) {
    if (m[s][s] != 1) errors.push_back(entry_name(s, s) + " must be 1");
    for (int t = s + 1; t < rank; ++t) {
      if (m[s][t] != m[t][s]) {
        errors.push_back("matrix is not symmetric: " + entry_name(s, t) + " != " + entry_name(t, s));
      }
      if (!allowed_entry(m[s][t])) {
        errors.push_back(entry_name(s, t) + " must be one of 2, 3, 4, 5, 6, inf");
      }
    }
  }
  for (const auto& [key, c] : bond_params) {
    const auto [s, t] = key;
    if (s < 0 || t < 0 || s >= rank || t >= rank || s >= t) {
      errors.push_back("bond parameter for invalid pair (" + std::to_string(s) + "," + std::to_string(t) + ")");
      continue;
    }
    if (m[s][t] != kInfinity) {
      errors.push_back("bond parameter given for finite bond " + entry_name(s, t));
    }
    if (c > -1) {
      errors.push_back("bond parameter must be <= -1 for " + entry_name(s, t) + " (got " + c.get_str() + ")");
    }
  }
  return errors;
}

void CoxeterMatrix::validate() const {
  const auto errors = validation_errors();
  if (errors.empty()) return;
  std::string joined;
  for (const auto& e : errors) {
    if (!joined.empty()) joined += "; ";
    joined += e;
  }
  throw std::invalid_argument(joined);
}

Rational CoxeterMatrix::bond(int s, int t) const {
  if (s > t) std::swap(s, t);
  const auto it = bond_params.find({s, t});
  return it == bond_params.end() ? Rational(-1) : it->second;
}

void CoxeterMatrix::set_bond(int s, int t, const Rational& c) {
  if (s > t) std::swap(s, t);
  bond_params[{s, t}] = c;
}

CoxeterMatrix CoxeterMatrix::from_entries(std::vector<std::vector<int>> entries) {
  CoxeterMatrix cm;
  cm.rank = static_cast<int>(entries.size());
  cm.m = std::move(entries);
  return cm;
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) { return from_entries({{1, m}, {m, 1}}); }

CoxeterMatrix CoxeterMatrix::named(const std::string& name) {
  constexpr int inf = kInfinity;
  if (name == "A1xA1") return dihedral(2);
  if (name == "A2") return dihedral(3);
  if (name == "B2") return dihedral(4);
  if (name == "I2(5)" || name == "H2") return dihedral(5);
  if (name == "G2" || name == "I2(6)") return dihedral(6);
  if (name == "I2(inf)" || name == "A1~") return dihedral(inf);
  if (name == "A3") return from_entries({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  if (name == "B3") return from_entries({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}});
  if (name == "H3") return from_entries({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
  if (name == "A1xA1xA1") return from_entries({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
  if (name == "G2xA1") return from_entries({{1, 6, 2}, {6, 1, 2}, {2, 2, 1}});
  if (name == "A2~") return from_entries({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  if (name == "C2~") return from_entries({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}});
  if (name == "G2~") return from_entries({{1, 6, 2}, {6, 1, 3}, {2, 3, 1}});
  if (name == "universal3") return from_entries({{1, inf, inf}, {inf, 1, inf}, {inf, inf, 1}});
  if (name == "(3,3,inf)") return from_entries({{1, 3, inf}, {3, 1, 3}, {inf, 3, 1}});
  throw std::invalid_argument("unknown Coxeter type: " + name);
}

FieldElement minus_cos_pi_over(int m) {
  switch (m) {
    case 2:
      return 0;
    case 3:
      return FieldElement(Rational(-1, 2));
    case 4:
      return FieldElement(Rational(-1, 2)) * FieldElement::sqrt_of(2);
    case 5:
      return FieldElement(Rational(-1, 4)) * (FieldElement(1) + FieldElement::sqrt_of(5));
    case 6:
      return FieldElement(Rational(-1, 2)) * FieldElement::sqrt_of(3);
    default:
      throw std::invalid_argument("cos(pi/m) is only available for m in {2,...,6}");
  }
}

Matrix bilinear_form(const CoxeterMatrix& cm) {
  cm.validate();
  Matrix b(cm.rank, cm.rank);
  for (int s = 0; s < cm.rank; ++s) {
    b(s, s) = 1;
    for (int t = 0; t < cm.rank; ++t) {
      if (s == t) continue;
      b(s, t) = cm.is_infinite(s, t) ? FieldElement(cm.bond(s, t)) : minus_cos_pi_over(cm.m[s][t]);
    }
  }
  return b;
}

bool is_finite_type(const CoxeterMatrix& cm) {
  const Matrix b = bilinear_form(cm);
  // Leading principal minors.
  if (b(0, 0).sign() <= 0) return false;
  const FieldElement d2 = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
  if (d2.sign() <= 0) return false;
  if (cm.rank == 2) return true;
  return det3(b.column(0), b.column(1), b.column(2)).sign() > 0;
}

Vector reflect(const Matrix& form, int s, const Vector& v) {
  FieldElement pairing;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (!v[t].is_zero() && !form(s, t).is_zero()) pairing += form(s, t) * v[t];
  }
  Vector out = v;
  if (!pairing.is_zero()) out[s] -= FieldElement(2) * pairing;
  return out;
}

Vector reflect(const CoxeterMatrix& cm, int s, const Vector& v) { return reflect(bilinear_form(cm), s, v); }

Matrix reflection_matrix(const Matrix& form, int s) {
  const std::size_t n = form.rows();
  Matrix r = Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) r(s, j) -= FieldElement(2) * form(s, j);
  return r;
}

// ---------------------------------------------------------------------------

RootSlice::RootSlice(int dimension, const std::vector<Vector>& positives, const std::vector<int>& depths,
                     std::optional<Matrix> form)
    : dimension_(dimension), form_(std::move(form)) {
  if (positives.size() != depths.size()) throw std::invalid_argument("RootSlice: one depth per root required");
  roots_.reserve(2 * positives.size());
  for (std::size_t k = 0; k < positives.size(); ++k) {
    if (static_cast<int>(positives[k].size()) != dimension) throw DimensionError("RootSlice: wrong vector length");
    bool pos_coord = false, neg_coord = false;
    for (const auto& x : positives[k]) {
      const int sg = x.sign();
      pos_coord |= sg > 0;
      neg_coord |= sg < 0;
    }
    if (pos_coord == neg_coord) {
      throw std::invalid_argument("RootSlice: " + to_string(positives[k]) + " is zero or mixes signs");
    }
    Vector pos = normalize_ray(positives[k]);
    Vector neg = -pos;
    if (lookup_.count(pos) || lookup_.count(neg)) {
      throw std::invalid_argument("RootSlice: duplicate ray " + to_string(pos));
    }
    lookup_.emplace(pos, 2 * k);
    lookup_.emplace(neg, 2 * k + 1);
    roots_.push_back({std::move(pos), depths[k], true});
    roots_.push_back({std::move(neg), depths[k], false});
    positive_order_.push_back(2 * k);
  }
}

std::optional<std::size_t> RootSlice::find(const Vector& v) const {
  if (is_zero(v)) return std::nullopt;
  const auto it = lookup_.find(normalize_ray(v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

RootSlice RootSlice::subslice(const std::vector<std::size_t>& classes) const {
  std::vector<Vector> vecs;
  std::vector<int> depths;
  for (std::size_t c : classes) {
    vecs.push_back(roots_.at(2 * c).vec);
    depths.push_back(roots_.at(2 * c).depth);
  }
  return RootSlice(dimension_, vecs, depths, form_);
}

RootSlice RootSlice::prefix(std::size_t n) const {
  std::vector<std::size_t> classes(std::min(n, class_count()));
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i] = i;
  return subslice(classes);
}

std::size_t RootSlice::span_rank(const std::vector<std::size_t>& classes) const {
  if (classes.empty()) return 0;
  std::vector<Vector> cols;
  for (std::size_t c : classes) cols.push_back(roots_.at(2 * c).vec);
  return rank(Matrix::from_columns(cols));
}

std::size_t RootSlice::span_rank() const {
  std::vector<std::size_t> all(class_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return span_rank(all);
}

// ---------------------------------------------------------------------------

RootSlice enumerate_roots(const CoxeterMatrix& cm, int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("enumerate_roots: max_depth must be >= 1");
  const Matrix form = bilinear_form(cm);
  const int n = cm.rank;
  std::map<Vector, int, ReprLess> seen;
  std::vector<std::vector<Vector>> levels(1);
  for (int s = 0; s < n; ++s) {
    Vector e(n);
    e[s] = 1;
    seen.emplace(e, 1);
    levels[0].push_back(std::move(e));
  }
  for (int depth = 2; depth <= max_depth && !levels.back().empty(); ++depth) {
    std::vector<Vector> next;
    for (const Vector& beta : levels.back()) {
      for (int s = 0; s < n; ++s) {
        Vector gamma = reflect(form, s, beta);
        bool any_pos = false;
        bool any_neg = false;
        for (const auto& x : gamma) {
          const int sg = x.sign();
          any_pos |= sg > 0;
          any_neg |= sg < 0;
        }
        if (any_pos && any_neg) {
          throw std::logic_error("positivity dichotomy violated by " + to_string(gamma));
        }
        if (any_neg) continue;  // s(a_s) = -a_s
        gamma = normalize_ray(gamma);
        if (seen.count(gamma)) continue;
        seen.emplace(gamma, depth);
        next.push_back(std::move(gamma));
      }
    }
    levels.push_back(std::move(next));
  }
  std::vector<Vector> positives;
  std::vector<int> depths;
  for (std::size_t d = 0; d < levels.size(); ++d) {
    auto level = levels[d];
    std::sort(level.begin(), level.end(), coordinate_order);
    for (auto& v : level) {
      positives.push_back(std::move(v));
      depths.push_back(static_cast<int>(d) + 1);
    }
  }
  return RootSlice(n, positives, depths, form);
}

RootSlice enumerate_all_roots(const CoxeterMatrix& cm, int depth_cap) {
  RootSlice previous = enumerate_roots(cm, 1);
  for (int depth = 2; depth <= depth_cap; ++depth) {
    RootSlice current = enumerate_roots(cm, depth);
    if (current.class_count() == previous.class_count()) return current;
    previous = std::move(current);
  }
  throw std::runtime_error("enumerate_all_roots: root count did not stabilise (infinite type?)");
}

GroupEnumeration enumerate_group(const CoxeterMatrix& cm, int max_length) {
  if (max_length < 0) throw std::invalid_argument("enumerate_group: max_length must be >= 0");
  const Matrix form = bilinear_form(cm);
  std::vector<Matrix> gens;
  for (int s = 0; s < cm.rank; ++s) gens.push_back(reflection_matrix(form, s));

  GroupEnumeration out;
  std::map<Matrix, std::size_t, ReprLess> seen;
  out.elements.push_back({{}, Matrix::identity(cm.rank)});
  seen.emplace(out.elements.back().action, 0);
  std::size_t level_begin = 0;
  for (int length = 1;; ++length) {
    const std::size_t level_end = out.elements.size();
    std::vector<GroupElement> fresh;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int s = 0; s < cm.rank; ++s) {
        Matrix action = out.elements[i].action * gens[s];
        if (seen.count(action)) continue;
        std::vector<int> word = out.elements[i].word;
        word.push_back(s);
        seen.emplace(action, seen.size());
        fresh.push_back({std::move(word), std::move(action)});
      }
    }
    if (fresh.empty()) {
      out.closed = true;
      break;
    }
    if (length > max_length) break;
    for (auto& g : fresh) out.elements.push_back(std::move(g));
    level_begin = level_end;
  }
  return out;
}

bool operator<(const ReflectionLabel& a, const ReflectionLabel& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.word != b.word) return a.word < b.word;
  if (a.generator != b.generator) return a.generator < b.generator;
  return a.sign < b.sign;
}

std::string ReflectionLabel::to_string() const {
  std::string s = sign > 0 ? "+" : "-";
  s += "[";
  for (int g : word) s += "s" + std::to_string(g);
  s += "](a" + std::to_string(generator) + ")";
  return s;
}

std::vector<ReflectionLabel> canonical_label(const RootSlice& slice) {
  if (!slice.form()) throw LabelError("canonical_label: slice carries no bilinear form");
  const Matrix& form = *slice.form();
  const int n = slice.dimension();
  std::vector<ReflectionLabel> labels(slice.size());
  std::vector<bool> done(slice.class_count(), false);
  // Classes are sorted by depth, so every parent is labelled before its child.
  for (std::size_t k = 0; k < slice.class_count(); ++k) {
    const Root& root = slice.root(2 * k);
    ReflectionLabel label;
    bool found = false;
    if (root.depth == 1) {
      for (int s = 0; s < n && !found; ++s) {
        Vector e(n);
        e[s] = 1;
        if (e == root.vec) {
          label.generator = s;
          found = true;
        }
      }
    } else {
      for (int r = 0; r < n && !found; ++r) {
        const auto parent = slice.find(reflect(form, r, root.vec));
        if (!parent || (*parent % 2) != 0) continue;
        const std::size_t pk = *parent / 2;
        if (slice.root(*parent).depth != root.depth - 1 || !done[pk]) continue;
        label = labels[*parent];
        label.word.insert(label.word.begin(), r);
        found = true;
      }
    }
    if (!found) throw LabelError("canonical_label: no construction path for root " + to_string(root.vec));
    label.sign = 1;
    labels[2 * k] = label;
    label.sign = -1;
    labels[2 * k + 1] = label;
    done[k] = true;
  }
  return labels;
}

std::optional<std::vector<std::size_t>> element_permutation(const RootSlice& slice, const Matrix& action) {
  std::vector<std::size_t> perm(slice.size());
  for (std::size_t e = 0; e < slice.size(); e += 2) {
    const auto image = slice.find(action * slice.vec(e));
    if (!image) return std::nullopt;
    perm[e] = *image;
    perm[e + 1] = *image ^ 1u;
  }
  return perm;
}

}  // namespace omrs

#include "omrs/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace omrs {

namespace {

constexpr int kPrimes[3] = {2, 3, 5};

int radicand(std::uint8_t mask) {
  int n = 1;
  for (int b = 0; b < 3; ++b) {
    if (mask & (1u << b)) n *= kPrimes[b];
  }
  return n;
}

std::uint8_t mask_of(int n) {
  std::uint8_t mask = 0;
  for (int b = 0; b < 3; ++b) {
    if (n % kPrimes[b] == 0) {
      mask |= static_cast<std::uint8_t>(1u << b);
      n /= kPrimes[b];
    }
  }
  if (n != 1) throw std::invalid_argument("sqrt_of: radicand must be a squarefree divisor of 30");
  return mask;
}

// floor(sqrt(n) * 2^bits)
mpz_class scaled_isqrt(int n, unsigned long bits) {
  mpz_class v = n;
  v <<= 2 * bits;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

}  // namespace

FieldElement::FieldElement(long value) {
  if (value != 0) terms_.push_back({0, Rational(value)});
}

FieldElement::FieldElement(const Rational& value) {
  if (value != 0) {
    Rational q = value;
    q.canonicalize();
    terms_.push_back({0, q});
  }
}

FieldElement FieldElement::sqrt_of(int n) {
  FieldElement out;
  out.terms_.push_back({mask_of(n), Rational(1)});
  return out;
}

FieldElement FieldElement::from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  q.canonicalize();
  return FieldElement(q);
}

Rational FieldElement::coefficient(int basis_position) const {
  const std::uint8_t mask = kBasisOrder[basis_position];
  for (const auto& t : terms_) {
    if (t.mask == mask) return t.coeff;
  }
  return Rational(0);
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value on an irrational element");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

int FieldElement::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) {
    return sgn(terms_[0].coeff);
  }
  for (unsigned long bits = 32;; bits *= 2) {
    Rational lo = 0;
    Rational hi = 0;
    mpz_class scale = 1;
    scale <<= bits;
    for (const auto& t : terms_) {
      if (t.mask == 0) {
        Rational exact = t.coeff * scale;
        lo += exact;
        hi += exact;
        continue;
      }
      const mpz_class s_lo = scaled_isqrt(radicand(t.mask), bits);
      const mpz_class s_hi = s_lo + 1;
      if (sgn(t.coeff) > 0) {
        lo += t.coeff * s_lo;
        hi += t.coeff * s_hi;
      } else {
        lo += t.coeff * s_hi;
        hi += t.coeff * s_lo;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

void FieldElement::add_scaled(const FieldElement& other, int factor) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].mask < other.terms_[j].mask)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].mask < terms_[i].mask) {
      merged.push_back({other.terms_[j].mask, factor * other.terms_[j].coeff});
      ++j;
    } else {
      Rational c = terms_[i].coeff + factor * other.terms_[j].coeff;
      if (c != 0) merged.push_back({terms_[i].mask, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  add_scaled(other, 1);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  if (other.terms_.empty()) return *this;
  add_scaled(other, -1);
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.is_rational() && b.is_rational()) {
    out.terms_.push_back({0, a.terms_[0].coeff * b.terms_[0].coeff});
    return out;
  }
  Rational acc[8];
  std::uint8_t used = 0;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const std::uint8_t mask = x.mask ^ y.mask;
      const int factor = radicand(x.mask & y.mask);
      acc[mask] += factor * (x.coeff * y.coeff);
      used |= static_cast<std::uint8_t>(1u << mask);
    }
  }
  for (std::uint8_t m = 0; m < 8; ++m) {
    if ((used & (1u << m)) && acc[m] != 0) out.terms_.push_back({m, acc[m]});
  }
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) { return *this = *this * other; }

FieldElement FieldElement::conjugate(std::uint8_t prime_bit) const {
  FieldElement out = *this;
  for (auto& t : out.terms_) {
    if (t.mask & prime_bit) t.coeff = -t.coeff;
  }
  return out;
}

FieldElement FieldElement::inverse() const {
  if (terms_.empty()) throw std::domain_error("division by zero field element");
  if (is_rational()) return FieldElement(Rational(1) / terms_[0].coeff);
  // Multiplying by the conjugate over each quadratic step of the tower
  // removes one prime at a time, leaving a rational norm.
  FieldElement numerator = 1;
  FieldElement reduced = *this;
  for (std::uint8_t bit : {std::uint8_t{4}, std::uint8_t{2}, std::uint8_t{1}}) {
    const FieldElement c = reduced.conjugate(bit);
    numerator *= c;
    reduced *= c;
  }
  return numerator * FieldElement(Rational(1) / reduced.rational_value());
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  if (other.is_rational()) {
    if (other.terms_.empty()) throw std::domain_error("division by zero field element");
    for (auto& t : terms_) t.coeff /= other.terms_[0].coeff;
    return *this;
  }
  return *this = *this * other.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mask != b.terms_[i].mask || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

bool repr_less(const FieldElement& a, const FieldElement& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].mask != b.terms_[i].mask) return a.terms_[i].mask < b.terms_[i].mask;
    const int c = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (c != 0) return c < 0;
  }
  return a.terms_.size() < b.terms_.size();
}

double FieldElement::to_double() const {
  double v = 0;
  for (const auto& t : terms_) v += t.coeff.get_d() * std::sqrt(static_cast<double>(radicand(t.mask)));
  return v;
}

std::string FieldElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int pos = 0; pos < 8; ++pos) {
    const std::uint8_t mask = kBasisOrder[pos];
    for (const auto& t : terms_) {
      if (t.mask != mask) continue;
      if (!first) os << (sgn(t.coeff) < 0 ? " - " : " + ");
      Rational shown = first ? t.coeff : Rational(abs(t.coeff));
      if (mask == 0) {
        os << shown.get_str();
      } else {
        if (shown == -1) {
          os << "-";
        } else if (shown != 1) {
          os << shown.get_str() << "*";
        }
        os << "sqrt" << radicand(mask);
      }
      first = false;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  Matrix m(columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) throw DimensionError("ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector dimension mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool repr_less(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (repr_less(a.data_[i], b.data_[i])) return true;
    if (repr_less(b.data_[i], a.data_[i])) return false;
  }
  return false;
}

// ---------------------------------------------------------------------------

FieldElement dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  FieldElement s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vector cross(const Vector& a, const Vector& b) {
  if (a.size() != 3 || b.size() != 3) throw DimensionError("cross: vectors must have length 3");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FieldElement det3(const Vector& a, const Vector& b, const Vector& c) { return dot(cross(a, b), c); }

FieldElement det2(const Vector& a, const Vector& b) {
  if (a.size() != 2 || b.size() != 2) throw DimensionError("det2: vectors must have length 2");
  return a[0] * b[1] - a[1] * b[0];
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vector operator*(const FieldElement& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool repr_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const FieldElement& x, const FieldElement& y) { return repr_less(x, y); });
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  FieldElement prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).sign() == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    }
    const FieldElement p = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(i, j) * p - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.cols() > 3) throw DimensionError("solve_linear: at most 3 unknowns");
  if (a.rows() != b.size()) throw DimensionError("solve_linear: right-hand side length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Matrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j <= cols; ++j) std::swap(m(r, j), m(pivot, j));
    }
    const FieldElement inv = m(r, c).inverse();
    for (std::size_t j = c; j <= cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElement f = m(i, c);
      for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!m(i, cols).is_zero()) return std::nullopt;
  }
  Vector x(cols);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = m(k, cols);
  return x;
}

Vector normalize_ray(const Vector& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const FieldElement scale = x.sign() > 0 ? x : -x;
    if (scale == FieldElement(1)) return v;
    const FieldElement inv = scale.inverse();
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * inv;
    return out;
  }
  throw std::invalid_argument("normalize_ray: zero vector");
}

}  // namespace omrs

#ifndef OMRS_EXACT_HPP
#define OMRS_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace omrs {

using Rational = mpq_class;

/// Exact element of the real field Q(sqrt2, sqrt3, sqrt5).
///
/// Stored as rational coefficients over the basis of square roots of
/// squarefree products of {2, 3, 5}.  Internally a basis element is named by
/// a 3-bit prime mask (bit 0 = 2, bit 1 = 3, bit 2 = 5), so sqrt6 is mask 3
/// and sqrt30 is mask 7.  Only nonzero coefficients are kept, sorted by
/// mask, which makes equality of values the same as equality of term lists.
class FieldElement {
 public:
  struct Term {
    std::uint8_t mask;
    Rational coeff;
  };

  /// Public basis order {1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30}
  /// expressed as prime masks.
  static constexpr std::uint8_t kBasisOrder[8] = {0, 1, 2, 4, 3, 5, 6, 7};

  FieldElement() = default;
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// sqrt(n) for squarefree n dividing 30.
  static FieldElement sqrt_of(int n);
  /// Parses "p/q" or an integer.
  static FieldElement from_string(const std::string& text);

  /// Coefficient of the i-th element of kBasisOrder.
  Rational coefficient(int basis_position) const;
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0);
  }
  /// Rational value; only valid when is_rational().
  Rational rational_value() const;

  /// Sign of the real value.  Zero is decided by the coefficient test, after
  /// which interval refinement with dyadic endpoints always terminates.
  int sign() const;

  FieldElement inverse() const;
  double to_double() const;
  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Total order on representations (not on real values); used as a map key.
  friend bool repr_less(const FieldElement& a, const FieldElement& b);

 private:
  // Applies the Galois automorphism negating sqrt(p) for every prime bit in
  // prime_bit.
  FieldElement conjugate(std::uint8_t prime_bit) const;
  void add_scaled(const FieldElement& other, int factor);

  std::vector<Term> terms_;
};

/// Real-value comparison helpers.
inline int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }
inline bool real_less(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& columns);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool repr_less(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vector helpers.  Lengths must agree; callers in this library only use
// vectors of the ambient rank.
FieldElement dot(const Vector& a, const Vector& b);
Vector cross(const Vector& a, const Vector& b);
FieldElement det3(const Vector& a, const Vector& b, const Vector& c);
FieldElement det2(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const FieldElement& s, const Vector& v);
bool is_zero(const Vector& v);
bool repr_less(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Comparator over representations, for ordered containers.
struct ReprLess {
  template <class T>
  bool operator()(const T& a, const T& b) const {
    return repr_less(a, b);
  }
};

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& a);

/// Some x with a * x = b, or nullopt when the system is inconsistent.  Free
/// variables are set to zero.  Requires a.cols() <= 3.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Canonical representative of the ray R_{>0} v: v divided by the absolute
/// value of its first nonzero coordinate.
Vector normalize_ray(const Vector& v);

}  // namespace omrs

#endif  // OMRS_EXACT_HPP

#ifndef FROBCERT_FIELDS_HPP
#define FROBCERT_FIELDS_HPP

// Exact arithmetic in K_e = F_p(t^{1/p^e}).
//
// Every level of the tower is itself a rational function field F_p(s) in a
// generator s with s^{p^e} = t, so elements are stored as reduced fractions of
// dense univariate polynomials over F_p in that generator. Moving up the tower
// is the substitution s_e = s_{e+1}^p; no modular reduction is ever needed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobcert/error.hpp"

namespace frobcert {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic modulo a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept;
  Residue add(Residue a, Residue b) const noexcept;
  Residue sub(Residue a, Residue b) const noexcept;
  Residue mul(Residue a, Residue b) const noexcept;
  Residue neg(Residue a) const noexcept;
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::uint64_t e) const noexcept;

 private:
  std::uint32_t p_;
};

/// Dense polynomial over F_p, coefficients low to high, no trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(std::uint32_t p) : p_(p) {}
  UniPoly(std::uint32_t p, std::vector<Residue> coeffs);

  static UniPoly constant(std::uint32_t p, Residue c);
  static UniPoly monomial(std::uint32_t p, Residue c, std::size_t degree);

  std::uint32_t characteristic() const noexcept { return p_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Residue leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Residue>& coeffs() const noexcept { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;

  UniPoly scaled(Residue k) const;
  UniPoly monic() const;
  /// Substitutes s -> s^k.
  UniPoly inflate(std::size_t k) const;
  UniPoly pow(std::uint64_t e) const;
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Exact quotient; the caller guarantees divisibility.
  UniPoly exact_div(const UniPoly& divisor) const;

  bool operator==(const UniPoly& o) const noexcept {
    return p_ == o.p_ && c_ == o.c_;
  }

  std::string to_string(char symbol) const;
  static UniPoly parse(std::uint32_t p, std::string_view text, char symbol);

 private:
  void trim() noexcept;

  std::uint32_t p_;
  std::vector<Residue> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Level e of the tower F_p(t) = K_0 < K_1 < ... with K_e = F_p(s), s^{p^e} = t.
struct FieldDesc {
  std::uint32_t p = 2;
  unsigned level = 0;

  /// p^level, the exponent with generator^q = t.
  std::uint64_t t_exponent() const noexcept;
  char symbol() const noexcept { return level == 0 ? 't' : 's'; }
  FieldDesc up() const noexcept { return FieldDesc{p, level + 1}; }

  bool operator==(const FieldDesc&) const = default;
};

/// Canonical fraction num/den: den monic, gcd(num, den) = 1, zero is 0/1.
class FieldElement {
 public:
  FieldElement(FieldDesc desc, UniPoly num, UniPoly den);
  FieldElement(FieldDesc desc, UniPoly num);

  static FieldElement zero(FieldDesc desc);
  static FieldElement one(FieldDesc desc);
  static FieldElement from_int(FieldDesc desc, std::int64_t v);
  /// The generator s of K_e (equal to t at level 0).
  static FieldElement generator(FieldDesc desc);
  /// The transcendental t = s^{p^e}.
  static FieldElement t(FieldDesc desc);

  const FieldDesc& desc() const noexcept { return desc_; }
  const UniPoly& numerator() const noexcept { return num_; }
  const UniPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// True when the element lies in F_p.
  bool is_constant() const noexcept {
    return num_.is_constant() && den_.is_one();
  }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const noexcept {
    return desc_ == o.desc_ && num_ == o.num_ && den_ == o.den_;
  }

  std::string to_string() const;
  static FieldElement parse(FieldDesc desc, std::string_view text);

 private:
  void check_same(const FieldElement& o) const;

  FieldDesc desc_;
  UniPoly num_;
  UniPoly den_;
};

/// c^p.
FieldElement frobenius_scalar(const FieldElement& c);

/// Coordinates [w_0..w_{p-1}] with c = sum_a w_a^p s^a.
std::vector<FieldElement> p_component_split(const FieldElement& c);

/// Same split over the subfield K^q for q = p^k: c = sum_{a<q} w_a^q s^a.
std::vector<FieldElement> q_component_split(const FieldElement& c,
                                            std::uint64_t q);

/// Image of c under K_e -> K_{e+1}, s_e = s_{e+1}^p.
FieldElement embed_up(const FieldElement& c);

using Vector = std::vector<FieldElement>;

Vector zero_vector(FieldDesc desc, std::size_t n);
bool is_zero_vector(const Vector& v);
Vector frobenius_vector(const Vector& v);

/// Matrix over K_e. Only nonzero entries are stored, row by row.
class Matrix {
 public:
  using Row = std::map<std::size_t, FieldElement>;

  Matrix(FieldDesc desc, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldDesc desc, std::size_t n);
  static Matrix from_rows(FieldDesc desc, std::size_t cols,
                          const std::vector<Vector>& rows);
  static Matrix from_columns(FieldDesc desc, std::size_t rows,
                             const std::vector<Vector>& cols);

  const FieldDesc& desc() const noexcept { return desc_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& v);
  void add_to(std::size_t i, std::size_t j, const FieldElement& v);
  const Row& row(std::size_t i) const { return rows_.at(i); }
  Vector column(std::size_t j) const;
  std::size_t nonzeros() const noexcept;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix transposed() const;
  /// Entrywise c -> c^p.
  Matrix frobenius_twist() const;
  /// Entrywise embed_up; the result lives at level + 1.
  Matrix embedded_up() const;

  bool operator==(const Matrix& o) const;

 private:
  FieldDesc desc_;
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Basis of the right null space, one vector per non-pivot column (that
/// coordinate set to 1), taken from the reduced row echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
/// A particular solution of m x = b with free coordinates zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace frobcert

#endif  // FROBCERT_FIELDS_HPP

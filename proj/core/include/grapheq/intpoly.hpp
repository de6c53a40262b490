#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grapheq {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficient k multiplies x^k. Trailing zeros are always stripped, so the
/// zero polynomial is the empty coefficient sequence and every nonzero
/// polynomial has a nonzero leading coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t exponent);
  /// The polynomial x.
  static IntPoly x();

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// std::nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const noexcept;

  /// Coefficient of x^k; zero beyond the degree.
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const BigInt& scalar) { return lhs *= scalar; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "1 + 9x + 27x^2".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Raised when an exact division has a nonzero remainder or a non-integral
/// quotient coefficient.
class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

/// Returns d with p == q * d. Synthetic division with an integrality check at
/// every step; throws DivisionError when q does not divide p over Z[x] and
/// std::invalid_argument when q is zero.
IntPoly poly_exact_div(const IntPoly& p, const IntPoly& q);

/// Non-throwing variant of poly_exact_div.
std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& q);

struct PrimitiveDecomposition {
  BigInt content;
  IntPoly primitive;
};

/// content = gcd(coefficients) * sign(leading); p == content * primitive.
PrimitiveDecomposition primitive_part(const IntPoly& p);

/// Nonnegative integer coefficients, p_0 = 1 and p_2 = C(p_1, 2) - p_1.
bool is_unicyclic_poly(const IntPoly& p);

/// Binomial coefficient; zero when k < 0 or k > n or n < 0.
BigInt binomial(long n, long k);

/// Number of independent k-sets of the cycle C_n (n >= 3).
BigInt cycle_coeff(unsigned n, unsigned k);
/// Number of independent k-sets of the path P_n (P_0 is the empty graph).
BigInt path_coeff(unsigned n, unsigned k);

IntPoly cycle_poly(unsigned n);
IntPoly path_poly(unsigned n);

/// Horner evaluation in double precision.
double eval_float(const IntPoly& p, double x);

}  // namespace grapheq

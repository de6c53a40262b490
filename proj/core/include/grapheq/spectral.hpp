#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "grapheq/intpoly.hpp"

namespace grapheq {

unsigned long euler_phi(unsigned long m);
/// Divisors of m in increasing order (m >= 1).
std::vector<unsigned long> divisors(unsigned long m);

/// Phi_m, by exact division of x^m - 1 by the smaller cyclotomic factors.
/// Memoized; safe to call concurrently. Throws std::invalid_argument for m = 0.
IntPoly cyclotomic_poly(unsigned long m);

/// Monic psi_m of degree phi(m)/2 with roots 2cos(2 pi k/m), gcd(k,m) = 1,
/// obtained from Phi_m(y) = y^(phi(m)/2) psi_m(y + 1/y). Requires m >= 3.
/// Throws std::logic_error if the fold is not exact.
IntPoly min_poly_2cos(unsigned long m);

/// f_n from psi_{2n}: shift x -> x - 2, reverse with alternating signs, take
/// the primitive part. Requires odd n >= 3; f_1 = 1 is handled by callers.
IntPoly f_poly_by_transform(unsigned long n);

/// f_n = I(C_n,x) / prod_{m | n, 1 < m < n} f_m, every step an exact division.
/// Throws DivisionError if a quotient is not exact.
IntPoly f_poly_by_division(unsigned long n);

enum class FactorRoute { Division, Transform };
std::string to_string(FactorRoute route);

struct FactorSet {
  unsigned long n = 0;
  /// Divisor m >= 3 of n -> f_m.
  std::map<unsigned long, IntPoly> factors;
  FactorRoute route = FactorRoute::Division;

  IntPoly product() const;
};

/// Factors of I(C_n,x) over the divisors m >= 3 of n. The product is checked
/// against I(C_n,x); a mismatch throws std::logic_error.
FactorSet factorize_cycle_poly(unsigned long n, FactorRoute route = FactorRoute::Division);

struct RootValue {
  unsigned long index = 0;  ///< i in 1..floor(n/2)
  unsigned long gcd = 0;    ///< gcd(2i - 1, n)
  double value = 0.0;       ///< c_i = -1 / (2 + 2 cos((2i - 1) pi / n))
};

struct RootSpec {
  unsigned long n = 0;
  std::vector<RootValue> roots;
};

/// Closed-form roots of I(C_n,x) for odd n >= 3.
RootSpec root_values(unsigned long n);

enum class RootSelection {
  All,       ///< every c_i (for I(C_n,x))
  Primitive  ///< c_i with gcd(2i - 1, n) = 1 (for f_n)
};

struct RootCheck {
  double max_residual = 0.0;
  double tolerance = 1e-9;
  /// Smallest gap between selected roots; +inf with fewer than two roots.
  double min_gap = 0.0;
  std::size_t checked = 0;
  bool pass = false;
};

/// Relative residual |f(c)| / (max|coeff| * max(1,|c|)^deg f) at each selected
/// root. Passes when every residual and no gap is below tolerance.
RootCheck check_roots(const IntPoly& f, const RootSpec& spec, RootSelection which,
                      double tolerance = 1e-9);

}  // namespace grapheq

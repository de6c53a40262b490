#include "grapheq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace grapheq {

unsigned long euler_phi(unsigned long m) {
  if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<unsigned long> divisors(unsigned long m) {
  if (m == 0) throw std::invalid_argument("divisors: m must be positive");
  std::vector<unsigned long> small;
  std::vector<unsigned long> large;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

IntPoly cyclotomic_poly(unsigned long m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly: m must be positive");
  static std::mutex mutex;
  static std::unordered_map<unsigned long, IntPoly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, m) - IntPoly{1};
  for (unsigned long d : divisors(m)) {
    if (d < m) p = poly_exact_div(p, cyclotomic_poly(d));
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(m, std::move(p)).first->second;
}

IntPoly min_poly_2cos(unsigned long m) {
  if (m < 3) throw std::invalid_argument("min_poly_2cos: m must be at least 3");
  const IntPoly phi = cyclotomic_poly(m);
  const std::size_t deg = *phi.degree();
  const std::size_t d = deg / 2;
  // Work with the Laurent polynomial y^-d Phi_m(y): entry k holds the
  // coefficient of y^k + y^-k (k > 0) or of y^0 (k = 0).
  std::vector<BigInt> sym(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    if (phi.coeff(d + k) != phi.coeff(d - k)) {
      throw std::logic_error("min_poly_2cos: cyclotomic polynomial is not palindromic");
    }
    sym[k] = phi.coeff(d + k);
  }
  // Peel off a_k (y + 1/y)^k from the top; (y + 1/y)^k contributes
  // C(k, j) to y^(k - 2j).
  std::vector<BigInt> a(d + 1);
  for (std::size_t k = d + 1; k-- > 0;) {
    a[k] = sym[k];
    for (std::size_t j = 1; 2 * j <= k; ++j) {
      sym[k - 2 * j] -= a[k] * binomial(static_cast<long>(k), static_cast<long>(j));
    }
    sym[k] = 0;
  }
  for (const auto& r : sym) {
    if (r != 0) throw std::logic_error("min_poly_2cos: fold left a nonzero remainder");
  }
  IntPoly psi(std::move(a));
  if (psi.leading() != 1) throw std::logic_error("min_poly_2cos: result is not monic");
  return psi;
}

IntPoly f_poly_by_transform(unsigned long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("f_poly_by_transform: n must be odd >= 3");
  const IntPoly g = min_poly_2cos(2 * n);
  const std::size_t d = *g.degree();
  // b_t = sum_{s >= t} a_s C(s, t) (-2)^(s - t), the coefficients of g(x - 2).
  std::vector<BigInt> b(d + 1);
  for (std::size_t t = 0; t <= d; ++t) {
    BigInt sum = 0;
    BigInt pow = 1;
    for (std::size_t s = t; s <= d; ++s) {
      sum += g.coeff(s) * binomial(static_cast<long>(s), static_cast<long>(t)) * pow;
      pow *= -2;
    }
    b[t] = sum;
  }
  // f(x) = sum_t b_t (-x)^(d - t).
  std::vector<BigInt> f(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    f[j] = b[d - j];
    if (j % 2 == 1) f[j] = -f[j];
  }
  IntPoly prim = primitive_part(IntPoly(std::move(f))).primitive;
  if (prim.coeff(0) != 1) {
    throw std::logic_error("f_poly_by_transform: normalized constant term is not 1 for n = " +
                           std::to_string(n));
  }
  return prim;
}

namespace {

IntPoly f_division_memo(unsigned long n, std::map<unsigned long, IntPoly>& memo) {
  if (n == 1) return IntPoly{1};
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly q = cycle_poly(static_cast<unsigned>(n));
  for (unsigned long m : divisors(n)) {
    if (m > 1 && m < n) q = poly_exact_div(q, f_division_memo(m, memo));
  }
  memo.emplace(n, q);
  return q;
}

}  // namespace

IntPoly f_poly_by_division(unsigned long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("f_poly_by_division: n must be odd >= 3");
  std::map<unsigned long, IntPoly> memo;
  return f_division_memo(n, memo);
}

std::string to_string(FactorRoute route) {
  return route == FactorRoute::Division ? "division" : "transform";
}

IntPoly FactorSet::product() const {
  IntPoly p{1};
  for (const auto& [m, f] : factors) p *= f;
  return p;
}

FactorSet factorize_cycle_poly(unsigned long n, FactorRoute route) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("factorize_cycle_poly: n must be odd >= 3");
  FactorSet out;
  out.n = n;
  out.route = route;
  std::map<unsigned long, IntPoly> memo;
  for (unsigned long m : divisors(n)) {
    if (m < 3) continue;
    out.factors.emplace(
        m, route == FactorRoute::Division ? f_division_memo(m, memo) : f_poly_by_transform(m));
  }
  if (out.product() != cycle_poly(static_cast<unsigned>(n))) {
    throw std::logic_error("factorize_cycle_poly: product of factors differs from I(C_" +
                           std::to_string(n) + ",x)");
  }
  return out;
}

RootSpec root_values(unsigned long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("root_values: n must be odd >= 3");
  RootSpec spec;
  spec.n = n;
  for (unsigned long i = 1; i <= n / 2; ++i) {
    const double angle = static_cast<double>(2 * i - 1) * std::numbers::pi / static_cast<double>(n);
    spec.roots.push_back({i, std::gcd(2 * i - 1, n), -1.0 / (2.0 + 2.0 * std::cos(angle))});
  }
  return spec;
}

RootCheck check_roots(const IntPoly& f, const RootSpec& spec, RootSelection which,
                      double tolerance) {
  RootCheck out;
  out.tolerance = tolerance;
  double max_coeff = 0.0;
  for (const auto& c : f.coeffs()) max_coeff = std::max(max_coeff, std::fabs(c.get_d()));
  const double deg = static_cast<double>(f.degree().value_or(0));
  std::vector<double> selected;
  for (const auto& r : spec.roots) {
    if (which == RootSelection::Primitive && r.gcd != 1) continue;
    const double scale = max_coeff * std::pow(std::max(1.0, std::fabs(r.value)), deg);
    const double residual = scale > 0 ? std::fabs(eval_float(f, r.value)) / scale
                                      : std::numeric_limits<double>::infinity();
    out.max_residual = std::max(out.max_residual, residual);
    selected.push_back(r.value);
  }
  out.checked = selected.size();
  std::sort(selected.begin(), selected.end());
  out.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < selected.size(); ++i) {
    out.min_gap = std::min(out.min_gap, selected[i] - selected[i - 1]);
  }
  out.pass = out.max_residual < tolerance && out.min_gap > tolerance;
  return out;
}

}  // namespace grapheq

#include "grapheq/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace grapheq {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs_;
  const auto& b = rhs.coeffs_;
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }

namespace {

// Returns the quotient, or nullopt with `why` set when the division is not exact.
std::optional<IntPoly> exact_div_impl(const IntPoly& p, const IntPoly& q, std::string& why) {
  if (q.is_zero()) throw std::invalid_argument("exact division by the zero polynomial");
  if (p.is_zero()) return IntPoly{};
  const auto& qc = q.coeffs();
  const std::size_t dq = qc.size() - 1;
  std::vector<BigInt> rem = p.coeffs();
  if (rem.size() < qc.size()) {
    why = "divisor degree exceeds dividend degree";
    return std::nullopt;
  }
  const BigInt& lead = qc.back();
  std::vector<BigInt> quot(rem.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dq];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      why = "non-integral quotient coefficient at x^" + std::to_string(k);
      return std::nullopt;
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), qc[j].get_mpz_t());
    }
    quot[k] = std::move(c);
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (sgn(rem[i]) != 0) {
      why = "nonzero remainder";
      return std::nullopt;
    }
  }
  return IntPoly(std::move(quot));
}

}  // namespace

IntPoly poly_exact_div(const IntPoly& p, const IntPoly& q) {
  std::string why;
  auto d = exact_div_impl(p, q, why);
  if (!d) {
    throw DivisionError("(" + q.to_string() + ") does not divide (" + p.to_string() + "): " + why);
  }
  return std::move(*d);
}

std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& q) {
  std::string why;
  return exact_div_impl(p, q, why);
}

PrimitiveDecomposition primitive_part(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("primitive part of the zero polynomial");
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<BigInt> prim;
  prim.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    prim.push_back(std::move(q));
  }
  return {g, IntPoly(std::move(prim))};
}

bool is_unicyclic_poly(const IntPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (sgn(c) < 0) return false;
  }
  if (p.coeff(0) != 1) return false;
  const BigInt p1 = p.coeff(1);
  const BigInt pairs = p1 * (p1 - 1) / 2;
  return p.coeff(2) == pairs - p1;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt cycle_coeff(unsigned n, unsigned k) {
  if (k == 0) return 1;
  const long top = static_cast<long>(n) - static_cast<long>(k) - 1;
  BigInt out = BigInt(n) * binomial(top, static_cast<long>(k) - 1);
  // n * C(n-k-1, k-1) is always a multiple of k.
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), k);
  return out;
}

BigInt path_coeff(unsigned n, unsigned k) {
  if (k == 0) return 1;
  return binomial(static_cast<long>(n) - static_cast<long>(k) + 1, static_cast<long>(k));
}

IntPoly cycle_poly(unsigned n) {
  if (n < 3) throw std::invalid_argument("cycle_poly requires n >= 3");
  std::vector<BigInt> c;
  for (unsigned k = 0; 2 * k <= n; ++k) c.push_back(cycle_coeff(n, k));
  return IntPoly(std::move(c));
}

IntPoly path_poly(unsigned n) {
  std::vector<BigInt> c;
  for (unsigned k = 0; k <= (n + 1) / 2; ++k) c.push_back(path_coeff(n, k));
  return IntPoly(std::move(c));
}

double eval_float(const IntPoly& p, double x) {
  double acc = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].get_d();
  return acc;
}

}  // namespace grapheq

#pragma once

// Dense univariate polynomials over an exact ring.  Coefficients are stored
// by ascending degree with a nonzero leading coefficient, so the degree of
// the zero polynomial is -1.

#include <algorithm>
#include <ostream>
#include <vector>

#include "hankelmu/rings.hpp"

namespace hankelmu {

template <class K>
class Polynomial {
 public:
  using Elem = typename K::Elem;

  explicit Polynomial(const K& ring) : ring_(ring) {}

  Polynomial(const K& ring, std::vector<Elem> coeffs)
      : ring_(ring), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const K& ring, const Elem& c) {
    return Polynomial(ring, {c});
  }

  static Polynomial monomial(const K& ring, const Elem& c, long e) {
    std::vector<Elem> v(static_cast<size_t>(e) + 1, ring.zero());
    v.back() = c;
    return Polynomial(ring, std::move(v));
  }

  const K& ring() const { return ring_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem coeff(long i) const {
    if (i < 0 || i > degree()) return ring_.zero();
    return c_[static_cast<size_t>(i)];
  }

  // Smallest exponent with a nonzero coefficient; requires a nonzero polynomial.
  long valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!ring_.is_zero(c_[i])) return static_cast<long>(i);
    throw std::logic_error("Polynomial::valuation on zero polynomial");
  }

  Elem evaluate(const Elem& x) const {
    Elem r = ring_.zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  // z -> z^d, d >= 1.
  Polynomial compose_power(long d) const {
    if (d < 1) throw std::invalid_argument("Polynomial::compose_power: d < 1");
    if (is_zero()) return *this;
    std::vector<Elem> v(static_cast<size_t>(degree() * d) + 1, ring_.zero());
    for (size_t i = 0; i < c_.size(); ++i) v[i * static_cast<size_t>(d)] = c_[i];
    return Polynomial(ring_, std::move(v));
  }

  Polynomial scaled(const Elem& s) const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const Elem& x : c_) v.push_back(x * s);
    return Polynomial(ring_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    std::vector<Elem> v;
    size_t n = std::max(a.c_.size(), b.c_.size());
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      Elem x = i < a.c_.size() ? a.c_[i] : a.ring_.zero();
      if (i < b.c_.size()) x = x + b.c_[i];
      v.push_back(x);
    }
    return Polynomial(a.ring_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  Polynomial operator-() const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const Elem& x : c_) v.push_back(-x);
    return Polynomial(ring_, std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(a.ring_, std::move(v));
  }

  bool operator==(const Polynomial& o) const {
    return ring_ == o.ring_ && c_ == o.c_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    for (size_t i = 0; i < p.c_.size(); ++i) {
      if (i) os << " + ";
      os << "(" << p.c_[i] << ")z^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }
  void check(const Polynomial& o) const {
    if (ring_ != o.ring_) throw ring_mismatch();
  }

  K ring_;
  std::vector<Elem> c_;
};

// Ring conversions used by the generators and the CLI.
inline Polynomial<RationalRing> to_rational(const Polynomial<IntegerRing>& p) {
  RationalRing Q;
  std::vector<mpq_class> v;
  v.reserve(p.coeffs().size());
  for (const mpz_class& c : p.coeffs()) v.emplace_back(c);
  return Polynomial<RationalRing>(Q, std::move(v));
}

inline Polynomial<ModRing> reduce_mod(const Polynomial<IntegerRing>& p, const ModRing& R) {
  std::vector<ModInt> v;
  v.reserve(p.coeffs().size());
  for (const mpz_class& c : p.coeffs()) v.push_back(R.from_mpz(c));
  return Polynomial<ModRing>(R, std::move(v));
}

// Clears denominators: returns (g, c) with g integral and g = c * p, where c
// is the lcm of the coefficient denominators.
inline std::pair<Polynomial<IntegerRing>, mpz_class> clear_denominators(
    const Polynomial<RationalRing>& p) {
  mpz_class l(1);
  for (const mpq_class& c : p.coeffs()) {
    mpz_class d = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntegerRing Z;
  std::vector<mpz_class> v;
  v.reserve(p.coeffs().size());
  for (const mpq_class& c : p.coeffs()) {
    mpq_class s = c * l;
    v.push_back(s.get_num());
  }
  return {Polynomial<IntegerRing>(Z, std::move(v)), l};
}

}  // namespace hankelmu

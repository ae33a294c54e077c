#pragma once

// Truncated power series with explicit precision tracking.  A series of
// order N holds the exact coefficients c_0..c_{N-1}; coefficients at index
// >= N are unknown (not zero).  Every operation computes the order that is
// actually provable for its result, so precision is never overstated:
//
//   add/sub             min(N_a, N_b)
//   mul                 min(N_a, N_b)   (inputs are full prefixes)
//   mul by polynomial   N               (polynomial known exactly)
//   invert              N
//   f(z^d)              N*d             (gaps between known coefficients are
//                                        provably zero)

#include <optional>
#include <ostream>
#include <vector>

#include "hankelmu/polynomial.hpp"
#include "hankelmu/rings.hpp"

namespace hankelmu {

template <class K>
class TruncatedSeries {
 public:
  using Elem = typename K::Elem;

  TruncatedSeries(const K& ring, std::vector<Elem> coeffs)
      : ring_(ring), c_(std::move(coeffs)) {}

  static TruncatedSeries zero(const K& ring, long order) {
    return TruncatedSeries(ring, std::vector<Elem>(static_cast<size_t>(order), ring.zero()));
  }

  const K& ring() const { return ring_; }
  long order() const { return static_cast<long>(c_.size()); }
  const std::vector<Elem>& coeffs() const { return c_; }

  const Elem& coeff(long i) const {
    if (i < 0 || i >= order())
      throw insufficient_order("series coefficient " + std::to_string(i) +
                               " beyond provable order " + std::to_string(order()));
    return c_[static_cast<size_t>(i)];
  }

  // First index with a nonzero known coefficient; nullopt when the series is
  // zero to its full provable order.
  std::optional<long> valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!ring_.is_zero(c_[i])) return static_cast<long>(i);
    return std::nullopt;
  }

  bool is_zero_prefix() const { return !valuation().has_value(); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Elem> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(a.c_[i] + b.c_[i]);
    return TruncatedSeries(a.ring_, std::move(v));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Elem> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(a.c_[i] - b.c_[i]);
    return TruncatedSeries(a.ring_, std::move(v));
  }

  TruncatedSeries operator-() const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const Elem& x : c_) v.push_back(-x);
    return TruncatedSeries(ring_, std::move(v));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Elem> v(n, a.ring_.zero());
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; i + j < n; ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return TruncatedSeries(a.ring_, std::move(v));
  }

  TruncatedSeries scaled(const Elem& s) const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const Elem& x : c_) v.push_back(x * s);
    return TruncatedSeries(ring_, std::move(v));
  }

  TruncatedSeries mul_poly(const Polynomial<K>& p) const {
    if (ring_ != p.ring()) throw ring_mismatch();
    std::vector<Elem> v(c_.size(), ring_.zero());
    for (long i = 0; i <= p.degree(); ++i) {
      Elem pi = p.coeff(i);
      if (ring_.is_zero(pi)) continue;
      for (size_t j = 0; static_cast<long>(j) + i < order(); ++j)
        v[static_cast<size_t>(i) + j] = v[static_cast<size_t>(i) + j] + pi * c_[j];
    }
    return TruncatedSeries(ring_, std::move(v));
  }

  // Multiplicative inverse to the same order; the constant term must be a
  // unit of the ring.
  TruncatedSeries invert() const {
    if (order() == 0) throw insufficient_order("series inversion of order-0 series");
    auto inv0 = ring_.try_invert(c_[0]);
    if (!inv0)
      throw not_invertible("series inversion: constant term is not a unit in " +
                           ring_.name());
    std::vector<Elem> v;
    v.reserve(c_.size());
    v.push_back(*inv0);
    for (size_t k = 1; k < c_.size(); ++k) {
      Elem s = ring_.zero();
      for (size_t i = 1; i <= k; ++i) s = s + c_[i] * v[k - i];
      v.push_back(-(*inv0 * s));
    }
    return TruncatedSeries(ring_, std::move(v));
  }

  // f(z^d) with d >= 2.  All of the result's coefficients are provable, so
  // the order grows to N*d.
  TruncatedSeries compose_power(long d) const {
    if (d < 2) throw std::invalid_argument("series compose_power: d < 2");
    std::vector<Elem> v(c_.size() * static_cast<size_t>(d), ring_.zero());
    for (size_t i = 0; i < c_.size(); ++i) v[i * static_cast<size_t>(d)] = c_[i];
    return TruncatedSeries(ring_, std::move(v));
  }

  // Drops the first k coefficients (divides by z^k when they are zero).
  TruncatedSeries tail(long k) const {
    if (k < 0 || k > order()) throw insufficient_order("series tail beyond order");
    return TruncatedSeries(ring_, std::vector<Elem>(c_.begin() + k, c_.end()));
  }

  // Multiplies by z^k; the k new leading coefficients are exactly zero.
  TruncatedSeries mul_monomial(long k) const {
    std::vector<Elem> v(c_.size() + static_cast<size_t>(k), ring_.zero());
    for (size_t i = 0; i < c_.size(); ++i) v[i + static_cast<size_t>(k)] = c_[i];
    return TruncatedSeries(ring_, std::move(v));
  }

  TruncatedSeries truncate(long n) const {
    if (n > order()) throw insufficient_order("series truncate beyond provable order");
    return TruncatedSeries(ring_, std::vector<Elem>(c_.begin(), c_.begin() + n));
  }

  bool operator==(const TruncatedSeries& o) const {
    return ring_ == o.ring_ && c_ == o.c_;
  }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
    os << "[";
    for (size_t i = 0; i < f.c_.size(); ++i) {
      if (i) os << ", ";
      os << f.c_[i];
    }
    return os << "] + O(z^" << f.order() << ")";
  }

 private:
  void check(const TruncatedSeries& o) const {
    if (ring_ != o.ring_) throw ring_mismatch();
  }

  K ring_;
  std::vector<Elem> c_;
};

// The exact length-N prefix of a polynomial (any N: the tail is known zero).
template <class K>
TruncatedSeries<K> poly_prefix(const Polynomial<K>& p, long n) {
  std::vector<typename K::Elem> v;
  v.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) v.push_back(p.coeff(i));
  return TruncatedSeries<K>(p.ring(), std::move(v));
}

// Series expansion of P/Q to order n; Q(0) must be a unit.
template <class K>
TruncatedSeries<K> rational_to_series(const Polynomial<K>& P, const Polynomial<K>& Q,
                                      long n) {
  if (P.ring() != Q.ring()) throw ring_mismatch();
  const K& ring = P.ring();
  auto inv0 = ring.try_invert(Q.coeff(0));
  if (!inv0) throw not_invertible("rational_to_series: Q(0) is not a unit");
  std::vector<typename K::Elem> v;
  v.reserve(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    typename K::Elem s = P.coeff(k);
    for (long i = 1; i <= std::min<long>(k, Q.degree()); ++i)
      s = s - Q.coeff(i) * v[static_cast<size_t>(k - i)];
    v.push_back(*inv0 * s);
  }
  return TruncatedSeries<K>(ring, std::move(v));
}

inline TruncatedSeries<RationalRing> to_rational(const TruncatedSeries<IntegerRing>& f) {
  RationalRing Q;
  std::vector<mpq_class> v;
  v.reserve(f.coeffs().size());
  for (const mpz_class& c : f.coeffs()) v.emplace_back(c);
  return TruncatedSeries<RationalRing>(Q, std::move(v));
}

inline TruncatedSeries<ModRing> reduce_mod(const TruncatedSeries<IntegerRing>& f,
                                           const ModRing& R) {
  std::vector<ModInt> v;
  v.reserve(f.coeffs().size());
  for (const mpz_class& c : f.coeffs()) v.push_back(R.from_mpz(c));
  return TruncatedSeries<ModRing>(R, std::move(v));
}

// Divides every coefficient by s, requiring exactness over Z.
template <class K>
TruncatedSeries<K> divide_exact_scalar(const TruncatedSeries<K>& f,
                                       const typename K::Elem& s) {
  std::vector<typename K::Elem> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(f.ring().divide_exact(c, s));
  return TruncatedSeries<K>(f.ring(), std::move(v));
}

}  // namespace hankelmu

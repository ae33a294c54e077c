#pragma once

// Pade approximants [k-1/k] built from the explicit bordered-determinant
// formulas: Q is the (k+1)x(k+1) determinant whose last row is
// (z^k, ..., z, 1), P the one whose last row is the partial sums
// (0, c_0 z^{k-1}, ..., sum_{i<k} c_i z^i).  Then Q(0) = H_k(f) and
//
//   Q f - P = H_{k,k'} z^{k+k'} + O(z^{k+k'+1})
//
// where k' is the smallest index >= k with a nonzero bordered determinant.

#include <optional>
#include <vector>

#include "hankelmu/hankel.hpp"
#include "hankelmu/polynomial.hpp"
#include "hankelmu/series.hpp"

namespace hankelmu {

template <class K>
struct PadeApproximant {
  Polynomial<K> P, Q;
  long k = 0;
  std::optional<long> k_prime;              // absent: no nonzero bordered det in range
  std::optional<typename K::Elem> h;        // H_{k,k'} / H_k when k' was located
  typename K::Elem Hk;
  std::optional<typename K::Elem> bordered;  // H_{k,k'}
  long contact_verified_order = 0;           // residual checked below this order

  PadeApproximant(const K& ring) : P(ring), Q(ring), Hk(ring.zero()) {}
};

template <class K>
PadeApproximant<K> pade_construct(const TruncatedSeries<K>& f, long k) {
  const K& ring = f.ring();
  if (!ring.is_field())
    throw std::invalid_argument("pade_construct: coefficients must form a field");
  if (k < 1) throw std::invalid_argument("pade_construct: k must be >= 1");
  if (f.order() < 2 * k)
    throw insufficient_order("pade_construct: need series order >= 2k");

  PadeApproximant<K> a(ring);
  a.k = k;
  a.Hk = hankel_det(f, k, 0);
  if (ring.is_zero(a.Hk))
    throw std::invalid_argument("pade_construct: H_k(f) = 0, normal-form [k-1/k] absent");

  // minors of the k x (k+1) coefficient block (c_{i+j}), column j removed
  std::vector<typename K::Elem> minor;
  minor.reserve(static_cast<size_t>(k) + 1);
  for (long skip = 0; skip <= k; ++skip) {
    std::vector<std::vector<typename K::Elem>> m;
    m.reserve(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) {
      std::vector<typename K::Elem> row;
      row.reserve(static_cast<size_t>(k));
      for (long j = 0; j <= k; ++j)
        if (j != skip) row.push_back(f.coeff(i + j));
      m.push_back(std::move(row));
    }
    minor.push_back(det_exact(ring, std::move(m)));
  }

  std::vector<typename K::Elem> qc(static_cast<size_t>(k) + 1, ring.zero());
  std::vector<typename K::Elem> pc(static_cast<size_t>(k), ring.zero());
  for (long j = 0; j <= k; ++j) {
    typename K::Elem cof = minor[static_cast<size_t>(j)];
    if ((k + j) % 2 != 0) cof = -cof;
    qc[static_cast<size_t>(k - j)] = qc[static_cast<size_t>(k - j)] + cof;  // z^{k-j}
    for (long i = 0; i < j; ++i)  // sum_{i<j} c_i z^{i+k-j}
      pc[static_cast<size_t>(i + k - j)] =
          pc[static_cast<size_t>(i + k - j)] + cof * f.coeff(i);
  }
  a.Q = Polynomial<K>(ring, std::move(qc));
  a.P = Polynomial<K>(ring, std::move(pc));
  if (!(a.Q.coeff(0) == a.Hk))
    throw std::logic_error("pade_construct: Q(0) != H_k");

  for (long kp = k; k + kp + 1 <= f.order(); ++kp) {
    typename K::Elem b = bordered_det(f, k, kp);
    if (!ring.is_zero(b)) {
      a.k_prime = kp;
      a.bordered = b;
      a.h = ring.divide_exact(b, a.Hk);
      break;
    }
  }
  a.contact_verified_order = f.order();
  return a;
}

// Exact valuation of f Q - P within the provable order, together with its
// leading coefficient.  nullopt valuation: the residual vanishes through the
// whole provable range (rational exact match, reported as the infinity case).
template <class K>
std::pair<std::optional<long>, std::optional<typename K::Elem>> contact_order(
    const TruncatedSeries<K>& f, const PadeApproximant<K>& a) {
  TruncatedSeries<K> r = f.mul_poly(a.Q) - poly_prefix(a.P, f.order());
  auto val = r.valuation();
  if (!val) return {std::nullopt, std::nullopt};
  return {*val, r.coeff(*val)};
}

}  // namespace hankelmu

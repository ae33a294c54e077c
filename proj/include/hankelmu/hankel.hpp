#pragma once

// Exact Hankel determinants H_n^{(k)}(f) = det (c_{k+i+j})_{0<=i,j<n}, with
// H_0^{(k)} = 1, plus determinant tables, bordered determinants, and mod-p
// periodicity evidence.
//
// Elimination is fraction-free (Bareiss) over Z and Q, and plain Gaussian
// over F_p.  Each determinant is O(n^3) ring operations, so a full table is
// O(N^4): fine at desk scale, and the H-fraction module provides the fast
// route for anything bigger.

#include <optional>
#include <vector>

#include "hankelmu/periodicity.hpp"
#include "hankelmu/rings.hpp"
#include "hankelmu/series.hpp"

namespace hankelmu {

namespace detail {

// Bareiss fraction-free elimination; every division is exact in the ring.
template <class K>
typename K::Elem det_bareiss(const K& ring, std::vector<std::vector<typename K::Elem>> m) {
  using Elem = typename K::Elem;
  const long n = static_cast<long>(m.size());
  if (n == 0) return ring.one();
  Elem sign = ring.one();
  Elem prev = ring.one();
  for (long k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m[k][k])) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (!ring.is_zero(m[i][k])) {
          piv = i;
          break;
        }
      if (piv < 0) return ring.zero();
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j)
        m[i][j] = ring.divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = ring.zero();
    }
    prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return sign * m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

// Ordinary Gaussian elimination over a field, tracking the pivot product.
template <class K>
typename K::Elem det_field(const K& ring, std::vector<std::vector<typename K::Elem>> m) {
  using Elem = typename K::Elem;
  const long n = static_cast<long>(m.size());
  if (n == 0) return ring.one();
  Elem det = ring.one();
  for (long k = 0; k < n; ++k) {
    long piv = -1;
    for (long i = k; i < n; ++i)
      if (!ring.is_zero(m[i][k])) {
        piv = i;
        break;
      }
    if (piv < 0) return ring.zero();
    if (piv != k) {
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
      det = -det;
    }
    Elem inv = *ring.try_invert(m[k][k]);
    det = det * m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (long i = k + 1; i < n; ++i) {
      if (ring.is_zero(m[i][k])) continue;
      Elem f = m[i][k] * inv;
      for (long j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
  }
  return det;
}

}  // namespace detail

// Exact determinant of a square matrix over the ring.
template <class K>
typename K::Elem det_exact(const K& ring, std::vector<std::vector<typename K::Elem>> m) {
  if constexpr (std::is_same_v<K, ModRing>) {
    if (!ring.is_field())
      throw std::invalid_argument(
          "det_exact: composite modulus; reduce an integer table instead");
    return detail::det_field(ring, std::move(m));
  } else {
    return detail::det_bareiss(ring, std::move(m));
  }
}

// Cofactor expansion; the independent cross-check used by the tests.
template <class K>
typename K::Elem det_cofactor(const K& ring,
                              const std::vector<std::vector<typename K::Elem>>& m) {
  const long n = static_cast<long>(m.size());
  if (n == 0) return ring.one();
  if (n == 1) return m[0][0];
  typename K::Elem acc = ring.zero();
  for (long j = 0; j < n; ++j) {
    if (ring.is_zero(m[0][static_cast<size_t>(j)])) continue;
    std::vector<std::vector<typename K::Elem>> minor;
    minor.reserve(static_cast<size_t>(n - 1));
    for (long i = 1; i < n; ++i) {
      std::vector<typename K::Elem> row;
      row.reserve(static_cast<size_t>(n - 1));
      for (long jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(jj)]);
      minor.push_back(std::move(row));
    }
    typename K::Elem term = m[0][static_cast<size_t>(j)] * det_cofactor(ring, minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

template <class K>
std::vector<std::vector<typename K::Elem>> hankel_matrix(const TruncatedSeries<K>& f,
                                                         long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("hankel_matrix: n, k must be >= 0");
  if (n > 0 && f.order() < k + 2 * n - 1)
    throw insufficient_order("hankel_matrix: series order " + std::to_string(f.order()) +
                             " < " + std::to_string(k + 2 * n - 1));
  std::vector<std::vector<typename K::Elem>> m;
  m.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    std::vector<typename K::Elem> row;
    row.reserve(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) row.push_back(f.coeff(k + i + j));
    m.push_back(std::move(row));
  }
  return m;
}

template <class K>
typename K::Elem hankel_det(const TruncatedSeries<K>& f, long n, long k = 0) {
  return det_exact(f.ring(), hankel_matrix(f, n, k));
}

// H_{k,k'}: the (k+1)x(k+1) determinant whose first k rows are (c_{i+j}) and
// whose last row is (c_{k'}, ..., c_{k+k'}); k'=k collapses to H_{k+1}.
template <class K>
typename K::Elem bordered_det(const TruncatedSeries<K>& f, long k, long kprime) {
  if (k < 0 || kprime < k) throw std::invalid_argument("bordered_det: need 0 <= k <= k'");
  if (f.order() < k + kprime + 1)
    throw insufficient_order("bordered_det: series order too small");
  std::vector<std::vector<typename K::Elem>> m;
  m.reserve(static_cast<size_t>(k) + 1);
  for (long i = 0; i < k; ++i) {
    std::vector<typename K::Elem> row;
    for (long j = 0; j <= k; ++j) row.push_back(f.coeff(i + j));
    m.push_back(std::move(row));
  }
  std::vector<typename K::Elem> last;
  for (long j = 0; j <= k; ++j) last.push_back(f.coeff(kprime + j));
  m.push_back(std::move(last));
  return det_exact(f.ring(), std::move(m));
}

template <class K>
struct HankelReport {
  long k = 0;
  std::vector<typename K::Elem> table;  // H_1^{(k)} .. H_N^{(k)}
  std::vector<long> nonzero_indices;
  std::optional<mpq_class> rho_estimate;  // max n_{i+1}/n_i over the tail window
  bool kronecker_flag = false;            // table vanishes beyond its last nonzero entry
  long window = 8;
};

// rho estimated from the last `window` consecutive gaps of the nonzero-index
// sequence; early indices bias a limsup estimate, hence the trailing window.
inline std::optional<mpq_class> rho_from_indices(const std::vector<long>& idx,
                                                 long window) {
  const long t = static_cast<long>(idx.size());
  if (t < 2) return std::nullopt;
  long first = std::max<long>(0, t - 1 - window);
  std::optional<mpq_class> best;
  for (long i = first; i + 1 < t; ++i) {
    mpq_class r = make_rational(idx[static_cast<size_t>(i + 1)], idx[static_cast<size_t>(i)]);
    if (!best || r > *best) best = r;
  }
  return best;
}

template <class K>
HankelReport<K> hankel_table(const TruncatedSeries<K>& f, long n, long k = 0,
                             long window = 8) {
  if (n < 1) throw std::invalid_argument("hankel_table: need N >= 1");
  HankelReport<K> rep;
  rep.k = k;
  rep.window = window;
  rep.table.reserve(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) {
    rep.table.push_back(hankel_det(f, i, k));
    if (!f.ring().is_zero(rep.table.back())) rep.nonzero_indices.push_back(i);
  }
  rep.rho_estimate = rho_from_indices(rep.nonzero_indices, window);
  rep.kronecker_flag =
      rep.nonzero_indices.empty() || rep.nonzero_indices.back() < n;
  return rep;
}

struct PeriodicityEvidence {
  std::uint64_t modulus = 0;
  long preperiod = 0;
  long period = 0;
  long verified_length = 0;
};

// Empirical ultimate periodicity of the Hankel table over F_p.  This is
// evidence over a finite prefix, never a proof.
inline std::optional<PeriodicityEvidence> mod_p_scan(const TruncatedSeries<ModRing>& f,
                                                     long n) {
  const ModRing& R = f.ring();
  if (!R.is_field())
    throw std::invalid_argument(
        "mod_p_scan: composite modulus; reduce an integer table instead");
  if (n < 4) throw std::invalid_argument("mod_p_scan: need N >= 4");
  std::vector<ModInt> table;
  table.reserve(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) table.push_back(hankel_det(f, i, 0));
  auto pp = detect_ultimate_period(table);
  if (!pp) return std::nullopt;
  PeriodicityEvidence ev;
  ev.modulus = R.modulus();
  ev.preperiod = pp->first;
  ev.period = pp->second;
  ev.verified_length = n;
  return ev;
}

}  // namespace hankelmu

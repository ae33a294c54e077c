#pragma once

// Super delta-fractions of power series over a field:
//
//   f = v_0 z^{k_0} / (1 + u_1(z) z - v_1 z^{k_0+k_1+d} / (1 + u_2(z) z - ...))
//
// with v_j != 0, k_j >= 0 and deg u_j <= k_{j-1} + delta - 2 (deg 0 = -1).
// delta = 2 is the Hankel continued fraction, whose data determine every
// non-vanishing Hankel determinant:
//
//   H_{s_j} = (-1)^eps v_0^{s_j} v_1^{s_j-s_1} ... v_{j-1}^{s_j-s_{j-1}},
//   s_j = k_0 + ... + k_{j-1} + j,   eps = sum_i k_i (k_i + 1) / 2,
//
// and H_n = 0 for every other n in the covered range.
//
// Expansion is a greedy peel-off: with g the current remainder, k the
// valuation of g and v its leading coefficient, set r = v z^k / g - 1; the
// prefix of r through degree k + delta - 1 is u(z) z, and g' = u(z) z - r
// (which vanishes through degree k + delta - 1 by construction) is the next
// remainder.  Levels are stored as (v_j, k_j, u_{j+1}): the u computed in the
// same pass as v_j, so a stored level is fully certified.  Each level's
// provable order follows from the series arithmetic itself; nothing is ever
// reported beyond it.

#include <optional>
#include <utility>
#include <vector>

#include "hankelmu/rings.hpp"
#include "hankelmu/series.hpp"

namespace hankelmu {

template <class K>
struct HFLevel {
  typename K::Elem v;
  long k = 0;
  Polynomial<K> u;  // the u attached below this level, i.e. u_{j+1}

  bool operator==(const HFLevel& o) const { return v == o.v && k == o.k && u == o.u; }
  bool operator!=(const HFLevel& o) const { return !(*this == o); }
};

template <class K>
struct HFraction {
  K ring;
  long delta = 2;
  std::vector<HFLevel<K>> levels;
  long certified_levels = 0;
  bool terminated = false;

  explicit HFraction(const K& r) : ring(r) {}

  // s_j = k_0 + ... + k_{j-1} + j for j = 0..levels.size()
  std::vector<long> s_indices() const {
    std::vector<long> s{0};
    long acc = 0;
    for (size_t j = 0; j < levels.size(); ++j) {
      acc += levels[j].k;
      s.push_back(acc + static_cast<long>(j) + 1);
    }
    return s;
  }
};

// exact_rational: caller asserts f is the full expansion of a rational
// function, so a remainder that vanishes to its provable order terminates
// the fraction.  Without the assertion a vanishing prefix only ends
// certification (a truncated prefix cannot distinguish termination from a
// long gap).
template <class K>
HFraction<K> hfrac_expand(const TruncatedSeries<K>& f, long delta = 2,
                          long max_levels = 1000000, bool exact_rational = false) {
  if (delta < 1) throw std::invalid_argument("hfrac_expand: delta must be >= 1");
  if (!f.ring().is_field())
    throw std::invalid_argument("hfrac_expand: coefficients must form a field");
  const K& ring = f.ring();
  HFraction<K> h(ring);
  h.delta = delta;

  TruncatedSeries<K> g = f;
  long k_prev = 0;
  bool first = true;
  while (static_cast<long>(h.levels.size()) < max_levels) {
    auto val = g.valuation();
    if (!val) {
      // zero to provable order
      h.terminated = exact_rational || (first && g.order() > 0);
      break;
    }
    long k = first ? *val : *val - k_prev - delta;
    // by construction *val >= k_prev + delta after the first level
    TruncatedSeries<K> tail = g.tail(*val);
    typename K::Elem v = tail.coeff(0);
    if (tail.order() < k + delta) break;  // cannot certify u for this level
    TruncatedSeries<K> r = tail.invert().scaled(v);  // = v z^k / g, constant term 1
    // u z = prefix of (r - 1) through degree k + delta - 1
    std::vector<typename K::Elem> ucoeffs;
    for (long t = 1; t <= k + delta - 1; ++t) ucoeffs.push_back(r.coeff(t));
    Polynomial<K> u(ring, std::move(ucoeffs));
    // g' = u z - (r - 1): zero through degree k+delta-1, negated r beyond
    std::vector<typename K::Elem> next(static_cast<size_t>(r.order()), ring.zero());
    for (long t = k + delta; t < r.order(); ++t) next[static_cast<size_t>(t)] = -r.coeff(t);
    h.levels.push_back(HFLevel<K>{v, k, u});
    g = TruncatedSeries<K>(ring, std::move(next));
    k_prev = k;
    first = false;
  }
  h.certified_levels = static_cast<long>(h.levels.size());
  return h;
}

inline HFraction<RationalRing> hfrac_expand(const TruncatedSeries<IntegerRing>& f,
                                            long delta = 2, long max_levels = 1000000,
                                            bool exact_rational = false) {
  return hfrac_expand(to_rational(f), delta, max_levels, exact_rational);
}

// Evaluates the stored levels back to a series of order n.  For a fraction
// that is not terminated the dropped tail must provably not reach index n;
// the conservative bound used here is 2 s_L >= n + 1.
template <class K>
TruncatedSeries<K> hfrac_evaluate(const HFraction<K>& h, long n) {
  const K& ring = h.ring;
  const long L = static_cast<long>(h.levels.size());
  if (L == 0) {
    if (!h.terminated) throw insufficient_order("hfrac_evaluate: no certified levels");
    return TruncatedSeries<K>::zero(ring, n);
  }
  if (!h.terminated) {
    long sL = h.s_indices().back();
    if (2 * sL < n + 1)
      throw insufficient_order("hfrac_evaluate: certified levels only reach order " +
                               std::to_string(2 * sL - 1));
  }
  auto one_plus_uz = [&](const Polynomial<K>& u) {
    std::vector<typename K::Elem> v(static_cast<size_t>(n), ring.zero());
    if (n > 0) v[0] = ring.one();
    for (long i = 0; i <= u.degree() && i + 1 < n; ++i) v[static_cast<size_t>(i + 1)] = u.coeff(i);
    return TruncatedSeries<K>(ring, std::move(v));
  };
  TruncatedSeries<K> e = one_plus_uz(h.levels[static_cast<size_t>(L - 1)].u);
  for (long j = L - 1; j >= 1; --j) {
    long exp = h.levels[static_cast<size_t>(j - 1)].k + h.levels[static_cast<size_t>(j)].k + h.delta;
    TruncatedSeries<K> term =
        e.invert().scaled(h.levels[static_cast<size_t>(j)].v).mul_monomial(exp).truncate(n);
    e = one_plus_uz(h.levels[static_cast<size_t>(j - 1)].u) - term;
  }
  return e.invert()
      .scaled(h.levels[0].v)
      .mul_monomial(h.levels[0].k)
      .truncate(n);
}

// Theorem-5.1-style reconstruction (delta = 2 only): the (s_j, H_{s_j}) pairs
// for j = 1..L.  Within the covered range all other Hankel determinants are
// zero; the range is [1, s_L], or every n when the fraction terminated.
template <class K>
std::vector<std::pair<long, typename K::Elem>> hankel_from_hfrac(const HFraction<K>& h) {
  if (h.delta != 2)
    throw std::invalid_argument("hankel_from_hfrac: defined for delta = 2 only");
  const K& ring = h.ring;
  std::vector<long> s = h.s_indices();
  std::vector<std::pair<long, typename K::Elem>> out;
  long eps = 0;
  for (size_t j = 1; j < s.size(); ++j) {
    const long kprev = h.levels[j - 1].k;
    eps += kprev * (kprev + 1) / 2;
    typename K::Elem val = ring.one();
    for (size_t i = 0; i < j; ++i)
      val = val * pow_elem(ring, h.levels[i].v,
                           static_cast<unsigned long>(s[j] - s[i]));
    if (eps % 2 != 0) val = -val;
    out.emplace_back(s[j], val);
  }
  return out;
}

// Dense table H_1..H_n from the fraction data; requires coverage.
template <class K>
std::vector<typename K::Elem> table_from_hfrac(const HFraction<K>& h, long n) {
  const K& ring = h.ring;
  auto pairs = hankel_from_hfrac(h);
  long covered = h.terminated ? n : (pairs.empty() ? 0 : pairs.back().first);
  if (covered < n)
    throw insufficient_order("table_from_hfrac: certified levels cover only [1, " +
                             std::to_string(covered) + "]");
  std::vector<typename K::Elem> table(static_cast<size_t>(n), ring.zero());
  for (const auto& [s, v] : pairs)
    if (s <= n) table[static_cast<size_t>(s - 1)] = v;
  return table;
}

}  // namespace hankelmu

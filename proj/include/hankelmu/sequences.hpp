#pragma once

// Generators for every series the library studies: named automatic/Mahler
// sequences from their recurrences, coefficient extraction from functional
// equations f = A/B + (C/D) f(z^d), the two infinite-product families, the
// F/G double sums, and prefix solutions of quadratic functional equations
// over F_p (used for the periodicity fixtures).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hankelmu/polynomial.hpp"
#include "hankelmu/rings.hpp"
#include "hankelmu/series.hpp"

namespace hankelmu {

// -----------------------------------------------------------------------
// Mahler functional equations  f(z) = A(z)/B(z) + (C(z)/D(z)) f(z^d)

struct MahlerEquation {
  Polynomial<IntegerRing> A, B, C, D;
  long d = 2;

  MahlerEquation() : A(IntegerRing{}), B(IntegerRing{}), C(IntegerRing{}), D(IntegerRing{}) {}

  MahlerEquation(Polynomial<IntegerRing> a, Polynomial<IntegerRing> b,
                 Polynomial<IntegerRing> c, Polynomial<IntegerRing> dd, long deg)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(dd)), d(deg) {
    if (d < 2) throw std::invalid_argument("MahlerEquation: d must be >= 2");
    if (B.is_zero() || D.is_zero())
      throw std::invalid_argument("MahlerEquation: B and D must be nonzero");
  }
};

inline Polynomial<IntegerRing> zpoly(std::vector<long> coeffs) {
  IntegerRing Z;
  std::vector<mpz_class> v(coeffs.begin(), coeffs.end());
  return Polynomial<IntegerRing>(Z, std::move(v));
}

// Division a/b in the ring, or nullopt when the quotient does not exist
// (non-unit divisor over a field ring, inexact quotient over Z).
template <class K>
std::optional<typename K::Elem> try_divide(const K& ring, const typename K::Elem& a,
                                           const typename K::Elem& b) {
  auto inv = ring.try_invert(b);
  if (!inv) return std::nullopt;
  return a * *inv;
}

inline std::optional<mpz_class> try_divide(const IntegerRing&, const mpz_class& a,
                                           const mpz_class& b) {
  if (sgn(b) == 0) return std::nullopt;
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) return std::nullopt;
  return q;
}

template <class K>
Polynomial<K> convert_poly(const Polynomial<IntegerRing>& p, const K& ring) {
  std::vector<typename K::Elem> v;
  v.reserve(p.coeffs().size());
  for (const mpz_class& c : p.coeffs()) v.push_back(ring.from_mpz(c));
  return Polynomial<K>(ring, std::move(v));
}

// Coefficient extraction from f = A/B + (C/D) f(z^d), ascending in the index:
// with P = BD, R = DA, S = CB the equation reads  P f = R + S f(z^d), and the
// coefficient of z^m on the right only involves c_j with j <= m/d < m, so the
// prefix is determined once c_0 is.  c_0 itself solves c_0 (P(0)-S(0)) = R(0);
// when P(0) = S(0) the caller must supply it, and it is checked either way.
template <class K>
TruncatedSeries<K> feq_generate(const MahlerEquation& eq, const K& ring, long n,
                                std::optional<typename K::Elem> c0 = std::nullopt) {
  using Elem = typename K::Elem;
  if (n < 0) throw std::invalid_argument("feq_generate: negative order");
  Polynomial<K> A = convert_poly(eq.A, ring), B = convert_poly(eq.B, ring),
                C = convert_poly(eq.C, ring), D = convert_poly(eq.D, ring);
  if (ring.is_zero(B.coeff(0)) || ring.is_zero(D.coeff(0)))
    throw std::invalid_argument("feq_generate: B(0) and D(0) must be nonzero");
  Polynomial<K> P = B * D, R = D * A, S = C * B;
  Elem p0 = P.coeff(0);

  Elem t0 = p0 - S.coeff(0);
  Elem r0 = R.coeff(0);
  std::vector<Elem> c;
  c.reserve(static_cast<size_t>(n));
  if (ring.is_zero(t0)) {
    if (!c0)
      throw std::invalid_argument(
          "feq_generate: equation does not determine the constant term; supply c0");
    if (!ring.is_zero(r0))
      throw std::invalid_argument("feq_generate: inconsistent constant term");
    c.push_back(*c0);
  } else {
    auto v = try_divide(ring, r0, t0);
    if (!v)
      throw std::invalid_argument("feq_generate: constant term is not in ring " +
                                  ring.name());
    if (c0 && !(*c0 == *v))
      throw std::invalid_argument("feq_generate: supplied c0 contradicts the equation");
    c.push_back(*v);
  }
  if (n == 0) return TruncatedSeries<K>(ring, {});

  for (long m = 1; m < n; ++m) {
    Elem rhs = R.coeff(m);
    for (long j = m - (m % eq.d); j >= 0; j -= eq.d) {
      if (m - j > S.degree()) break;
      rhs = rhs + S.coeff(m - j) * c[static_cast<size_t>(j / eq.d)];
    }
    for (long i = 1; i <= std::min<long>(m, P.degree()); ++i)
      rhs = rhs - P.coeff(i) * c[static_cast<size_t>(m - i)];
    auto v = try_divide(ring, rhs, p0);
    if (!v)
      throw std::invalid_argument("feq_generate: coefficient " + std::to_string(m) +
                                  " is not in ring " + ring.name());
    c.push_back(*v);
  }
  c.resize(static_cast<size_t>(n), ring.zero());
  return TruncatedSeries<K>(ring, std::move(c));
}

// -----------------------------------------------------------------------
// Infinite products

// f = prod_{n>=0} (1 + u z^{2^n} + 2 z^{2^{n+1}} C(z^{2^n})/D(z^{2^n})),
// with D(0) = 1.  Factors whose support starts at or beyond the order are 1.
inline TruncatedSeries<IntegerRing> product2_generate(const mpz_class& u,
                                                      const Polynomial<IntegerRing>& C,
                                                      const Polynomial<IntegerRing>& D,
                                                      long n) {
  IntegerRing Z;
  if (!(D.coeff(0) == 1))
    throw std::invalid_argument("product2_generate: D(0) must be 1");
  if (n < 1) throw std::invalid_argument("product2_generate: order must be >= 1");
  std::vector<mpz_class> acc(static_cast<size_t>(n), 0);
  acc[0] = 1;
  TruncatedSeries<IntegerRing> f(Z, std::move(acc));
  TruncatedSeries<IntegerRing> cd = rational_to_series(C, D, n);
  for (long e = 1; e < n; e *= 2) {
    std::vector<mpz_class> fac(static_cast<size_t>(n), 0);
    fac[0] = 1;
    fac[static_cast<size_t>(e)] += u;
    for (long i = 0; 2 * e + i * e < n; ++i)
      fac[static_cast<size_t>(2 * e + i * e)] += 2 * cd.coeff(i);
    f = f * TruncatedSeries<IntegerRing>(Z, std::move(fac));
  }
  return f;
}

// f = prod_{n>=0} C(z^{3^n})/D(z^{3^n}) with C(0) = D(0) = 1.
inline TruncatedSeries<IntegerRing> product3_generate(const Polynomial<IntegerRing>& C,
                                                      const Polynomial<IntegerRing>& D,
                                                      long n) {
  IntegerRing Z;
  if (!(C.coeff(0) == 1 && D.coeff(0) == 1))
    throw std::invalid_argument("product3_generate: C(0) and D(0) must be 1");
  if (n < 1) throw std::invalid_argument("product3_generate: order must be >= 1");
  std::vector<mpz_class> acc(static_cast<size_t>(n), 0);
  acc[0] = 1;
  TruncatedSeries<IntegerRing> f(Z, std::move(acc));
  TruncatedSeries<IntegerRing> cd = rational_to_series(C, D, n);
  for (long e = 1; e < n; e *= 3) {
    std::vector<mpz_class> fac(static_cast<size_t>(n), 0);
    for (long i = 0; i * e < n; ++i) fac[static_cast<size_t>(i * e)] = cd.coeff(i);
    f = f * TruncatedSeries<IntegerRing>(Z, std::move(fac));
  }
  return f;
}

// -----------------------------------------------------------------------
// Double sums F_{a,b} (sign +) and G_{a,b} (sign -), computed from the
// single-sum form (1/z^{2^a}) sum_n z^{2^{n+a}} / (1 -+ z^{2^{n+b}}), which
// stays valid for b < a as well.
inline TruncatedSeries<IntegerRing> double_sum_generate(long alpha, long beta, int sign,
                                                        long n) {
  if (alpha < 0 || beta < 0 || alpha > 40 || beta > 40)
    throw std::invalid_argument("double_sum_generate: alpha,beta out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("double_sum_generate: sign must be +-1");
  if (n < 1) throw std::invalid_argument("double_sum_generate: order must be >= 1");
  const long shift = 1L << alpha;
  std::vector<mpz_class> v(static_cast<size_t>(n), 0);
  for (long e = shift; e - shift < n; e *= 2) {  // e = 2^{m+alpha}
    // period of the expanded 1/(1 -+ z^{2^{m+beta}}) factor, saturated past n
    long period = e;
    if (beta >= alpha) {
      for (long t = 0; t < beta - alpha && period <= n; ++t) period *= 2;
    } else {
      period = e >> (alpha - beta);
    }
    long sgnj = 1;
    for (long j = 0;; ++j) {
      long idx = e - shift + j * period;
      if (idx >= n) break;
      v[static_cast<size_t>(idx)] += sgnj;
      if (sign > 0) sgnj = -sgnj;
    }
  }
  IntegerRing Z;
  return TruncatedSeries<IntegerRing>(Z, std::move(v));
}

// -----------------------------------------------------------------------
// Quadratic functional equations A + B F + C F^2 = 0 over a field, solved to
// a prefix.  The plain recursion handles any root c_0 with B(0) + 2C(0)c_0 a
// unit; the square-root form handles B = 0 with A = -(a z^k)^2 (1 + z ...).

template <class K>
TruncatedSeries<K> quadratic_series_prefix(const Polynomial<K>& A, const Polynomial<K>& B,
                                           const Polynomial<K>& C,
                                           const typename K::Elem& c0, long n) {
  using Elem = typename K::Elem;
  const K& ring = A.ring();
  Elem two = ring.from_long(2);
  Elem denom = B.coeff(0) + two * C.coeff(0) * c0;
  auto dinv = ring.try_invert(denom);
  if (!dinv)
    throw std::invalid_argument("quadratic_series_prefix: B(0) + 2C(0)c0 is not a unit");
  // check the root
  if (!ring.is_zero(A.coeff(0) + B.coeff(0) * c0 + C.coeff(0) * c0 * c0))
    throw std::invalid_argument("quadratic_series_prefix: c0 is not a root");
  std::vector<Elem> F(static_cast<size_t>(n), ring.zero());
  std::vector<Elem> F2(static_cast<size_t>(n), ring.zero());
  if (n == 0) return TruncatedSeries<K>(ring, {});
  F[0] = c0;
  F2[0] = c0 * c0;
  for (long m = 1; m < n; ++m) {
    Elem r = A.coeff(m);
    for (long i = 0; i <= std::min<long>(m, B.degree()); ++i)
      r = r + B.coeff(i) * F[static_cast<size_t>(m - i)];
    for (long i = 0; i <= std::min<long>(m, C.degree()); ++i)
      r = r + C.coeff(i) * F2[static_cast<size_t>(m - i)];
    Elem cm = -(r * *dinv);
    F[static_cast<size_t>(m)] = cm;
    for (long i = 0; i < m && m + i < n; ++i)
      F2[static_cast<size_t>(m + i)] = F2[static_cast<size_t>(m + i)] + two * cm * F[static_cast<size_t>(i)];
    if (2 * m < n)
      F2[static_cast<size_t>(2 * m)] = F2[static_cast<size_t>(2 * m)] + cm * cm;
  }
  return TruncatedSeries<K>(ring, std::move(F));
}

// s with s^2 = g and s(0) = 1; needs g(0) = 1 and 2 a unit (char != 2).
template <class K>
TruncatedSeries<K> sqrt_series(const TruncatedSeries<K>& g) {
  using Elem = typename K::Elem;
  const K& ring = g.ring();
  if (g.order() == 0) return g;
  if (!(g.coeff(0) == ring.one()))
    throw std::invalid_argument("sqrt_series: constant term must be 1");
  auto half = ring.try_invert(ring.from_long(2));
  if (!half) throw std::invalid_argument("sqrt_series: 2 is not a unit in " + ring.name());
  long n = g.order();
  std::vector<Elem> s(static_cast<size_t>(n), ring.zero());
  s[0] = ring.one();
  for (long m = 1; m < n; ++m) {
    Elem acc = g.coeff(m);
    for (long i = 1; i < m; ++i) acc = acc - s[static_cast<size_t>(i)] * s[static_cast<size_t>(m - i)];
    s[static_cast<size_t>(m)] = acc * *half;
  }
  return TruncatedSeries<K>(ring, std::move(s));
}

// Case with B = 0: A + C F^2 = 0, A = -(a z^k)^2 (1 + z ...), C(0) = 1.
template <class K>
TruncatedSeries<K> quadratic_sqrt_prefix(const Polynomial<K>& A, const Polynomial<K>& C,
                                         long n) {
  const K& ring = A.ring();
  if (A.is_zero()) throw std::invalid_argument("quadratic_sqrt_prefix: A is zero");
  long val = A.valuation();
  if (val % 2 != 0)
    throw std::invalid_argument("quadratic_sqrt_prefix: A has odd valuation");
  long k = val / 2;
  typename K::Elem lead = -A.coeff(val);
  // square root of the leading coefficient, by scan (small moduli only)
  std::optional<typename K::Elem> a;
  for (long x = 1; x < 1000000; ++x) {
    typename K::Elem cand = ring.from_long(x);
    if (cand * cand == lead) {
      a = cand;
      break;
    }
    if (ring.is_zero(cand - ring.one()) && x > 1) break;  // wrapped around
  }
  if (!a) throw std::invalid_argument("quadratic_sqrt_prefix: -A leading coeff is not a square");
  auto ainv2 = ring.try_invert(lead);
  if (!ainv2) throw std::invalid_argument("quadratic_sqrt_prefix: leading coeff not a unit");
  TruncatedSeries<K> t = poly_prefix(-A, n + 2 * k).tail(2 * k);
  TruncatedSeries<K> w = (t * poly_prefix(C, n).invert()).scaled(*ainv2);
  TruncatedSeries<K> s = sqrt_series(w);
  return s.scaled(*a).mul_monomial(k).truncate(n);
}

// -----------------------------------------------------------------------
// The g of f = 1/(1 - u z + 2 z^2 g), for f from the product2 family.
inline TruncatedSeries<IntegerRing> derive_g(const TruncatedSeries<IntegerRing>& f,
                                             const mpz_class& u) {
  IntegerRing Z;
  TruncatedSeries<IntegerRing> num =
      f.invert() - poly_prefix(zpoly({1}) - Polynomial<IntegerRing>::monomial(Z, u, 1),
                               f.order());
  if (!(num.coeff(0) == 0) || (f.order() > 1 && !(num.coeff(1) == 0)))
    throw std::logic_error("derive_g: 1/f - 1 + uz should vanish to order 2");
  return divide_exact_scalar(num.tail(2), mpz_class(2));
}

// -----------------------------------------------------------------------
// Named sequences

inline const std::vector<std::string>& sequence_registry() {
  static const std::vector<std::string> names = {
      "thue_morse_01", "thue_morse_pm1", "stern_S", "stern_T", "paperfolding",
      "cantor",        "gros",           "calF",    "calG",    "L",
      "M",             "F5",             "F11",     "F13",     "F17a",
      "F17b"};
  return names;
}

// The functional equation satisfied by a named series, when the library uses
// one (either as the generator itself or as a cross-check route), plus the
// constant term when the equation does not determine it.
inline std::optional<std::pair<MahlerEquation, std::optional<mpz_class>>> named_equation(
    const std::string& name) {
  using P = Polynomial<IntegerRing>;
  IntegerRing Z;
  auto one = zpoly({1});
  if (name == "stern_S")
    return {{MahlerEquation(P(Z), one, zpoly({1, 1, 1}), one, 2), mpz_class(1)}};
  if (name == "stern_T")
    return {{MahlerEquation(zpoly({2}), one, -zpoly({1, 1, 1}), one, 2), std::nullopt}};
  if (name == "cantor")
    return {{MahlerEquation(P(Z), one, zpoly({1, 0, 1}), one, 3), mpz_class(1)}};
  if (name == "paperfolding")
    return {{MahlerEquation(one, zpoly({1, 0, 0, 0, -1}), zpoly({0, 1}), one, 2),
             std::nullopt}};
  if (name == "thue_morse_pm1")
    return {{MahlerEquation(P(Z), one, zpoly({1, -1}), one, 2), mpz_class(1)}};
  if (name == "thue_morse_01")
    return {{MahlerEquation(zpoly({0, 1}), zpoly({1, 0, -1}), zpoly({1, -1}), one, 2),
             mpz_class(0)}};
  if (name == "gros" || name == "calG")
    return {{MahlerEquation(zpoly({0, 1}), zpoly({1, -1}), one, one, 2), mpz_class(0)}};
  if (name == "calF")
    return {{MahlerEquation(zpoly({0, 1}), zpoly({1, 1}), one, one, 2), mpz_class(0)}};
  if (name == "L")
    return {{MahlerEquation(zpoly({0, 1}), one, one, zpoly({1, -1}), 2), mpz_class(0)}};
  if (name == "M")
    return {{MahlerEquation(zpoly({0, 1}), one, zpoly({-1}), zpoly({1, -1}), 2),
             mpz_class(0)}};
  if (name == "F5")
    return {{MahlerEquation(P(Z), one, zpoly({1, -1, -1, -1, 1}), one, 5), mpz_class(1)}};
  if (name == "F11")
    return {{MahlerEquation(P(Z), one, zpoly({1, -1, -1, 1, -1, 1, 1, 1, 1, -1, -1}),
                            one, 11),
             mpz_class(1)}};
  if (name == "F13")
    return {{MahlerEquation(
                 P(Z), one, zpoly({1, -1, -1, 1, -1, -1, -1, -1, -1, 1, -1, -1, 1}), one,
                 13),
             mpz_class(1)}};
  if (name == "F17a")
    return {{MahlerEquation(P(Z), one,
                            zpoly({1, -1, -1, 1, -1, 1, 1, 1, 1, 1, 1, 1, -1, 1, -1, -1,
                                   1}),
                            one, 17),
             mpz_class(1)}};
  if (name == "F17b")
    return {{MahlerEquation(P(Z), one,
                            zpoly({1, -1, -1, -1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, -1,
                                   -1, 1}),
                            one, 17),
             mpz_class(1)}};
  return std::nullopt;
}

namespace detail {

inline int thue_morse_bit(unsigned long m) {
  return __builtin_popcountl(m) & 1;
}

inline std::vector<mpz_class> stern_values(long n, bool twisted) {
  // a_0..a_n (or the twisted b's)
  std::vector<mpz_class> a(static_cast<size_t>(n) + 1);
  if (n >= 0) a[0] = 0;
  if (n >= 1) a[1] = 1;
  for (long m = 2; m <= n; ++m) {
    long h = m / 2;
    mpz_class x = (m % 2 == 0)
                      ? a[static_cast<size_t>(h)]
                      : mpz_class(a[static_cast<size_t>(h)] + a[static_cast<size_t>(h + 1)]);
    a[static_cast<size_t>(m)] = twisted ? mpz_class(-x) : x;
  }
  return a;
}

inline int paperfolding_value(unsigned long m) {
  while (m % 2 == 1) m /= 2;
  return m % 4 == 0 ? 1 : 0;
}

inline int cantor_value(unsigned long m) {
  while (m > 0) {
    if (m % 3 == 1) return 0;
    m /= 3;
  }
  return 1;
}

inline long v2(unsigned long m) {
  long v = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++v;
  }
  return v;
}

// L and M via their defining sums: term j is (-1)^{j or 0} z^{2^j} times
// prod_{i<j} 1/(1 - z^{2^i}).
inline TruncatedSeries<IntegerRing> vaananen_series(long n, bool alternating) {
  IntegerRing Z;
  TruncatedSeries<IntegerRing> acc = TruncatedSeries<IntegerRing>::zero(Z, n);
  std::vector<mpz_class> one(static_cast<size_t>(n), 0);
  one[0] = 1;
  TruncatedSeries<IntegerRing> prod(Z, std::move(one));
  for (long j = 0, e = 1; e < n; ++j, e *= 2) {
    TruncatedSeries<IntegerRing> term = prod.mul_monomial(e).truncate(n);
    acc = acc + (alternating && (j & 1) ? -term : term);
    std::vector<mpz_class> geo(static_cast<size_t>(n), 0);
    for (long i = 0; i * e < n; ++i) geo[static_cast<size_t>(i * e)] = 1;
    prod = prod * TruncatedSeries<IntegerRing>(Z, std::move(geo));
  }
  return acc;
}

}  // namespace detail

inline TruncatedSeries<IntegerRing> gen_named(const std::string& name, long n) {
  IntegerRing Z;
  if (n < 1) throw std::invalid_argument("gen_named: order must be >= 1");
  std::vector<mpz_class> v(static_cast<size_t>(n));
  if (name == "thue_morse_01") {
    for (long m = 0; m < n; ++m) v[static_cast<size_t>(m)] = detail::thue_morse_bit(m);
  } else if (name == "thue_morse_pm1") {
    for (long m = 0; m < n; ++m)
      v[static_cast<size_t>(m)] = detail::thue_morse_bit(m) ? -1 : 1;
  } else if (name == "stern_S" || name == "stern_T") {
    auto a = detail::stern_values(n + 1, name == "stern_T");
    for (long m = 0; m < n; ++m) v[static_cast<size_t>(m)] = a[static_cast<size_t>(m + 1)];
  } else if (name == "paperfolding") {
    for (long m = 0; m < n; ++m) v[static_cast<size_t>(m)] = detail::paperfolding_value(m);
  } else if (name == "cantor") {
    for (long m = 0; m < n; ++m) v[static_cast<size_t>(m)] = detail::cantor_value(m);
  } else if (name == "gros" || name == "calG") {
    v[0] = 0;
    for (long m = 1; m < n; ++m) v[static_cast<size_t>(m)] = detail::v2(m) + 1;
  } else if (name == "calF") {
    // coefficient of z^m: sum over 2^a | m of (-1)^{m/2^a - 1}
    v[0] = 0;
    for (long m = 1; m < n; ++m) {
      long c = 0;
      for (long q = m;; q /= 2) {
        c += (q % 2 == 1) ? 1 : -1;
        if (q % 2 == 1) break;
      }
      v[static_cast<size_t>(m)] = c;
    }
  } else if (name == "L" || name == "M") {
    return detail::vaananen_series(n, name == "M");
  } else if (name == "F5" || name == "F11" || name == "F13" || name == "F17a" ||
             name == "F17b") {
    auto eq = named_equation(name);
    return feq_generate(eq->first, Z, n, eq->second);
  } else {
    throw std::invalid_argument("gen_named: unknown sequence '" + name + "'");
  }
  return TruncatedSeries<IntegerRing>(Z, std::move(v));
}

// -----------------------------------------------------------------------
// Sequence specifications (the CLI surface)

struct SequenceSpec {
  enum class Kind { named, functional_equation, product2, product3, double_sum };

  Kind kind = Kind::named;
  std::string name;

  std::optional<MahlerEquation> eq;
  std::optional<mpz_class> c0;

  mpz_class u;
  std::optional<Polynomial<IntegerRing>> C, D;

  long alpha = 0, beta = 0;
  int sign = 1;

  static SequenceSpec named_spec(std::string n) {
    SequenceSpec s;
    s.kind = Kind::named;
    s.name = std::move(n);
    return s;
  }
};

inline TruncatedSeries<IntegerRing> generate_sequence(const SequenceSpec& spec, long n) {
  IntegerRing Z;
  switch (spec.kind) {
    case SequenceSpec::Kind::named:
      return gen_named(spec.name, n);
    case SequenceSpec::Kind::functional_equation: {
      std::optional<mpz_class> c0 = spec.c0;
      return feq_generate(*spec.eq, Z, n, c0);
    }
    case SequenceSpec::Kind::product2:
      return product2_generate(spec.u, *spec.C, *spec.D, n);
    case SequenceSpec::Kind::product3:
      return product3_generate(*spec.C, *spec.D, n);
    case SequenceSpec::Kind::double_sum:
      return double_sum_generate(spec.alpha, spec.beta, spec.sign, n);
  }
  throw std::logic_error("generate_sequence: bad kind");
}

}  // namespace hankelmu

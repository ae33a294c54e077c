#pragma once

// Iteration of f = A/B + (C/D) f(z^d) into
//
//   f = A_m/B_m + (C_m/D_m) f(z^{d^m}),
//   C_m = prod_{j<m} C(z^{d^j}),  D_m = prod_{j<m} D(z^{d^j}),
//   B_m = D_{m-1} prod_{j<m} B(z^{d^j}),
//
// built division-free through the one-step recurrences
//
//   A_{m+1} = A_m D(z^{d^{m-1}}) B(z^{d^m}) + C_m A(z^{d^m}) U_m,
//   U_m = prod_{j<m} B(z^{d^j}),
//
// together with the explicit rational approximations
//
//   P_{i,m} = A_m D_m Q_i(z^{d^m}) + B_m C_m P_i(z^{d^m}),
//   Q_{i,m} = B_m D_m Q_i(z^{d^m}),
//   q_{i,m} = b^{e_i d^m} |Q_{i,m}(1/b)|,   e_i = a+b+g+2t+n_i,
//
// where (P_i, Q_i) is the [n_i-1/n_i] Pade pair at the i-th nonzero Hankel
// index n_i, cleared to integer polynomials.

#include <optional>
#include <vector>

#include "hankelmu/hfrac.hpp"
#include "hankelmu/pade.hpp"
#include "hankelmu/polynomial.hpp"
#include "hankelmu/sequences.hpp"
#include "hankelmu/series.hpp"

namespace hankelmu {

struct IteratedEquation {
  long m = 1;
  long d_pow_m = 0;
  Polynomial<IntegerRing> A, B, C, D;

  IteratedEquation()
      : A(IntegerRing{}), B(IntegerRing{}), C(IntegerRing{}), D(IntegerRing{}) {}
};

namespace detail {

inline long checked_pow(long d, long m) {
  long r = 1;
  for (long i = 0; i < m; ++i) {
    if (r > (1L << 40) / d) throw std::invalid_argument("d^m too large");
    r *= d;
  }
  return r;
}

inline long clamped_deg(const Polynomial<IntegerRing>& p) {
  return p.is_zero() ? 0 : p.degree();
}

}  // namespace detail

inline IteratedEquation iterate_equation(const MahlerEquation& eq, long m) {
  if (m < 1) throw std::invalid_argument("iterate_equation: m must be >= 1");
  IntegerRing Z;
  using P = Polynomial<IntegerRing>;
  P one = P::constant(Z, 1);

  P A = eq.A, C = eq.C, D = eq.D;      // running A_j, C_j, D_j
  P U = eq.B;                          // U_j = prod_{i<j} B(z^{d^i})
  P Dprev = one;                       // D_{j-1}
  long dp = eq.d;                      // d^j
  for (long j = 1; j < m; ++j) {
    P Bj = eq.B.compose_power(dp);
    A = A * eq.D.compose_power(dp / eq.d) * Bj + C * eq.A.compose_power(dp) * U;
    Dprev = D;
    C = C * eq.C.compose_power(dp);
    D = D * eq.D.compose_power(dp);
    U = U * Bj;
    dp = detail::checked_pow(eq.d, j + 1);
  }

  IteratedEquation it;
  it.m = m;
  it.d_pow_m = detail::checked_pow(eq.d, m);
  it.A = A;
  it.B = Dprev * U;
  it.C = C;
  it.D = D;

  // degree bounds from the iteration; equalities for C_m and D_m
  const long dm = it.d_pow_m;
  const long geom = (dm - 1) / (eq.d - 1);
  if (!eq.C.is_zero() && it.C.degree() != eq.C.degree() * geom)
    throw std::logic_error("iterate_equation: deg C_m mismatch");
  if (!eq.D.is_zero() && it.D.degree() != eq.D.degree() * geom)
    throw std::logic_error("iterate_equation: deg D_m mismatch");
  if (it.B.degree() > (detail::clamped_deg(eq.B) + detail::clamped_deg(eq.D)) * dm)
    throw std::logic_error("iterate_equation: deg B_m bound violated");
  if (it.A.degree() > (detail::clamped_deg(eq.A) + detail::clamped_deg(eq.B) +
                       detail::clamped_deg(eq.C) + detail::clamped_deg(eq.D)) *
                          dm)
    throw std::logic_error("iterate_equation: deg A_m bound violated");
  return it;
}

// Residual of the iterated identity against a generated prefix of f:
// D_m B_m f - D_m A_m - C_m B_m f(z^{d^m}) must vanish to f's order.
inline bool iterated_identity_holds(const IteratedEquation& it,
                                    const TruncatedSeries<IntegerRing>& f) {
  const long n = f.order();
  TruncatedSeries<IntegerRing> lhs = f.mul_poly(it.D * it.B);
  TruncatedSeries<IntegerRing> comp = f.compose_power(it.d_pow_m).truncate(n);
  TruncatedSeries<IntegerRing> rhs =
      poly_prefix(it.D * it.A, n) + comp.mul_poly(it.C * it.B);
  return (lhs - rhs).is_zero_prefix();
}

struct ExplicitApproximant {
  long i = 0;       // index into the nonzero Hankel index sequence (n_i)
  long m = 0;
  long n_i = 0;
  long n_i_prime = 0;
  long e = 0;       // scaling exponent e_i
  long d = 2;
  long eta = 0;     // valuation of C at 0
  long iota = 0;    // valuation of D at 0
  Polynomial<IntegerRing> P_im, Q_im;
  mpz_class p, q;   // q = b^{e_i d^m} |Q_{i,m}(1/b)| > 0, p sign-adjusted

  ExplicitApproximant() : P_im(IntegerRing{}), Q_im(IntegerRing{}) {}
};

namespace detail {

// b^E R(1/b) as an exact integer; requires E >= deg R.
inline mpz_class scaled_eval(const Polynomial<IntegerRing>& R, const mpz_class& b,
                             long E) {
  if (R.degree() > E) throw std::logic_error("scaled_eval: exponent below degree");
  mpz_class acc = 0;
  for (long j = 0; j <= R.degree(); ++j)
    acc += R.coeff(j) * pow_mpz(b, static_cast<unsigned long>(E - j));
  return acc;
}

}  // namespace detail

// The integer pair (p_{i,m}, q_{i,m}) approximating f(1/b), where n_i is the
// i-th (0-based) nonzero Hankel index of f.  The Pade pair comes from
// pade_construct over Q, cleared to integer polynomials (the clearing
// constant multiplies P and Q alike and cancels in p/q).
inline ExplicitApproximant build_approximant(const MahlerEquation& eq,
                                             const TruncatedSeries<IntegerRing>& f,
                                             const mpz_class& b, long i, long m) {
  if (b < 2) throw std::invalid_argument("build_approximant: b must be >= 2");
  if (i < 0 || m < 0) throw std::invalid_argument("build_approximant: i, m >= 0");
  if (eq.C.is_zero())
    throw std::invalid_argument("build_approximant: C = 0 makes f rational");

  TruncatedSeries<RationalRing> fq = to_rational(f);
  HFraction<RationalRing> h = hfrac_expand(fq);
  std::vector<long> s = h.s_indices();
  if (static_cast<long>(s.size()) < i + 2)
    throw insufficient_order("build_approximant: not enough certified Hankel indices");
  const long n_i = s[static_cast<size_t>(i + 1)];

  PadeApproximant<RationalRing> pa = pade_construct(fq, n_i);
  if (!pa.k_prime)
    throw insufficient_order("build_approximant: k' not located within series order");
  const long n_ip = *pa.k_prime;
  if (static_cast<long>(s.size()) >= i + 3 && n_ip >= s[static_cast<size_t>(i + 2)])
    throw std::logic_error("build_approximant: n_i' >= n_{i+1}");

  auto [Pi_raw, cp] = clear_denominators(pa.P);
  auto [Qi_raw, cq] = clear_denominators(pa.Q);
  // common clearing constant so that P/Q is preserved
  IntegerRing Z;
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
  Polynomial<IntegerRing> Pi = Pi_raw.scaled(l / cp);
  Polynomial<IntegerRing> Qi = Qi_raw.scaled(l / cq);

  ExplicitApproximant ap;
  ap.i = i;
  ap.m = m;
  ap.n_i = n_i;
  ap.n_i_prime = n_ip;
  ap.d = eq.d;
  ap.eta = eq.C.valuation();
  ap.iota = eq.D.valuation();
  ap.e = detail::clamped_deg(eq.A) + detail::clamped_deg(eq.B) +
         detail::clamped_deg(eq.C) + 2 * detail::clamped_deg(eq.D) + n_i;

  long dm = detail::checked_pow(eq.d, m);
  if (m == 0) {
    ap.P_im = Pi;
    ap.Q_im = Qi;
  } else {
    IteratedEquation it = iterate_equation(eq, m);
    Polynomial<IntegerRing> Qc = Qi.compose_power(dm), Pc = Pi.compose_power(dm);
    ap.P_im = it.A * it.D * Qc + it.B * it.C * Pc;
    ap.Q_im = it.B * it.D * Qc;
  }

  const long E = ap.e * dm;
  mpz_class qv = detail::scaled_eval(ap.Q_im, b, E);
  if (qv == 0)
    throw std::invalid_argument(
        "build_approximant: B(1/b^{d^m}) D(1/b^{d^m}) Q_i(1/b^{d^m}) vanishes");
  mpz_class pv = detail::scaled_eval(ap.P_im, b, E);
  ap.q = abs(qv);
  ap.p = sgn(qv) < 0 ? mpz_class(-pv) : pv;
  return ap;
}

struct AuditRecord {
  long i = 0, m = 0;
  long q_bits = 0;
  double measured_exponent = 0;   // -log_b |f(1/b) - p/q|
  double predicted_exponent = 0;  // (n_i+n_i') d^m + (eta+iota)(d^m-1)/(d-1)
  double ratio = 0;
  bool within_tol = false;
  bool degenerate = false;        // residual exactly zero (rational case)
};

// Compares the measured decay of |f(1/b) - p/q| against the asymptotic
// prediction.  approximation/error_bound describe f(1/b): the bound must sit
// at least an order of magnitude below the residual being measured.
inline AuditRecord audit_approximation(const ExplicitApproximant& ap,
                                       const mpq_class& approximation,
                                       const mpq_class& error_bound, const mpz_class& b,
                                       double tol = 0.05) {
  AuditRecord rec;
  rec.i = ap.i;
  rec.m = ap.m;
  rec.q_bits = static_cast<long>(mpz_sizeinbase(ap.q.get_mpz_t(), 2));
  long dm = detail::checked_pow(ap.d, ap.m);
  rec.predicted_exponent = static_cast<double>((ap.n_i + ap.n_i_prime) * dm) +
                           static_cast<double>((ap.eta + ap.iota) * (dm - 1)) /
                               static_cast<double>(ap.d - 1);
  mpq_class delta = abs(approximation - make_rational(ap.p, ap.q));
  if (delta == 0) {
    rec.degenerate = true;
    return rec;
  }
  if (error_bound * 10 > delta)
    throw std::invalid_argument("audit_approximation: evaluation not precise enough");
  rec.measured_exponent = -log2_abs(delta) / log2_abs(mpq_class(b));
  rec.ratio = rec.measured_exponent / rec.predicted_exponent;
  rec.within_tol = std::fabs(rec.ratio - 1.0) <= tol;
  return rec;
}

}  // namespace hankelmu

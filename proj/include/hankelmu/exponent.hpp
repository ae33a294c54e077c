#pragma once

// Evaluation of integer series at 1/b with a rigorous tail bound, certified
// continued-fraction prefixes of the value, and the irrationality-exponent
// estimate mu = 2 + limsup log a_{n+1} / log q_n, approximated by a max over
// a trailing window of the certified range.
//
// Tail bounds are declared by the caller (the tool never infers coefficient
// growth) and are checked against the known prefix:
//     constant K     |c_j| <= K
//     linear         |c_j| <= j + 1
//     geometric r<b  |c_j| <= r^j
//
// Certification of partial quotients is twofold: a digit is reported only if
// (a) every real in [x - err, x + err] shares it (interval agreement, the
// sound criterion), and (b) the conservative cutoff 2 q_n q_{n+1} err < 1
// admits it.

#include <optional>
#include <variant>
#include <vector>

#include "hankelmu/rings.hpp"
#include "hankelmu/series.hpp"

namespace hankelmu {

struct EvaluatedNumber {
  mpq_class approximation;  // sum_{j<M} c_j b^{-j}, exact
  mpq_class error_bound;    // rigorous bound on the dropped tail
  mpz_class b;
  long M = 0;
};

struct BoundConstant {
  mpq_class K;
};
struct BoundLinear {};
struct BoundGeometric {
  mpq_class r;
};
using CoeffBound = std::variant<BoundConstant, BoundLinear, BoundGeometric>;

inline EvaluatedNumber evaluate_at(const TruncatedSeries<IntegerRing>& f,
                                   const mpz_class& b, long M, const CoeffBound& bound) {
  if (b < 2) throw std::invalid_argument("evaluate_at: b must be >= 2");
  if (M < 1 || M > f.order())
    throw insufficient_order("evaluate_at: M exceeds known coefficients");

  // check the declared bound on the known prefix
  if (std::holds_alternative<BoundConstant>(bound)) {
    const mpq_class& K = std::get<BoundConstant>(bound).K;
    for (long j = 0; j < M; ++j)
      if (abs(mpq_class(f.coeff(j))) > K)
        throw std::invalid_argument("evaluate_at: constant bound violated at index " +
                                    std::to_string(j));
  } else if (std::holds_alternative<BoundLinear>(bound)) {
    for (long j = 0; j < M; ++j)
      if (abs(f.coeff(j)) > j + 1)
        throw std::invalid_argument("evaluate_at: linear bound violated at index " +
                                    std::to_string(j));
  } else {
    const mpq_class& r = std::get<BoundGeometric>(bound).r;
    if (r >= mpq_class(b))
      throw std::invalid_argument("evaluate_at: geometric bound needs r < b");
    mpq_class rj(1);
    for (long j = 0; j < M; ++j, rj *= r)
      if (abs(mpq_class(f.coeff(j))) > rj)
        throw std::invalid_argument("evaluate_at: geometric bound violated at index " +
                                    std::to_string(j));
  }

  // Horner: sum_{j<M} c_j b^{-j} = (sum c_j b^{M-1-j}) / b^{M-1}
  mpz_class num = 0;
  for (long j = 0; j < M; ++j) num = num * b + f.coeff(j);
  EvaluatedNumber ev;
  ev.b = b;
  ev.M = M;
  ev.approximation = make_rational(num, pow_mpz(b, static_cast<unsigned long>(M - 1)));

  mpq_class x = make_rational(1, b);
  mpq_class xM;
  {
    mpz_class bm = pow_mpz(b, static_cast<unsigned long>(M));
    xM = make_rational(1, bm);
  }
  if (std::holds_alternative<BoundConstant>(bound)) {
    const mpq_class& K = std::get<BoundConstant>(bound).K;
    ev.error_bound = K * xM / (1 - x);
  } else if (std::holds_alternative<BoundLinear>(bound)) {
    // sum_{j>=M} (j+1) x^j = x^M ((M+1) - M x) / (1-x)^2
    ev.error_bound = xM * (mpq_class(M + 1) - mpq_class(M) * x) / ((1 - x) * (1 - x));
  } else {
    const mpq_class& r = std::get<BoundGeometric>(bound).r;
    mpq_class rx = r * x;
    mpq_class rxM(1);
    for (long j = 0; j < M; ++j) rxM *= rx;
    ev.error_bound = rxM / (1 - rx);
  }
  return ev;
}

struct ExponentEstimate {
  std::vector<mpz_class> a;  // certified partial quotients a_0..a_n
  std::vector<mpz_class> q;  // convergent denominators q_0..q_n
  long window = 0;           // tail-window length used for mu_hat
  double mu_hat = 2.0;       // 2 + max over the tail window of log a_{k+1}/log q_k
  double mu_hat_full = 2.0;  // same max over the whole certified range
};

namespace detail {

// Common continued-fraction digits of every y in [lo, hi].
inline std::vector<mpz_class> interval_cf_digits(mpq_class lo, mpq_class hi,
                                                 long max_digits) {
  std::vector<mpz_class> out;
  while (static_cast<long>(out.size()) < max_digits) {
    mpz_class flo, fhi;
    mpz_fdiv_q(flo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    if (flo != fhi) break;
    out.push_back(flo);
    mpq_class fl(flo);
    if (lo == fl) break;  // boundary: the next digit is not determined
    mpq_class nlo = 1 / (hi - fl);
    mpq_class nhi = 1 / (lo - fl);
    lo = nlo;
    hi = nhi;
  }
  return out;
}

}  // namespace detail

inline ExponentEstimate certified_cf(const EvaluatedNumber& x, long window = 0,
                                     long max_digits = 1000000) {
  if (!(x.error_bound < make_rational(1, 2)))
    throw std::invalid_argument("certified_cf: error bound must be < 1/2");
  std::vector<mpz_class> digits = detail::interval_cf_digits(
      x.approximation - x.error_bound, x.approximation + x.error_bound, max_digits);
  if (digits.empty())
    throw std::invalid_argument("certified_cf: no certifiable partial quotients");

  // convergent denominators, plus the conservative cutoff
  std::vector<mpz_class> q;
  q.reserve(digits.size());
  mpz_class qm2 = 0, qm1 = 1;  // q_{-2} unused, q_{-1} = 0, q_0 = 1
  long keep = 0;
  for (size_t n = 0; n < digits.size(); ++n) {
    mpz_class qn = (n == 0) ? mpz_class(1) : mpz_class(digits[n] * qm1 + qm2);
    if (n > 0) {
      qm2 = qm1;
      qm1 = qn;
    }
    q.push_back(qn);
    if (n + 1 < digits.size()) {
      mpz_class qnext = digits[n + 1] * q[n] + (n == 0 ? mpz_class(0) : q[n - 1]);
      if (2 * q[n] * qnext * x.error_bound < 1) keep = static_cast<long>(n) + 1;
    }
  }
  if (keep == 0)
    throw std::invalid_argument("certified_cf: no certifiable partial quotients");
  digits.resize(static_cast<size_t>(keep));
  q.resize(static_cast<size_t>(keep));

  ExponentEstimate est;
  est.a = std::move(digits);
  est.q = std::move(q);
  const long n = static_cast<long>(est.a.size());
  if (window <= 0) window = n / 2;  // default: last half of certified indices
  est.window = window;
  auto ratio = [&](long k) {
    double lq = log2_abs(est.q[static_cast<size_t>(k)]);
    if (lq <= 0) return 0.0;
    return log2_abs(est.a[static_cast<size_t>(k + 1)]) / lq;
  };
  double full = 0, tail = 0;
  for (long k = 1; k + 1 < n; ++k) {
    double r = ratio(k);
    full = std::max(full, r);
    if (k >= n - 1 - window) tail = std::max(tail, r);
  }
  est.mu_hat_full = 2.0 + full;
  est.mu_hat = 2.0 + tail;
  return est;
}

inline mpq_class mu_bound_from_rho(const mpq_class& rho, long d) {
  if (rho < 1) throw std::invalid_argument("mu_bound_from_rho: rho must be >= 1");
  if (d < 2) throw std::invalid_argument("mu_bound_from_rho: d must be >= 2");
  mpq_class r2 = rho * rho;
  mpq_class dd(d);
  return (1 + rho) * (r2 < dd ? r2 : dd);
}

}  // namespace hankelmu

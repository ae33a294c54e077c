#pragma once

// Exact coefficient rings used throughout the library: arbitrary-precision
// integers and rationals (GMP), and Z/mZ with a machine-word modulus.
// A ring is a small value object providing constants, conversions and the
// few operations (inversion, exact division) that the generic polynomial /
// series / determinant code needs.  Elements are plain value types with
// operator arithmetic.

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hankelmu {

struct ring_mismatch : std::runtime_error {
  ring_mismatch() : std::runtime_error("ring mismatch") {}
  explicit ring_mismatch(const std::string& w) : std::runtime_error(w) {}
};

struct insufficient_order : std::runtime_error {
  explicit insufficient_order(const std::string& w) : std::runtime_error(w) {}
};

struct not_invertible : std::runtime_error {
  explicit not_invertible(const std::string& w) : std::runtime_error(w) {}
};

// Exact rational from a numerator/denominator pair, canonicalized.
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// log2 |x| as a double, usable for values of arbitrary size.
inline double log2_abs(const mpz_class& x) {
  if (x == 0) return -HUGE_VAL;
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(exp2);
}

inline double log2_abs(const mpq_class& x) {
  if (x == 0) return -HUGE_VAL;
  return log2_abs(x.get_num()) - log2_abs(x.get_den());
}

// ---------------------------------------------------------------------------
// Z/mZ

// Residue together with its modulus.  Moduli are limited to < 2^62 so that
// products fit in unsigned __int128; arithmetic between different moduli
// throws ring_mismatch.  Division requires the divisor to be a unit.
class ModInt {
 public:
  ModInt(std::uint64_t value, std::uint64_t modulus)
      : r_(value % modulus), m_(modulus) {}

  static ModInt from_mpz(const mpz_class& v, std::uint64_t m) {
    mpz_class mm(static_cast<unsigned long>(m));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    return ModInt(mpz_get_ui(r.get_mpz_t()), m);
  }

  std::uint64_t value() const { return r_; }
  std::uint64_t modulus() const { return m_; }

  friend ModInt operator+(const ModInt& a, const ModInt& b) {
    a.check(b);
    std::uint64_t s = a.r_ + b.r_;
    if (s >= a.m_) s -= a.m_;
    return ModInt(s, a.m_, 0);
  }
  friend ModInt operator-(const ModInt& a, const ModInt& b) {
    a.check(b);
    std::uint64_t s = a.r_ >= b.r_ ? a.r_ - b.r_ : a.r_ + a.m_ - b.r_;
    return ModInt(s, a.m_, 0);
  }
  friend ModInt operator*(const ModInt& a, const ModInt& b) {
    a.check(b);
    unsigned __int128 p = static_cast<unsigned __int128>(a.r_) * b.r_;
    return ModInt(static_cast<std::uint64_t>(p % a.m_), a.m_, 0);
  }
  ModInt operator-() const { return ModInt(r_ == 0 ? 0 : m_ - r_, m_, 0); }

  ModInt& operator+=(const ModInt& o) { return *this = *this + o; }
  ModInt& operator-=(const ModInt& o) { return *this = *this - o; }
  ModInt& operator*=(const ModInt& o) { return *this = *this * o; }

  // Extended Euclid; throws unless gcd(value, modulus) = 1.
  ModInt inverse() const {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m_),
                 nr = static_cast<std::int64_t>(r_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1)
      throw not_invertible("ModInt: " + std::to_string(r_) + " is not a unit mod " +
                           std::to_string(m_));
    if (t < 0) t += static_cast<std::int64_t>(m_);
    return ModInt(static_cast<std::uint64_t>(t), m_, 0);
  }

  friend ModInt operator/(const ModInt& a, const ModInt& b) {
    a.check(b);
    return a * b.inverse();
  }

  bool operator==(const ModInt& o) const { return r_ == o.r_ && m_ == o.m_; }
  bool operator!=(const ModInt& o) const { return !(*this == o); }

  friend std::ostream& operator<<(std::ostream& os, const ModInt& x) {
    return os << x.r_ << " (mod " << x.m_ << ")";
  }

 private:
  ModInt(std::uint64_t r, std::uint64_t m, int) : r_(r), m_(m) {}
  void check(const ModInt& o) const {
    if (m_ != o.m_)
      throw ring_mismatch("ModInt: mixed moduli " + std::to_string(m_) + " and " +
                          std::to_string(o.m_));
  }

  std::uint64_t r_;
  std::uint64_t m_;
};

// ---------------------------------------------------------------------------
// Ring objects

struct IntegerRing {
  using Elem = mpz_class;

  Elem zero() const { return mpz_class(0); }
  Elem one() const { return mpz_class(1); }
  Elem from_long(long v) const { return mpz_class(v); }
  Elem from_mpz(const mpz_class& v) const { return v; }
  bool is_zero(const Elem& x) const { return sgn(x) == 0; }
  bool is_field() const { return false; }

  std::optional<Elem> try_invert(const Elem& x) const {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
  }

  // a / b when b divides a exactly; anything else is a caller bug.
  Elem divide_exact(const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) throw not_invertible("Z: division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("Z: non-exact division");
    return q;
  }

  std::string name() const { return "Z"; }
  bool operator==(const IntegerRing&) const { return true; }
  bool operator!=(const IntegerRing&) const { return false; }
};

struct RationalRing {
  using Elem = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem from_long(long v) const { return mpq_class(v); }
  Elem from_mpz(const mpz_class& v) const { return mpq_class(v); }
  bool is_zero(const Elem& x) const { return sgn(x) == 0; }
  bool is_field() const { return true; }

  std::optional<Elem> try_invert(const Elem& x) const {
    if (sgn(x) == 0) return std::nullopt;
    return Elem(1 / x);
  }

  Elem divide_exact(const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) throw not_invertible("Q: division by zero");
    return a / b;
  }

  std::string name() const { return "Q"; }
  bool operator==(const RationalRing&) const { return true; }
  bool operator!=(const RationalRing&) const { return false; }
};

class ModRing {
 public:
  using Elem = ModInt;

  explicit ModRing(std::uint64_t m) : m_(m) {
    if (m < 2) throw std::invalid_argument("ModRing: modulus must be >= 2");
    if (m >= (std::uint64_t{1} << 62))
      throw std::invalid_argument("ModRing: modulus must be < 2^62");
    mpz_class mm(static_cast<unsigned long>(m));
    prime_ = mpz_probab_prime_p(mm.get_mpz_t(), 30) != 0;
  }

  std::uint64_t modulus() const { return m_; }
  bool is_prime() const { return prime_; }

  Elem zero() const { return Elem(0, m_); }
  Elem one() const { return Elem(1, m_); }
  Elem from_long(long v) const { return from_mpz(mpz_class(v)); }
  Elem from_mpz(const mpz_class& v) const { return Elem::from_mpz(v, m_); }
  bool is_zero(const Elem& x) const { return x.value() == 0; }
  bool is_field() const { return prime_; }

  std::optional<Elem> try_invert(const Elem& x) const {
    try {
      return x.inverse();
    } catch (const not_invertible&) {
      return std::nullopt;
    }
  }

  Elem divide_exact(const Elem& a, const Elem& b) const { return a / b; }

  std::string name() const {
    return prime_ ? "F_" + std::to_string(m_) : "Z/" + std::to_string(m_) + "Z";
  }
  bool operator==(const ModRing& o) const { return m_ == o.m_; }
  bool operator!=(const ModRing& o) const { return m_ != o.m_; }

 private:
  std::uint64_t m_;
  bool prime_;
};

// x^e by repeated squaring (e >= 0).
template <class K>
typename K::Elem pow_elem(const K& ring, typename K::Elem x, unsigned long e) {
  typename K::Elem r = ring.one();
  while (e > 0) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

}  // namespace hankelmu

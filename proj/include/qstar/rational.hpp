#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qstar {

/// Arbitrary-precision rational scalar. Stored reduced with a positive
/// denominator; every operation is exact.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long n) noexcept {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);

  /// Parses "p/q", an integer, or a plain decimal such as "0.25".
  explicit Rational(std::string_view text);

  Rational(const Rational& other) noexcept {
    mpq_init(q_);
    mpq_set(q_, other.q_);
  }
  Rational(Rational&& other) noexcept {
    mpq_init(q_);
    mpq_swap(q_, other.q_);
  }
  Rational& operator=(const Rational& other) noexcept {
    mpq_set(q_, other.q_);
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_, b.q_);
    return c <=> 0;
  }

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double x);

  int sign() const noexcept { return mpq_sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept;

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  /// floor(value) as a machine integer; throws std::overflow_error if it
  /// does not fit.
  long floor_long() const;

  double to_double() const noexcept { return mpq_get_d(q_); }

  /// "p/q", or just "p" for integers.
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  /// Fixed-point decimal rendering rounded to `digits` fractional digits.
  std::string decimal(std::size_t digits) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_t q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace qstar

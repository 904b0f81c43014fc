#include "qstar/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qstar {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void set_integer(mpz_t z, std::string_view digits) {
  if (mpz_set_str(z, std::string(digits).c_str(), 10) != 0) {
    throw std::invalid_argument("invalid integer literal");
  }
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_init(q_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

Rational::Rational(std::string_view text) {
  mpq_init(q_);
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    mpq_clear(q_);
    throw std::invalid_argument("empty rational literal: '" + std::string(text) + "'");
  }

  try {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      std::string_view num = s.substr(0, slash);
      std::string_view den = s.substr(slash + 1);
      if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("expected \"p/q\" with integer p, q");
      }
      set_integer(mpq_numref(q_), num);
      set_integer(mpq_denref(q_), den);
      if (mpz_sgn(mpq_denref(q_)) == 0) throw std::invalid_argument("zero denominator");
      mpq_canonicalize(q_);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view ip = s.substr(0, dot);
      std::string_view fp = s.substr(dot + 1);
      if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed decimal");
      if (!ip.empty() && !all_digits(ip)) throw std::invalid_argument("malformed decimal");
      if (!fp.empty() && !all_digits(fp)) throw std::invalid_argument("malformed decimal");
      std::string joined;
      joined.append(ip);
      joined.append(fp);
      set_integer(mpq_numref(q_), joined.empty() ? "0" : joined);
      mpz_ui_pow_ui(mpq_denref(q_), 10, fp.size());
      mpq_canonicalize(q_);
    } else {
      if (!all_digits(s)) throw std::invalid_argument("malformed integer");
      set_integer(mpq_numref(q_), s);
      mpz_set_ui(mpq_denref(q_), 1);
    }
  } catch (const std::invalid_argument& e) {
    mpq_clear(q_);
    throw std::invalid_argument(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
  if (negative) mpq_neg(q_, q_);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rational r;
  mpq_set_d(r.q_, x);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

bool Rational::is_integer() const noexcept {
  return mpz_cmp_ui(mpq_denref(q_), 1) == 0;
}

long Rational::floor_long() const {
  mpz_t f;
  mpz_init(f);
  mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
  if (!mpz_fits_slong_p(f)) {
    mpz_clear(f);
    throw std::overflow_error("floor does not fit in a machine integer");
  }
  const long result = mpz_get_si(f);
  mpz_clear(f);
  return result;
}

namespace {

std::string mpz_to_string(const mpz_t z) {
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string s(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, s.size() + 1);
  return s;
}

}  // namespace

std::string Rational::str() const {
  std::string s = mpz_to_string(mpq_numref(q_));
  if (!is_integer()) {
    s += '/';
    s += mpz_to_string(mpq_denref(q_));
  }
  return s;
}

std::string Rational::numerator_str() const { return mpz_to_string(mpq_numref(q_)); }
std::string Rational::denominator_str() const { return mpz_to_string(mpq_denref(q_)); }

std::string Rational::decimal(std::size_t digits) const {
  mpz_t scaled, q, r, den;
  mpz_inits(scaled, q, r, den, nullptr);
  mpz_ui_pow_ui(scaled, 10, digits);
  mpz_mul(scaled, scaled, mpq_numref(q_));
  mpz_abs(scaled, scaled);
  mpz_set(den, mpq_denref(q_));
  mpz_tdiv_qr(q, r, scaled, den);
  // round half away from zero
  mpz_mul_ui(r, r, 2);
  if (mpz_cmp(r, den) >= 0) mpz_add_ui(q, q, 1);
  std::string body = mpz_to_string(q);
  mpz_clears(scaled, q, r, den, nullptr);

  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out;
  if (sign() < 0) out += '-';
  out.append(body, 0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out.append(body, body.size() - digits, digits);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qstar

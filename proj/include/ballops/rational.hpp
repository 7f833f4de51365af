#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"

namespace ballops {

// Exact rational scalar backed by GMP. Values are always canonical:
// lowest terms, positive denominator. All arithmetic is exact; division
// by zero throws instead of trapping.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(n) {}                // NOLINT
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(int num, int den) {
    require(den != 0, ErrorCode::InvalidNumber, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "p/q", integers, and decimal strings ("-1.25" becomes -5/4 exactly).
  static Rational parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    require(!s.empty(), ErrorCode::InvalidNumber, "empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      require(is_integer_literal(num) && is_integer_literal(den), ErrorCode::InvalidNumber,
              "bad rational '" + text + "'");
      mpq_class q(parse_mpz(num), parse_mpz(den));
      require(q.get_den() != 0, ErrorCode::InvalidNumber, "zero denominator in '" + text + "'");
      q.canonicalize();
      return Rational(std::move(q));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      require(is_integer_literal(s), ErrorCode::InvalidNumber, "bad number '" + text + "'");
      return Rational(mpq_class(parse_mpz(s)));
    }
    std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
      neg = head[0] == '-';
      head = head.substr(1);
    }
    if (head.empty()) head = "0";
    require(is_digits(head) && is_digits(frac) && !frac.empty(), ErrorCode::InvalidNumber,
            "bad decimal '" + text + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class units(head, 10);
    mpz_class value = units * scale + mpz_class(frac, 10);
    if (neg) value = -value;
    mpq_class q(value, scale);
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    check_internal(!o.is_zero(), "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  // Canonical text form: "p" when integral, else "p/q".
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  // Fixed-point decimal rendering, truncated toward zero. Display only.
  std::string decimal(int digits) const {
    check_internal(digits >= 0, "negative precision");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = (v_.get_num() * scale) / v_.get_den();  // truncates toward zero
    bool neg = scaled < 0;
    mpz_class a = abs(scaled);
    std::string body = a.get_str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out = neg ? "-" : "";
    if (digits == 0) return out + body;
    out += body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    // trim trailing zeros but keep at least one fractional digit
    auto last = out.find_last_not_of('0');
    if (out[last] == '.') ++last;
    return out.substr(0, last + 1);
  }

  double to_double() const { return v_.get_d(); }

  static const Rational& zero() {
    static const Rational z(0);
    return z;
  }
  static const Rational& one() {
    static const Rational o(1);
    return o;
  }

private:
  static bool is_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }
  static bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    return i < s.size() && is_digits(s.substr(i));
  }
  // mpz_class rejects a leading '+'
  static mpz_class parse_mpz(const std::string& s) {
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
  }

  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Exact power of two fraction 1/2^k, used for probe tolerances.
inline Rational pow2_inverse(unsigned k) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
  return Rational(mpq_class(mpz_class(1), scale));
}

}  // namespace ballops

#ifndef CONTINUUM_RATIONAL_HPP
#define CONTINUUM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace continuum {

using Int = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int l = a.num_ * b.den_;
    const Int r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // 2^e for any integer e, exact.
  static Rational pow2(long e) {
    Rational r;
    if (e >= 0) {
      r.num_ = Int(1) << static_cast<unsigned>(e);
    } else {
      r.num_ = 1;
      r.den_ = Int(1) << static_cast<unsigned>(-e);
    }
    return r;
  }

  // p^e for integer e (p != 0 when e < 0).
  static Rational pow(const Rational& p, const Int& e);

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  // Parses "a" or "a/b" with optional leading sign; throws on junk.
  static Rational parse(std::string_view text);

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Rational Rational::pow(const Rational& p, const Int& e) {
  if (e < 0) {
    if (p.is_zero()) throw std::domain_error("0 to negative power");
    return pow(Rational(p.den(), p.num()), -e);
  }
  Rational acc(1);
  Rational base = p;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { throw std::invalid_argument("bad rational: " + std::string(text)); };
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  const auto digits = [&]() -> Int {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) bad();
    Int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  };
  Int n = digits();
  Int d = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    d = digits();
  }
  if (pos != text.size()) bad();
  return Rational(neg ? -n : n, d);
}

}  // namespace continuum

#endif

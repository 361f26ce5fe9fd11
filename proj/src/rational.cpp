#include "evenzeta/rational.hpp"

#include <mutex>
#include <ostream>
#include <vector>

#include "evenzeta/error.hpp"

namespace evenzeta {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw DivisionByZero();
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    if (s.empty() || s == "+" || s == "-") {
      throw InputError("malformed rational: '" + std::string(text) + "'");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InputError("malformed rational: '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
  };
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) {
      v.remove_suffix(1);
    }
    return v;
  };
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t));
  BigInt den = parse_int(trim(t.substr(slash + 1)));
  if (sgn(den) == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_int(trim(t.substr(0, slash))), std::move(den));
}

const BigInt& Rational::as_integer() const {
  if (!is_integer()) throw DomainError("not an integer: " + to_string());
  return num_;
}

bool Rational::is_normalized() const {
  if (sgn(den_) <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return g == 1;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  // rhs may alias *this
  BigInt n = rhs.num_;
  BigInt d = rhs.den_;
  num_ *= d;
  den_ *= n;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

long double Rational::to_long_double() const {
  mpf_class q(0, 256);
  q = mpf_class(num_, 256) / mpf_class(den_, 256);
  // mpf -> long double via string keeps more than double precision
  mp_exp_t exp = 0;
  std::string digits = q.get_str(exp, 10, 30);
  if (digits.empty()) return 0.0L;
  bool neg = digits[0] == '-';
  if (neg) digits.erase(0, 1);
  std::string sci = (neg ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return std::stold(sci);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt double_factorial_odd(unsigned i) {
  BigInt r = 1;
  for (unsigned j = 1; j <= i; ++j) r *= 2 * j + 1;
  return r;
}

BigInt factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

BigInt pow2(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace evenzeta

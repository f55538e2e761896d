#include "hspecht/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hspecht {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() ||
      den == std::numeric_limits<std::int64_t>::min()) {
    *this = from_big(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(abs64(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_big(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
      q.get_num() != std::numeric_limits<long>::min()) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("Rational::to_int64: not an integer");
  if (big_) {
    if (!big_->get_num().fits_slong_p()) throw std::overflow_error("Rational::to_int64: out of range");
    return big_->get_num().get_si();
  }
  return num_;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  return from_big(q);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) return from_big(1 / *big_);
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() + b.to_mpq());
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  Rational r;
  if (a.den_ == b.den_) {
    i128 n = static_cast<i128>(a.num_) + b.num_;
    if (a.den_ == 1) {
      if (fits(n)) {
        r.num_ = static_cast<std::int64_t>(n);
        return r;
      }
      return Rational::from_big(mpq_class(to_mpz(n)));
    }
  }
  // Henrici: g = gcd(da, db); the result's common factor divides g.
  std::int64_t g = std::gcd(a.den_, b.den_);
  i128 n = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
  i128 d = static_cast<i128>(a.den_) * (b.den_ / g);
  if (n == 0) return Rational();
  if (g > 1) {
    auto rem = static_cast<std::int64_t>(n % g);
    std::int64_t g2 = std::gcd(abs64(rem), g);
    if (g2 > 1) {
      n /= g2;
      d /= g2;
    }
  }
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_big(mpq_class(to_mpz(n), to_mpz(d)));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  std::int64_t g1 = std::gcd(abs64(a.num_), b.den_);
  std::int64_t g2 = std::gcd(abs64(b.num_), a.den_);
  i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_big(mpq_class(to_mpz(n), to_mpz(d)));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hspecht

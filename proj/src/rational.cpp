#include "ellchow/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ellchow {

static_assert(sizeof(long) == 8, "64-bit long required for the coefficient tables");

Rational::Rational(long long n) : v_(static_cast<long>(n)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  auto fail = [&] {
    throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(s) + "'");
  };
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) fail();
  std::string body(s.substr(b, e - b + 1));

  auto check_int = [&](const std::string& t) {
    if (t.empty()) fail();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) fail();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') fail();
  };

  size_t slash = body.find('/');
  mpq_class v;
  if (slash == std::string::npos) {
    check_int(body);
    v = mpq_class(body);
  } else {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw std::domain_error("Rational::parse: zero denominator in '" + body + "'");
    v = mpq_class(mpz_class(num), d);
    v.canonicalize();
  }
  return Rational(std::move(v));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ellchow

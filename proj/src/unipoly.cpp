#include "ellchow/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ellchow {

namespace {
const Rational kZero{};
}

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly UniPoly::variable() { return monomial(1, Rational(1)); }

UniPoly UniPoly::monomial(int power, const Rational& c) {
  if (power < 0) throw std::invalid_argument("UniPoly::monomial: negative power");
  UniPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(power) + 1, Rational());
  p.c_.back() = c;
  return p;
}

UniPoly UniPoly::linear(const Rational& c0, const Rational& c1) {
  return UniPoly(std::vector<Rational>{c0, c1});
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(power)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) return kZero;
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = Rational(1) / leading();
  return inv * *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
  UniPoly r = *this;
  if (degree() < d.degree()) return {UniPoly{}, r};
  std::vector<Rational> q(static_cast<size_t>(degree() - d.degree()) + 1);
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational f = r.leading() / d.leading();
    q[static_cast<size_t>(shift)] = f;
    for (int k = 0; k <= d.degree(); ++k) {
      size_t idx = static_cast<size_t>(k + shift);
      r.c_[idx] -= f * d.c_[static_cast<size_t>(k)];
    }
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(p));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  if (s.is_zero()) return {};
  UniPoly q = p;
  for (auto& c : q.c_) c *= s;
  return q;
}

std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? '-' : '+');
    }
    bool unit = (a == Rational(1));
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace ellchow

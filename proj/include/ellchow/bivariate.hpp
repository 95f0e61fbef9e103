#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace ellchow {

// Sparse bivariate polynomial with a weighted grading, generic over the
// coefficient ring C (Rational or UniPoly) and a variable policy V supplying
// the two weights. No zero coefficient is ever stored; terms iterate in
// descending lexicographic order on the exponent pair.
//
// C must provide: default construction to zero, construction from int,
// +=, *, unary -, ==, is_zero().
template <class C, class V>
class Bivariate {
 public:
  using Monomial = std::pair<int, int>;
  using TermMap = std::map<Monomial, C, std::greater<Monomial>>;

  Bivariate() = default;

  static Bivariate zero() { return {}; }
  static Bivariate constant(C c) { return monomial(0, 0, std::move(c)); }
  static Bivariate one() { return constant(C(1)); }
  static Bivariate monomial(int i, int j, C c) {
    Bivariate p;
    if (!c.is_zero()) p.t_.emplace(Monomial{i, j}, std::move(c));
    return p;
  }
  static Bivariate var0() { return monomial(1, 0, C(1)); }
  static Bivariate var1() { return monomial(0, 1, C(1)); }

  static constexpr int weighted_degree(Monomial m) {
    return m.first * V::weights[0] + m.second * V::weights[1];
  }

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }

  C coeff(int i, int j) const {
    auto it = t_.find(Monomial{i, j});
    return it == t_.end() ? C() : it->second;
  }

  // Degree shared by all monomials, or nullopt when zero or inhomogeneous.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : t_) {
      int w = weighted_degree(m);
      if (!d)
        d = w;
      else if (*d != w)
        return std::nullopt;
    }
    return d;
  }

  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous_of(int d) const {
    for (const auto& [m, c] : t_)
      if (weighted_degree(m) != d) return false;
    return true;
  }

  Bivariate operator-() const {
    Bivariate p = *this;
    for (auto& [m, c] : p.t_) c = -c;
    return p;
  }

  Bivariate& operator+=(const Bivariate& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Bivariate& operator-=(const Bivariate& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
  friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }

  friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
    Bivariate p;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_)
        p.add_term(Monomial{ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return p;
  }

  friend Bivariate operator*(const C& s, const Bivariate& p) {
    Bivariate q;
    for (const auto& [m, c] : p.t_) q.add_term(m, s * c);
    return q;
  }

  friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Bivariate& a, const Bivariate& b) { return !(a == b); }

  // Coefficient-wise image under f; drops terms that map to zero.
  template <class F>
  auto map_coeffs(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    Bivariate<D, V> q;
    for (const auto& [m, c] : t_) q.add_term(m, f(c));
    return q;
  }

  void add_term(Monomial m, C c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

 private:
  TermMap t_;
};

}  // namespace ellchow

#include "dm/poly.hpp"

#include <algorithm>

namespace dm {

namespace {

// cpp_rational::str() renders "p" or "p/q" as appropriate.
std::string rat_str(const Rational& r) { return r.str(); }

std::string term_body(const Rational& abs_coeff, int deg, const char* var) {
  std::string s;
  if (deg == 0 || abs_coeff != 1) s += rat_str(abs_coeff);
  if (deg > 0) {
    s += var;
    if (deg > 1) s += "^" + std::to_string(deg);
  }
  return s;
}

}  // namespace

Poly::Poly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

Poly Poly::monomial(int deg, Rational coeff) {
  Poly p;
  if (coeff != 0) {
    p.c_.assign(deg + 1, Rational(0));
    p.c_[deg] = std::move(coeff);
  }
  return p;
}

Rational Poly::at(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

void Poly::add_term(int deg, const Rational& coeff) {
  if (deg >= static_cast<int>(c_.size())) c_.resize(deg + 1, Rational(0));
  c_[deg] += coeff;
  trim();
}

Rational Poly::eval(const Rational& y) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * y + c_[i];
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Poly Poly::compose_linear(const Rational& a, const Rational& b) const {
  Poly lin;
  lin.c_ = {b, a};
  lin.trim();
  Poly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
  return r;
}

std::string Poly::pretty() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += term_body(a, i, "y");
  }
  return s;
}

std::string Poly::coeffs_line() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += " ";
    s += rat_str(c_[i]);
  }
  return s;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TuttePoly TuttePoly::one() {
  TuttePoly t;
  t.c_ = {{Rational(1)}};
  return t;
}

Rational TuttePoly::at(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  if (j < 0 || j >= static_cast<int>(c_[i].size())) return Rational(0);
  return c_[i][j];
}

void TuttePoly::add_term(int i, int j, const Rational& coeff) {
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
  if (j >= static_cast<int>(c_[i].size())) c_[i].resize(j + 1, Rational(0));
  c_[i][j] += coeff;
  trim();
}

TuttePoly operator+(const TuttePoly& a, const TuttePoly& b) {
  TuttePoly r = a;
  for (size_t i = 0; i < b.c_.size(); ++i)
    for (size_t j = 0; j < b.c_[i].size(); ++j)
      if (b.c_[i][j] != 0) r.add_term(static_cast<int>(i), static_cast<int>(j), b.c_[i][j]);
  r.trim();
  return r;
}

TuttePoly TuttePoly::mul_x() const {
  TuttePoly r;
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j)
      if (c_[i][j] != 0) r.add_term(static_cast<int>(i) + 1, static_cast<int>(j), c_[i][j]);
  return r;
}

TuttePoly TuttePoly::mul_y() const {
  TuttePoly r;
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j)
      if (c_[i][j] != 0) r.add_term(static_cast<int>(i), static_cast<int>(j) + 1, c_[i][j]);
  return r;
}

Rational TuttePoly::eval(const Rational& x, const Rational& y) const {
  Rational r(0), xp(1);
  for (size_t i = 0; i < c_.size(); ++i) {
    Rational row(0);
    for (size_t j = c_[i].size(); j-- > 0;) row = row * y + c_[i][j];
    r += xp * row;
    xp *= x;
  }
  return r;
}

std::string TuttePoly::pretty() const {
  std::string s;
  for (size_t i = c_.size(); i-- > 0;)
    for (size_t j = 0; j < c_[i].size(); ++j) {
      const Rational& c = c_[i][j];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      std::string xs = term_body(a, static_cast<int>(i), "x");
      if (j > 0) {
        // strip the bare coefficient "1" when the y part carries the term
        std::string ys = term_body(Rational(1), static_cast<int>(j), "y");
        if (i == 0 && a == 1)
          s += ys;
        else
          s += xs + ys;
      } else {
        s += xs;
      }
    }
  return s.empty() ? "0" : s;
}

void TuttePoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

}  // namespace dm

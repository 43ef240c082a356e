#pragma once
// Exact univariate polynomials in y with rational coefficients, plus the
// two-variable coefficient grid backing the Tutte polynomial.  Coefficient
// lists are ascending by degree and never carry trailing zeros; the zero
// polynomial is the empty list.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace dm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  static Poly monomial(int deg, Rational coeff = Rational(1));

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero: -1
  Rational at(int i) const;

  void add_term(int deg, const Rational& coeff);

  Rational eval(const Rational& y) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // p(a y + b).
  Poly compose_linear(const Rational& a, const Rational& b) const;

  // Descending pretty form, "y^4 - 8y^3 + 35y^2 - 56y + 28"; "0" when zero.
  std::string pretty() const;
  // Ascending coefficients joined by spaces, "28 -56 35 -8 1"; "0" when zero.
  std::string coeffs_line() const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[i] is the coefficient of y^i
};

class TuttePoly {
 public:
  TuttePoly() = default;
  static TuttePoly one();

  Rational at(int i, int j) const;       // coefficient of x^i y^j
  void add_term(int i, int j, const Rational& coeff);

  bool is_zero() const { return c_.empty(); }
  // Row i holds the coefficients of x^i, ascending in y.
  const std::vector<std::vector<Rational>>& grid() const { return c_; }

  friend TuttePoly operator+(const TuttePoly& a, const TuttePoly& b);
  TuttePoly mul_x() const;
  TuttePoly mul_y() const;

  Rational eval(const Rational& x, const Rational& y) const;

  friend bool operator==(const TuttePoly& a, const TuttePoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TuttePoly& a, const TuttePoly& b) {
    return !(a == b);
  }

  // Terms ordered by descending x power, then ascending y power.
  std::string pretty() const;

 private:
  void trim();
  std::vector<std::vector<Rational>> c_;  // c_[i][j]: coefficient of x^i y^j
};

}  // namespace dm

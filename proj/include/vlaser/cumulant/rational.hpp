#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "vlaser/core/error.hpp"

namespace vlaser::cumulant {

// Exact rational with int64 storage; coefficients in the moment equations
// stay tiny (products of 1/2 and small integers), so overflow is not a
// practical concern but is still checked in debug via gcd normalization.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, "Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  double to_double() const { return double(num) / double(den); }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator-(Rational a) { return Rational(-a.num, a.den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Complex number with exact rational parts.
struct CRational {
  Rational re, im;

  CRational() = default;
  CRational(Rational r) : re(r) {}
  CRational(Rational r, Rational i) : re(r), im(i) {}
  static CRational real(std::int64_t n, std::int64_t d = 1) { return CRational(Rational(n, d)); }
  static CRational imag(std::int64_t n, std::int64_t d = 1) {
    return CRational(Rational(0), Rational(n, d));
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CRational conj() const { return CRational(re, -im); }

  friend CRational operator+(const CRational& a, const CRational& b) {
    return CRational(a.re + b.re, a.im + b.im);
  }
  friend CRational operator-(const CRational& a, const CRational& b) {
    return CRational(a.re - b.re, a.im - b.im);
  }
  friend CRational operator*(const CRational& a, const CRational& b) {
    return CRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend CRational operator-(const CRational& a) { return CRational(-a.re, -a.im); }
  friend bool operator==(const CRational& a, const CRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  // (re), (imi) or (re+imi); always parenthesized for easy parsing
  std::string str() const {
    if (im.is_zero()) return "(" + re.str() + ")";
    if (re.is_zero()) return "(" + im.str() + "i)";
    std::string s = "(" + re.str();
    if (im > Rational(0)) s += "+";
    return s + im.str() + "i)";
  }
};

}  // namespace vlaser::cumulant

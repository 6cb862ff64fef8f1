#pragma once

// Exact scalar fields used throughout the library: the rationals Q and the
// Gaussian rationals Q(i).  Everything is arbitrary precision (GMP) and
// division by zero always throws; no operation ever produces a NaN or an
// approximate value.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace phl {

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(static_cast<long>(n)) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  // Accepts "p" or "p/q" with optional sign.
  explicit Rat(const std::string& s) {
    v_ = mpq_class(s);
    if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(1) / v_);
  }

  // Canonical "p" or "p/q" rendering.
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

// Element of Q(i).
struct GaussRat {
  Rat re, im;

  GaussRat() = default;
  GaussRat(int n) : re(n) {}
  GaussRat(long n) : re(n) {}
  GaussRat(long num, long den) : re(num, den) {}
  GaussRat(const Rat& r) : re(r) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GaussRat conj() const { return GaussRat(re, -im); }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rat n = o.re * o.re + o.im * o.im;
    if (n.is_zero()) throw std::domain_error("GaussRat: division by zero");
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { a *= b; return a; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { a /= b; return a; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const {
    if (is_zero()) throw std::domain_error("GaussRat: division by zero");
    return GaussRat(1) / *this;
  }

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string i_part = im.to_string() + "*i";
    if (re.is_zero()) return i_part;
    if (im.sign() > 0) return re.to_string() + "+" + i_part;
    return re.to_string() + i_part;  // im already carries the minus sign
  }
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const GaussRat& x) { return x.is_zero(); }
inline std::string to_string(const Rat& x) { return x.to_string(); }
inline std::string to_string(const GaussRat& x) { return x.to_string(); }

template <class F>
struct FieldInfo;

template <>
struct FieldInfo<Rat> {
  static constexpr const char* name() { return "rational"; }
  static Rat imaginary_unit() {
    throw std::domain_error("rational field has no imaginary unit");
  }
};

template <>
struct FieldInfo<GaussRat> {
  static constexpr const char* name() { return "gaussian"; }
  static GaussRat imaginary_unit() { return GaussRat::i(); }
};

// Exact fraction p/q as an element of F (well defined for both fields).
template <class F>
inline F frac(long p, long q) {
  return F(Rat(p, q));
}
template <>
inline Rat frac<Rat>(long p, long q) {
  return Rat(p, q);
}

}  // namespace phl

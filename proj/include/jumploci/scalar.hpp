#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace jumploci {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class Field { rational, gaussian };

inline std::string field_name(Field f) {
  return f == Field::rational ? "rational" : "gaussian";
}

inline Field field_from_name(const std::string& s) {
  if (s == "rational") return Field::rational;
  if (s == "gaussian") return Field::gaussian;
  throw std::invalid_argument("unknown field: " + s);
}

/* Element of Q(i), stored as exact real and imaginary rational parts.
   Values used in rational-field contexts keep im == 0.  All arithmetic is
   exact; division by zero throws. */
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  Scalar(BigRat re) : re_(std::move(re)), im_(0) {}
  Scalar(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(BigRat(0), BigRat(1)); }

  const BigRat& re() const { return re_; }
  const BigRat& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    BigRat r = re_ * o.re_ - im_ * o.im_;
    BigRat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  Scalar inv() const {
    BigRat n = re_ * re_ + im_ * im_;
    if (n == 0) throw std::domain_error("division by zero");
    return Scalar(re_ / n, -im_ / n);
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  BigRat re_, im_;
};

inline std::string rat_str(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

/* Parses "p", "-p", or "p/q" into an exact rational. */
inline BigRat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
  }
}

inline std::string Scalar::str() const {
  if (im_ == 0) return rat_str(re_);
  return rat_str(re_) + (im_ > 0 ? "+" : "-") + rat_str(boost::multiprecision::abs(im_)) + "i";
}

}  // namespace jumploci

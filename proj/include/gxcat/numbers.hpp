#pragma once

// Exact scalars used across the library:
//  - residues in Z/N (cocycle values, braiding phases),
//  - quadratic surds (a + b*sqrt(m)) / den for quantum dimensions,
//  - Real: a surd when exactness survives, otherwise a float with an error bound,
//  - Turn: a rational fraction of a full turn, i.e. an exact root of unity.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gxcat/errors.hpp"

namespace gxcat {

inline constexpr double kTolerance = 1e-9;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd64(a, b) * b;
}

// Extended Euclid: returns g = gcd(a,b) and s,t with s*a + t*b = g.
struct Bezout {
  std::int64_t g, s, t;
};

inline Bezout bezout(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

namespace detail {

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("gxcat: exact arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

// m = s^2 * core with core squarefree; returns {s, core}.
inline std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t m) {
  std::int64_t s = 1, core = 1, rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) core *= p;
  }
  core *= rest;
  return {s, core};
}

}  // namespace detail

/// (a + b*sqrt(m)) / den with m squarefree and den > 0; m == 1 means rational.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(std::int64_t integer) : a_(integer) {}  // NOLINT
  QuadraticNumber(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t den = 1)
      : a_(a), b_(b), m_(m), den_(den) {
    if (den_ == 0) throw std::domain_error("gxcat: zero denominator");
    if (m_ < 1) throw std::domain_error("gxcat: only real quadratic fields are supported");
    normalize();
  }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t m() const { return m_; }
  std::int64_t den() const { return den_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && den_ == 1; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  double to_double() const {
    return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(m_))) /
           static_cast<double>(den_);
  }

  // Two numbers can be combined exactly if they live in a common field.
  static bool compatible(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.is_rational() || y.is_rational() || x.m_ == y.m_;
  }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (!compatible(x, y)) throw std::domain_error("gxcat: incompatible quadratic fields");
    std::int64_t m = x.is_rational() ? y.m_ : x.m_;
    __int128 a = static_cast<__int128>(x.a_) * y.den_ + static_cast<__int128>(y.a_) * x.den_;
    __int128 b = static_cast<__int128>(x.b_) * y.den_ + static_cast<__int128>(y.b_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return from_wide(a, b, m, d);
  }

  friend QuadraticNumber operator-(const QuadraticNumber& x) {
    return QuadraticNumber(-x.a_, -x.b_, x.m_, x.den_);
  }

  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (!compatible(x, y)) throw std::domain_error("gxcat: incompatible quadratic fields");
    std::int64_t m = x.is_rational() ? y.m_ : x.m_;
    __int128 a = static_cast<__int128>(x.a_) * y.a_ + static_cast<__int128>(x.b_) * y.b_ * m;
    __int128 b = static_cast<__int128>(x.a_) * y.b_ + static_cast<__int128>(x.b_) * y.a_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return from_wide(a, b, m, d);
  }

  QuadraticNumber conjugate() const { return QuadraticNumber(a_, -b_, m_, den_); }

  // a^2 - m b^2 over den^2
  QuadraticNumber norm() const {
    __int128 n = static_cast<__int128>(a_) * a_ - static_cast<__int128>(b_) * b_ * m_;
    return from_wide(n, 0, 1, static_cast<__int128>(den_) * den_);
  }

  QuadraticNumber inverse() const {
    if (is_zero()) throw std::domain_error("gxcat: division by zero");
    QuadraticNumber n = norm();  // rational
    QuadraticNumber c = conjugate();
    // c / n
    return c * QuadraticNumber(n.den_, 0, 1, n.a_);
  }

  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x * y.inverse();
  }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_ && x.den_ == y.den_;
  }

  std::string to_string() const {
    std::string s;
    if (b_ == 0) {
      s = std::to_string(a_);
    } else {
      s = "(" + std::to_string(a_) + (b_ < 0 ? "-" : "+") + std::to_string(b_ < 0 ? -b_ : b_) + "*sqrt(" +
          std::to_string(m_) + "))";
    }
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static QuadraticNumber from_wide(__int128 a, __int128 b, std::int64_t m, __int128 d) {
    __int128 g = gcd128(gcd128(a, b), d);
    if (g > 1) {
      a /= g;
      b /= g;
      d /= g;
    }
    QuadraticNumber r;
    r.a_ = detail::narrow(a);
    r.b_ = detail::narrow(b);
    r.m_ = m;
    r.den_ = detail::narrow(d);
    r.normalize();
    return r;
  }

  static __int128 gcd128(__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  }

  void normalize() {
    if (m_ != 1) {
      auto [s, core] = detail::squarefree_split(m_);
      b_ = detail::narrow(static_cast<__int128>(b_) * s);
      m_ = core;
    }
    if (m_ == 1) {
      a_ = detail::narrow(static_cast<__int128>(a_) + b_);
      b_ = 0;
    }
    if (b_ == 0) m_ = 1;
    if (den_ < 0) {
      den_ = -den_;
      a_ = -a_;
      b_ = -b_;
    }
    std::int64_t g = gcd64(gcd64(a_, b_), den_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      den_ /= g;
    }
  }

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t m_ = 1;
  std::int64_t den_ = 1;
};

/// A real number that is exact (quadratic surd) whenever possible; operations
/// falling outside a single quadratic field, or overflowing, degrade to a
/// float carrying an absolute error bound.
class Real {
 public:
  Real() = default;
  Real(std::int64_t v) : exact_(QuadraticNumber(v)) {}  // NOLINT
  Real(const QuadraticNumber& q) : exact_(q) {}         // NOLINT
  static Real approx(double value, double err) {
    Real r;
    r.exact_.reset();
    r.value_ = value;
    r.err_ = err;
    return r;
  }

  bool is_exact() const { return exact_.has_value(); }
  const QuadraticNumber& exact() const { return *exact_; }
  double to_double() const { return exact_ ? exact_->to_double() : value_; }
  double error_bound() const { return exact_ ? 0.0 : err_; }

  friend Real operator+(const Real& x, const Real& y) {
    return combine(x, y, [](const QuadraticNumber& p, const QuadraticNumber& q) { return p + q; },
                   x.to_double() + y.to_double(), x.error_bound() + y.error_bound());
  }
  friend Real operator-(const Real& x, const Real& y) {
    return combine(x, y, [](const QuadraticNumber& p, const QuadraticNumber& q) { return p - q; },
                   x.to_double() - y.to_double(), x.error_bound() + y.error_bound());
  }
  friend Real operator*(const Real& x, const Real& y) {
    double ax = std::abs(x.to_double()), ay = std::abs(y.to_double());
    double err = ax * y.error_bound() + ay * x.error_bound() + x.error_bound() * y.error_bound();
    return combine(x, y, [](const QuadraticNumber& p, const QuadraticNumber& q) { return p * q; },
                   x.to_double() * y.to_double(), err + 1e-15 * ax * ay);
  }
  friend Real operator/(const Real& x, const Real& y) {
    double vy = y.to_double();
    double q = x.to_double() / vy;
    double err = (x.error_bound() + std::abs(q) * y.error_bound()) / (std::abs(vy) - y.error_bound()) +
                 1e-15 * std::abs(q);
    return combine(x, y, [](const QuadraticNumber& p, const QuadraticNumber& r) { return p / r; }, q, err);
  }
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }

  // Exact comparison when both sides are exact in one field; otherwise within
  // the combined error bound plus kTolerance.
  friend bool approx_equal(const Real& x, const Real& y, double tol = kTolerance) {
    if (x.exact_ && y.exact_ && QuadraticNumber::compatible(*x.exact_, *y.exact_)) {
      try {
        return (*x.exact_ - *y.exact_).is_zero();
      } catch (const std::overflow_error&) {
      }
    }
    return std::abs(x.to_double() - y.to_double()) <= tol + x.error_bound() + y.error_bound();
  }

  std::string to_string() const {
    if (exact_) return exact_->to_string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value_);
    return buf;
  }

 private:
  template <class Op>
  static Real combine(const Real& x, const Real& y, Op op, double value, double err) {
    if (x.exact_ && y.exact_ && QuadraticNumber::compatible(*x.exact_, *y.exact_)) {
      try {
        return Real(op(*x.exact_, *y.exact_));
      } catch (const std::overflow_error&) {
      }
    }
    return approx(value, err + 4e-16 * std::abs(value));
  }

  std::optional<QuadraticNumber> exact_ = QuadraticNumber(0);
  double value_ = 0.0;
  double err_ = 0.0;
};

/// An exact root of unity exp(2*pi*i*num/den), stored as a reduced fraction in [0,1).
class Turn {
 public:
  Turn() = default;
  Turn(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ <= 0) throw std::domain_error("gxcat: turn denominator must be positive");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  std::complex<double> value() const {
    double angle = 2.0 * M_PI * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
  }

  friend Turn operator+(const Turn& x, const Turn& y) {
    std::int64_t d = lcm64(x.den_, y.den_);
    return Turn(x.num_ * (d / x.den_) + y.num_ * (d / y.den_), d);
  }
  friend Turn operator-(const Turn& x) { return Turn(-x.num_, x.den_); }
  friend Turn operator-(const Turn& x, const Turn& y) { return x + (-y); }
  friend bool operator==(const Turn& x, const Turn& y) = default;

  // Recovers an exact turn from a unit complex number, searching denominators up to max_den.
  static std::optional<Turn> recognize(std::complex<double> z, std::int64_t max_den, double tol = 1e-7) {
    if (std::abs(std::abs(z) - 1.0) > tol) return std::nullopt;
    double t = std::arg(z) / (2.0 * M_PI);
    if (t < 0) t += 1.0;
    for (std::int64_t d = 1; d <= max_den; ++d) {
      double n = std::round(t * static_cast<double>(d));
      if (std::abs(n - t * static_cast<double>(d)) < tol * static_cast<double>(d)) {
        return Turn(static_cast<std::int64_t>(n), d);
      }
    }
    return std::nullopt;
  }

  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  void normalize() {
    num_ = mod(num_, den_);
    std::int64_t g = gcd64(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gxcat

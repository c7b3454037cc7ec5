#pragma once

// Truncated bivariate Taylor arithmetic in the chart variables (s, t).
//
// A Jet2<T, M> stores the raw mixed partial derivatives
//   d(i, j) = ∂^{i+j} f / ∂s^i ∂t^j   for i + j <= M
// at one point, not factorial-scaled Taylor coefficients. Products use the
// binomial Leibniz rule, and elementary functions are applied by composing
// with their univariate derivative sequence (Faà di Bruno via powers of
// f - f(0)).

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "surfrev/errors.hpp"
#include "surfrev/scalar.hpp"

namespace surfrev {

namespace detail {

constexpr long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

constexpr long long binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

template <class T>
std::string describe(const T& v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

template <class T, int M>
class Jet2 {
  static_assert(M >= 0 && M <= 4, "Jet2 supports orders 0..4");

 public:
  using value_type = T;
  static constexpr int order = M;
  static constexpr int size = (M + 1) * (M + 2) / 2;

  Jet2() = default;
  /// Constant jet.
  Jet2(const T& value) { d_[0] = value; }  // NOLINT(google-explicit-constructor)

  static Jet2 constant(const T& value) { return Jet2(value); }

  /// The coordinate function s seeded at s0.
  static Jet2 variable_s(const T& s0) {
    Jet2 j(s0);
    if constexpr (M >= 1) j(1, 0) = T(1);
    return j;
  }

  /// The coordinate function t seeded at t0.
  static Jet2 variable_t(const T& t0) {
    Jet2 j(t0);
    if constexpr (M >= 1) j(0, 1) = T(1);
    return j;
  }

  static constexpr int index(int i, int j) {
    const int n = i + j;
    return n * (n + 1) / 2 + j;
  }

  T& operator()(int i, int j) { return d_[index(i, j)]; }
  const T& operator()(int i, int j) const { return d_[index(i, j)]; }
  const T& value() const { return d_[0]; }

  /// ∂/∂s, one order lower.
  Jet2<T, M - 1> d_s() const
    requires(M >= 1)
  {
    Jet2<T, M - 1> r;
    for (int n = 0; n <= M - 1; ++n)
      for (int j = 0; j <= n; ++j) r(n - j, j) = (*this)(n - j + 1, j);
    return r;
  }

  /// ∂/∂t, one order lower.
  Jet2<T, M - 1> d_t() const
    requires(M >= 1)
  {
    Jet2<T, M - 1> r;
    for (int n = 0; n <= M - 1; ++n)
      for (int j = 0; j <= n; ++j) r(n - j, j) = (*this)(n - j, j + 1);
    return r;
  }

  template <int N>
  Jet2<T, N> truncate() const
    requires(N <= M)
  {
    Jet2<T, N> r;
    for (int k = 0; k < Jet2<T, N>::size; ++k) r.raw()[k] = d_[k];
    return r;
  }

  std::array<T, size>& raw() { return d_; }
  const std::array<T, size>& raw() const { return d_; }

  Jet2& operator+=(const Jet2& o) {
    for (int k = 0; k < size; ++k) d_[k] += o.d_[k];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    for (int k = 0; k < size; ++k) d_[k] -= o.d_[k];
    return *this;
  }
  Jet2& operator+=(const T& c) {
    d_[0] += c;
    return *this;
  }
  Jet2& operator-=(const T& c) {
    d_[0] -= c;
    return *this;
  }
  Jet2& operator*=(const T& c) {
    for (auto& v : d_) v *= c;
    return *this;
  }
  Jet2& operator*=(const Jet2& o) { return *this = *this * o; }
  Jet2& operator/=(const Jet2& o) { return *this = *this / o; }

  friend Jet2 operator-(const Jet2& a) {
    Jet2 r = a;
    for (auto& v : r.d_) v = -v;
    return r;
  }
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator+(Jet2 a, const T& c) { return a += c; }
  friend Jet2 operator+(const T& c, Jet2 a) { return a += c; }
  friend Jet2 operator-(Jet2 a, const T& c) { return a -= c; }
  friend Jet2 operator-(const T& c, const Jet2& a) { return -a + c; }
  friend Jet2 operator*(Jet2 a, const T& c) { return a *= c; }
  friend Jet2 operator*(const T& c, Jet2 a) { return a *= c; }
  friend Jet2 operator/(Jet2 a, const T& c) { return a *= (T(1) / c); }

  /// Leibniz product, truncated at order M.
  friend Jet2 operator*(const Jet2& f, const Jet2& g) {
    Jet2 r;
    for (int n = 0; n <= M; ++n) {
      for (int j = 0; j <= n; ++j) {
        const int i = n - j;
        T acc{};
        for (int k = 0; k <= i; ++k) {
          for (int l = 0; l <= j; ++l) {
            const auto c = static_cast<double>(detail::binomial(i, k) * detail::binomial(j, l));
            acc += c * (f(k, l) * g(i - k, j - l));
          }
        }
        r(i, j) = acc;
      }
    }
    return r;
  }

  friend Jet2 operator/(const Jet2& f, const Jet2& g) { return f * recip(g); }
  friend Jet2 operator/(const T& c, const Jet2& g) { return recip(g) * c; }

 private:
  std::array<T, size> d_{};
};

/// Composes a univariate function with f, given the function's derivatives
/// derivs[n] = φ^(n)(f.value()) for n = 0..M.
template <class T, int M>
Jet2<T, M> compose(const Jet2<T, M>& f, const std::array<T, M + 1>& derivs) {
  Jet2<T, M> delta = f;
  delta(0, 0) = T{};
  Jet2<T, M> result(derivs[0]);
  Jet2<T, M> power(T(1));
  for (int n = 1; n <= M; ++n) {
    power = power * delta;
    result += power * (derivs[n] / static_cast<double>(detail::factorial(n)));
  }
  return result;
}

template <class T, int M>
Jet2<T, M> sin(const Jet2<T, M>& f) {
  const T s = std::sin(f.value()), c = std::cos(f.value());
  const T cyc[4] = {s, c, -s, -c};
  std::array<T, M + 1> d;
  for (int n = 0; n <= M; ++n) d[n] = cyc[n % 4];
  return compose(f, d);
}

template <class T, int M>
Jet2<T, M> cos(const Jet2<T, M>& f) {
  const T s = std::sin(f.value()), c = std::cos(f.value());
  const T cyc[4] = {c, -s, -c, s};
  std::array<T, M + 1> d;
  for (int n = 0; n <= M; ++n) d[n] = cyc[n % 4];
  return compose(f, d);
}

template <class T, int M>
Jet2<T, M> sinh(const Jet2<T, M>& f) {
  const T s = std::sinh(f.value()), c = std::cosh(f.value());
  std::array<T, M + 1> d;
  for (int n = 0; n <= M; ++n) d[n] = (n % 2 == 0) ? s : c;
  return compose(f, d);
}

template <class T, int M>
Jet2<T, M> cosh(const Jet2<T, M>& f) {
  const T s = std::sinh(f.value()), c = std::cosh(f.value());
  std::array<T, M + 1> d;
  for (int n = 0; n <= M; ++n) d[n] = (n % 2 == 0) ? c : s;
  return compose(f, d);
}

template <class T, int M>
Jet2<T, M> exp(const Jet2<T, M>& f) {
  std::array<T, M + 1> d;
  d.fill(std::exp(f.value()));
  return compose(f, d);
}

/// f^p on the principal branch, p real. derivatives p(p-1)..(p-n+1) f^(p-n).
template <class T, int M>
Jet2<T, M> pow_real(const Jet2<T, M>& f, double p) {
  const T z = f.value();
  if (z == T(0) && (M >= 1 || p < 0)) {
    throw DomainError("pow_real(" + detail::describe(p) + ") at value 0");
  }
  const T zp = (p == 0.5) ? std::sqrt(z) : std::pow(z, T(p));
  std::array<T, M + 1> d;
  T falling(1);
  T zn(1);
  for (int n = 0; n <= M; ++n) {
    d[n] = falling * zp / zn;
    falling *= T(p - n);
    zn *= z;
  }
  return compose(f, d);
}

/// Principal square root; sqrt(-4) = 2i.
template <class T, int M>
Jet2<T, M> sqrt_principal(const Jet2<T, M>& f) {
  if (f.value() == T(0) && M >= 1) {
    throw DomainError("sqrt_principal at value 0 (derivatives unbounded)");
  }
  return pow_real(f, 0.5);
}

/// sqrt(|f|) for real f.
template <class T, int M>
Jet2<T, M> sqrt_abs(const Jet2<T, M>& f) {
  if constexpr (is_complex_v<T>) {
    if (!is_real(f.value())) {
      throw DomainError("sqrt_abs of non-real value " + detail::describe(f.value()));
    }
    return sqrt_principal(f * T(real_sign(f.value())));
  } else {
    return sqrt_principal(f.value() < 0 ? -f : f);
  }
}

/// Integer power; negative n requires a nonzero value.
template <class T, int M>
Jet2<T, M> powi(const Jet2<T, M>& f, int n) {
  const T z = f.value();
  if (n < 0 && z == T(0)) throw DivisionByZeroValue("powi(" + std::to_string(n) + ") at value 0");
  std::array<T, M + 1> d;
  T falling(1);
  for (int k = 0; k <= M; ++k) {
    if (n >= 0 && k > n) {
      d[k] = T(0);
    } else {
      T zk(1);
      const int e = n - k;
      if (e >= 0) {
        for (int q = 0; q < e; ++q) zk *= z;
      } else {
        for (int q = 0; q < -e; ++q) zk *= z;
        zk = T(1) / zk;
      }
      d[k] = falling * zk;
    }
    falling *= T(n - k);
  }
  return compose(f, d);
}

template <class T, int M>
Jet2<T, M> recip(const Jet2<T, M>& f) {
  if (f.value() == T(0)) throw DivisionByZeroValue("reciprocal of a jet with value 0");
  return powi(f, -1);
}

namespace detail {

template <class T>
bool real_valued(const T& z) {
  if constexpr (is_complex_v<T>) {
    return is_real(z);
  } else {
    return true;
  }
}

template <class T>
auto real_part(const T& z) {
  if constexpr (is_complex_v<T>) {
    return z.real();
  } else {
    return z;
  }
}

}  // namespace detail

/// Principal arcsine. Real input needs |x| < 1 (|x| <= 1 when M == 0).
template <class T, int M>
Jet2<T, M> asin(const Jet2<T, M>& f) {
  const T z = f.value();
  if (detail::real_valued(z)) {
    const auto x = std::abs(detail::real_part(z));
    if (x > 1 || (M >= 1 && x == 1)) {
      throw DomainError("asin at value " + detail::describe(z));
    }
  }
  std::array<T, M + 1> d;
  d[0] = std::asin(z);
  if constexpr (M >= 1) {
    // asin' = (1 - x^2)^(-1/2); its derivatives come from a univariate jet.
    const auto x = Jet2<T, M - 1>::variable_s(z);
    const auto h = pow_real(T(1) - x * x, -0.5);
    for (int n = 1; n <= M; ++n) d[n] = h(n - 1, 0);
  }
  return compose(f, d);
}

/// Principal inverse hyperbolic cosine. Real input needs x > 1 (x >= 1 when M == 0).
template <class T, int M>
Jet2<T, M> acosh(const Jet2<T, M>& f) {
  const T z = f.value();
  if (detail::real_valued(z)) {
    const auto x = detail::real_part(z);
    if (x < 1 || (M >= 1 && x == 1)) {
      throw DomainError("acosh at value " + detail::describe(z));
    }
  }
  std::array<T, M + 1> d;
  d[0] = std::acosh(z);
  if constexpr (M >= 1) {
    // acosh' = (x - 1)^(-1/2) (x + 1)^(-1/2), matching the principal branch.
    const auto x = Jet2<T, M - 1>::variable_s(z);
    const auto h = pow_real(x - T(1), -0.5) * pow_real(x + T(1), -0.5);
    for (int n = 1; n <= M; ++n) d[n] = h(n - 1, 0);
  }
  return compose(f, d);
}

// Plain-scalar counterparts with the same domain checks, so chart formulas
// can be written once and evaluated on jets or on extended-precision values.

inline ValueScalar sqrt_principal(const ValueScalar& z) { return std::sqrt(z); }

inline ValueScalar sqrt_abs(const ValueScalar& z) {
  if (!is_real(z, 1e-15L)) throw DomainError("sqrt_abs of non-real value " + detail::describe(z));
  return std::sqrt(ValueScalar(std::abs(z.real())));
}

inline ValueScalar asin(const ValueScalar& z) {
  if (is_real(z, 1e-15L) && std::abs(z.real()) > 1) {
    throw DomainError("asin at value " + detail::describe(z));
  }
  return std::asin(z);
}

inline ValueScalar acosh(const ValueScalar& z) {
  if (is_real(z, 1e-15L) && z.real() < 1) {
    throw DomainError("acosh at value " + detail::describe(z));
  }
  return std::acosh(z);
}

}  // namespace surfrev

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>

namespace surfrev {

/// Coordinate-space scalar. Real quantities carry im == 0.
using Scalar = std::complex<double>;

/// Extended-precision scalar used by the finite-difference engine.
using ValueScalar = std::complex<long double>;

template <class T>
struct is_complex : std::false_type {};
template <class R>
struct is_complex<std::complex<R>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

/// True when the imaginary part is negligible relative to the modulus.
template <class R>
bool is_real(const std::complex<R>& z, R tol = R(1e-12)) {
  return std::abs(z.imag()) <= tol * std::max(R(1), std::abs(z.real()));
}

/// |z| for real-valued z, modulus otherwise.
template <class R>
R real_abs(const std::complex<R>& z) {
  return is_real(z) ? std::abs(z.real()) : std::abs(z);
}

/// Sign of the real part (+1 for zero).
template <class R>
int real_sign(const std::complex<R>& z) {
  return z.real() < R(0) ? -1 : 1;
}

}  // namespace surfrev

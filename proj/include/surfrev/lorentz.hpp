#pragma once

#include <array>
#include <cmath>
#include <string>

#include "surfrev/errors.hpp"
#include "surfrev/scalar.hpp"

namespace surfrev {

/// Vector of Minkowski 3-space. T is a Scalar, a ValueScalar or a Jet2.
template <class T>
struct LVec3 {
  T x1{}, x2{}, x3{};

  T& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  const T& operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  LVec3& operator+=(const LVec3& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  LVec3& operator-=(const LVec3& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  template <class U>
  LVec3& operator*=(const U& c) {
    x1 *= c;
    x2 *= c;
    x3 *= c;
    return *this;
  }

  friend LVec3 operator+(LVec3 a, const LVec3& b) { return a += b; }
  friend LVec3 operator-(LVec3 a, const LVec3& b) { return a -= b; }
  friend LVec3 operator-(const LVec3& a) { return {-a.x1, -a.x2, -a.x3}; }
  template <class U>
  friend LVec3 operator*(const U& c, LVec3 a) {
    return a *= c;
  }
  template <class U>
  friend LVec3 operator*(LVec3 a, const U& c) {
    return a *= c;
  }

  /// Applies f to every component.
  template <class F>
  auto map(F&& f) const -> LVec3<decltype(f(x1))> {
    return {f(x1), f(x2), f(x3)};
  }
};

/// Index-1 scalar product X1Y1 + X2Y2 - X3Y3, bilinear (no conjugation).
template <class T>
T lorentz_dot(const LVec3<T>& x, const LVec3<T>& y) {
  return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3;
}

/// Lorentz cross product with the component signs (X2Y3-X3Y2, X3Y1-X1Y3, X2Y1-X1Y2).
/// The result is Lorentz-orthogonal to both factors.
template <class T>
LVec3<T> lorentz_cross(const LVec3<T>& x, const LVec3<T>& y) {
  return {x.x2 * y.x3 - x.x3 * y.x2, x.x3 * y.x1 - x.x1 * y.x3, x.x2 * y.x1 - x.x1 * y.x2};
}

/// Euclidean squared length of the component moduli.
template <class R>
R euclid_norm2(const LVec3<std::complex<R>>& x) {
  return std::norm(x.x1) + std::norm(x.x2) + std::norm(x.x3);
}

enum class CausalCharacter { SpaceLike, TimeLike, LightLike };

inline std::string to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::SpaceLike: return "space-like";
    case CausalCharacter::TimeLike: return "time-like";
    case CausalCharacter::LightLike: return "light-like";
  }
  return "?";
}

inline bool is_zero(const LVec3<Scalar>& x, double tol = 1e-12) {
  return std::sqrt(euclid_norm2(x)) <= tol;
}

/// Causal character of a real vector. The zero vector counts as space-like;
/// use is_zero to tell it apart.
inline CausalCharacter causal_character(const LVec3<Scalar>& x, double tol = 1e-12) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(x[i].imag()) > tol) {
      throw NonRealVector("component " + std::to_string(i + 1) + " has imaginary part " +
                          std::to_string(x[i].imag()));
    }
  }
  if (is_zero(x, tol)) return CausalCharacter::SpaceLike;
  const double q = lorentz_dot(x, x).real();
  const double scale = 1.0 + euclid_norm2(x);
  if (std::abs(q) <= tol * scale) return CausalCharacter::LightLike;
  return q > 0 ? CausalCharacter::SpaceLike : CausalCharacter::TimeLike;
}

/// How the norm in x_s × x_t / ‖x_s × x_t‖ is taken.
enum class NormMode {
  Absolute,  ///< ‖V‖ = sqrt(|⟨V,V⟩|); real result, ⟨N,N⟩ = sign⟨V,V⟩.
  Bilinear,  ///< ‖V‖ = principal sqrt(⟨V,V⟩); ⟨N,N⟩ = +1.
};

inline std::string to_string(NormMode m) {
  return m == NormMode::Absolute ? "absolute" : "bilinear";
}

struct Normalized {
  LVec3<Scalar> n;
  int epsilon = 1;
};

inline Normalized lorentz_normalize(const LVec3<Scalar>& x, NormMode mode, double tol = 1e-12) {
  const Scalar q = lorentz_dot(x, x);
  if (std::abs(q) <= tol * (1.0 + euclid_norm2(x))) {
    throw NullVector("<X,X> = " + std::to_string(std::abs(q)) + " is below tolerance");
  }
  if (mode == NormMode::Absolute) {
    if (!is_real(x.x1) || !is_real(x.x2) || !is_real(x.x3)) {
      throw NonRealVector("absolute normalization needs a real vector");
    }
    const int eps = real_sign(q);
    const double len = std::sqrt(std::abs(q.real()));
    return {x * (1.0 / len), eps};
  }
  return {x * (Scalar(1.0) / std::sqrt(q)), 1};
}

}  // namespace surfrev

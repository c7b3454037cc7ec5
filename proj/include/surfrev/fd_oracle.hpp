#pragma once

// Central finite differences with one Richardson step, used as the
// independent differentiation engine. Mixed partials are tensor products of
// second-order central stencils in s and t; the h and h/2 estimates are
// combined as (4 D(h/2) - D(h)) / 3.

#include <array>
#include <functional>
#include <string>
#include <type_traits>

#include "surfrev/errors.hpp"
#include "surfrev/scalar.hpp"

namespace surfrev {

/// Default oracle step.
inline constexpr double kDefaultFdStep = 1e-3;

namespace detail {

struct Stencil1D {
  int count;
  std::array<int, 5> offsets;
  std::array<long double, 5> weights;  // before division by h^n
};

constexpr Stencil1D central_stencil(int n) {
  switch (n) {
    case 0: return {1, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}};
    case 1: return {2, {-1, 1, 0, 0, 0}, {-0.5L, 0.5L, 0, 0, 0}};
    case 2: return {3, {-1, 0, 1, 0, 0}, {1, -2, 1, 0, 0}};
    case 3: return {4, {-2, -1, 1, 2, 0}, {-0.5L, 1, -1, 0.5L, 0}};
    case 4: return {5, {-2, -1, 0, 1, 2}, {1, -4, 6, -4, 1}};
    default: return {0, {}, {}};
  }
}

// Accumulation over scalar, array and LVec3-like values.
template <class V, class R>
void axpy(V& acc, R w, const V& v) {
  if constexpr (requires { acc[0]; std::tuple_size<V>::value; }) {
    for (std::size_t k = 0; k < std::tuple_size<V>::value; ++k) axpy(acc[k], w, v[k]);
  } else if constexpr (requires { acc.x1; }) {
    axpy(acc.x1, w, v.x1);
    axpy(acc.x2, w, v.x2);
    axpy(acc.x3, w, v.x3);
  } else {
    using C = std::remove_cvref_t<V>;
    if constexpr (is_complex_v<C>) {
      acc += static_cast<typename C::value_type>(w) * v;
    } else {
      acc += static_cast<C>(w) * v;
    }
  }
}

template <class V, class R>
V scaled(const V& v, R w) {
  V out{};
  axpy(out, w, v);
  return out;
}

template <class F, class R>
auto fd_single(F& field, R s, R t, int i, int j, R h) {
  using V = std::remove_cvref_t<decltype(field(s, t))>;
  const Stencil1D ss = central_stencil(i), st = central_stencil(j);
  V acc{};
  for (int a = 0; a < ss.count; ++a) {
    for (int b = 0; b < st.count; ++b) {
      const R w = static_cast<R>(ss.weights[a] * st.weights[b]);
      axpy(acc, w, field(s + ss.offsets[a] * h, t + st.offsets[b] * h));
    }
  }
  R scale = 1;
  for (int k = 0; k < i + j; ++k) scale *= h;
  return scaled(acc, R(1) / scale);
}

}  // namespace detail

/// Mixed partial ∂^{i+j} field / ∂s^i ∂t^j at (s, t), i + j <= 4.
///
/// field may return a complex scalar, a std::array of them or an LVec3.
/// When admissible is given, every stencil node is checked first.
template <class F, class R = long double>
auto fd_partial(F&& field, R s, R t, int i, int j, R h = R(kDefaultFdStep),
                const std::function<bool(R, R)>& admissible = {}) {
  if (i < 0 || j < 0 || i + j > 4) {
    throw DomainError("fd_partial supports orders up to 4, got (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  if (admissible) {
    const int reach = 2;
    for (int a = -reach; a <= reach; ++a)
      for (int b = -reach; b <= reach; ++b)
        if (!admissible(s + a * h, t + b * h))
          throw StencilOutsideDomain("node (" + std::to_string(static_cast<double>(s + a * h)) +
                                     ", " + std::to_string(static_cast<double>(t + b * h)) +
                                     ") rejected");
  }
  try {
    const auto coarse = detail::fd_single(field, s, t, i, j, h);
    const auto fine = detail::fd_single(field, s, t, i, j, h / 2);
    auto out = detail::scaled(fine, R(4) / 3);
    detail::axpy(out, R(-1) / 3, coarse);
    return out;
  } catch (const ExcludedPoint& e) {
    throw StencilOutsideDomain(e.what());
  }
}

/// Scalar oracle: one partial derivative of a complex-valued field.
inline Scalar fd_oracle(const std::function<Scalar(double, double)>& field, double s, double t,
                        int i, int j, double h = kDefaultFdStep,
                        const std::function<bool(double, double)>& admissible = {}) {
  return fd_partial(field, s, t, i, j, h, admissible);
}

}  // namespace surfrev

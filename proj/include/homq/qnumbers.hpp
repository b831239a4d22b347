#pragma once

#include "homq/scalar.hpp"

namespace homq {

// (n)_b = 1 + b + ... + b^{n-1}
inline Scalar q_number(int n, const Scalar& base) {
  Scalar s, p(1);
  for (int i = 0; i < n; ++i) {
    s += p;
    p *= base;
  }
  return s;
}

inline Scalar q_factorial(int n, const Scalar& base) {
  Scalar f(1);
  for (int i = 1; i <= n; ++i) f *= q_number(i, base);
  return f;
}

// q_factorial(n) / (q_factorial(k) q_factorial(n-k)); throws "pole" at a vanishing factorial
inline Scalar q_binomial(int n, int k, const Scalar& base) {
  if (k < 0 || k > n) return Scalar();
  Scalar den = q_factorial(k, base) * q_factorial(n - k, base);
  if (den.is_zero()) throw Error("pole", "q-factorial vanishes");
  return q_factorial(n, base) / den;
}

}  // namespace homq
